// Scratch: p=5 full-profile table/prep/approx row check (development only).
#include <chrono>
#include <iostream>

#include "padiccf/padiccf.hpp"

using namespace padiccf;

int main(int argc, char** argv) {
  SweepConfig cfg = paper_profile();
  cfg.primes = {Prime(5)};
  if (argc > 1) cfg.primes = {Prime(std::stoll(argv[1]))};
  cfg.parallelism = 1;

  auto t0 = std::chrono::steady_clock::now();
  auto outcomes = sweep_expansions(cfg);
  auto rows = make_table_rows(cfg, outcomes);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "sweep wall: "
            << std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count() << "s\n";
  for (const auto& r : rows)
    std::cout << "p=" << r.p << " " << algorithm_token(r.algorithm) << ": periodic="
              << r.periodicCount << " mean=" << format_fixed(r.meanPeriod, 2)
              << " q75=" << r.q75 << " q90=" << r.q90 << " total=" << r.total << "\n";

  auto prep = make_preperiod_rows(cfg, outcomes);
  for (const auto& r : prep)
    std::cout << "prep p=" << r.p << ": detections=" << r.detections
              << " mean=" << format_fixed(r.meanPrePeriod, 2) << "\n";

  auto t2 = std::chrono::steady_clock::now();
  auto approx = make_approx_rows(cfg);
  auto t3 = std::chrono::steady_clock::now();
  std::cout << "approx wall: "
            << std::chrono::duration_cast<std::chrono::seconds>(t3 - t2).count() << "s\n";
  for (const auto& r : approx)
    std::cout << "approx p=" << r.p << " " << algorithm_token(r.algorithm) << ": "
              << format_fixed(r.meanVal10, 2) << " " << format_fixed(r.meanVal100, 2)
              << " " << format_fixed(r.meanVal1000, 2) << "\n";
  return 0;
}
