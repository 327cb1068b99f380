// Scratch: dump sorted p=5 period lists to identify the quantile convention.
#include <algorithm>
#include <iostream>

#include "padiccf/padiccf.hpp"

using namespace padiccf;

int main() {
  SweepConfig cfg = paper_profile();
  cfg.primes = {Prime(5)};
  cfg.parallelism = 1;
  auto outcomes = sweep_expansions(cfg);
  for (AlgorithmKind alg :
       {AlgorithmKind::BrowkinI, AlgorithmKind::BrowkinII, AlgorithmKind::New}) {
    std::vector<long long> ks;
    for (const auto& o : outcomes)
      if (o.alg == alg && o.status == ExpansionStatus::Periodic) ks.push_back(o.period);
    std::sort(ks.begin(), ks.end());
    std::cout << algorithm_token(alg) << " n=" << ks.size() << ":\n";
    for (std::size_t i = 0; i < ks.size(); ++i) std::cout << ks[i] << " ";
    std::cout << "\n";
    const double n = static_cast<double>(ks.size());
    auto stat = [&](double idx) { return ks[static_cast<std::size_t>(idx)]; };
    std::cout << "  ge-cover(0.75): " << detail::quantile_smallest_cover(ks, 3, 4)
              << "  ge-cover(0.9): " << detail::quantile_smallest_cover(ks, 9, 10) << "\n";
    std::cout << "  floor(qn) 1-idx: q75=" << stat(std::floor(0.75 * n) - 1)
              << " q90=" << stat(std::floor(0.9 * n) - 1) << "\n";
    std::cout << "  ceil(qn) 1-idx: q75=" << stat(std::ceil(0.75 * n) - 1)
              << " q90=" << stat(std::ceil(0.9 * n) - 1) << "\n";
    std::cout << "  round(qn) 1-idx: q75=" << stat(std::llround(0.75 * n) - 1)
              << " q90=" << stat(std::llround(0.9 * n) - 1) << "\n";
  }
  return 0;
}
