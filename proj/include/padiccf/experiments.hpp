// Copyright 2026 The padiccf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "padiccf/convergents.hpp"
#include "padiccf/expansion.hpp"
#include "padiccf/integer.hpp"
#include "padiccf/padic.hpp"
#include "padiccf/prime.hpp"
#include "padiccf/quadratic.hpp"
#include "padiccf/svg.hpp"
#include "padiccf/version.hpp"

namespace padiccf {

struct SweepConfig {
  std::vector<Prime> primes;
  long long dMax = 1000;
  long long maxSteps = 1000;
  std::vector<AlgorithmKind> algorithms{AlgorithmKind::BrowkinI, AlgorithmKind::BrowkinII,
                                        AlgorithmKind::New};
  int parallelism = 1;
  std::filesystem::path outDir;
};

// Small profile for quick runs: finishes in minutes on one core.
inline SweepConfig desk_profile() {
  SweepConfig cfg;
  for (long long p : {3, 5, 7, 11, 13}) cfg.primes.emplace_back(p);
  cfg.dMax = 300;
  cfg.maxSteps = 300;
  return cfg;
}

// Full profile: every odd prime below 100, D up to 1000, 1000 steps.
inline SweepConfig paper_profile() {
  SweepConfig cfg;
  for (long long p = 3; p < 100; p += 2)
    if (mpz_probab_prime_p(Int(p).backend().data(), 32) != 0) cfg.primes.emplace_back(p);
  cfg.dMax = 1000;
  cfg.maxSteps = 1000;
  return cfg;
}

// All non-square D in [1, dMax] with p not dividing D and D a quadratic
// residue mod p, i.e. exactly the D with sqrt(D) in Q_p and v_p(D) = 0.
inline std::vector<long long> eligible_D(const Prime& p, long long dMax) {
  std::vector<long long> out;
  const Int& pv = p.value();
  const Int exp = (pv - 1) / 2;
  for (long long d = 1; d <= dMax; ++d) {
    Int dv(d);
    if (is_perfect_square(dv)) continue;
    if (mod_floor(dv, pv) == 0) continue;
    if (boost::multiprecision::powm(dv, exp, pv) != 1) continue;
    out.push_back(d);
  }
  return out;
}

namespace detail {

// Runs f(0..n-1) on `jobs` threads. Each index must be independent; callers
// get determinism by writing to index-addressed slots.
template <class F>
void parallel_for(long long n, int jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (long long i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<long long> next{0};
  auto worker = [&] {
    for (;;) {
      const long long i = next.fetch_add(1);
      if (i >= n) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  const int count = static_cast<int>(std::min<long long>(jobs, n));
  pool.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Outcome of one expansion of sqrt(D).
struct SweepOutcome {
  long long primeIndex = 0;  // into cfg.primes
  AlgorithmKind alg = AlgorithmKind::New;
  long long D = 0;
  ExpansionStatus status = ExpansionStatus::Truncated;
  long long preperiod = 0;
  long long period = 0;
};

// Expands sqrt(D) for every (prime, algorithm, eligible D) of the config.
// Work items are independent; the result order is fixed by construction, so
// the outcome is identical for every parallelism degree.
inline std::vector<SweepOutcome> sweep_expansions(const SweepConfig& cfg) {
  std::vector<SweepOutcome> items;
  for (long long pi = 0; pi < static_cast<long long>(cfg.primes.size()); ++pi) {
    const std::vector<long long> ds = eligible_D(cfg.primes[static_cast<std::size_t>(pi)],
                                                 cfg.dMax);
    for (AlgorithmKind alg : cfg.algorithms)
      for (long long d : ds) {
        SweepOutcome o;
        o.primeIndex = pi;
        o.alg = alg;
        o.D = d;
        items.push_back(o);
      }
  }
  detail::parallel_for(
      static_cast<long long>(items.size()), cfg.parallelism, [&](long long i) {
        SweepOutcome& o = items[static_cast<std::size_t>(i)];
        const Prime& p = cfg.primes[static_cast<std::size_t>(o.primeIndex)];
        const QuadCtx ctx = QuadContext::with_sqrt(p, Int(o.D));
        const ExpansionResult res = expand(QuadElem::sqrt_d(ctx), o.alg, cfg.maxSteps);
        o.status = res.status;
        o.preperiod = res.preperiod;
        o.period = res.period;
      });
  return items;
}

// One row of the periodicity tables. meanPeriod is kept exact; rendering
// rounds half-up to two decimals. q75/q90 are the smallest observed period
// values covering at least 75%/90% of the detections.
struct TableRow {
  Int p;
  AlgorithmKind algorithm = AlgorithmKind::New;
  long long periodicCount = 0;
  Rat meanPeriod;
  long long q75 = 0;
  long long q90 = 0;
  long long total = 0;
};

// Fixed-point rendering of an exact rational, `decimals` digits after the
// point, ties rounded up (away from zero).
inline std::string format_fixed(const Rat& q, int decimals) {
  Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  const bool neg = num < 0;
  if (neg) num = -num;
  Int scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const Int scaled = (2 * num * scale + den) / (2 * den);  // round half up
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string fracStr = frac.str();
  while (static_cast<int>(fracStr.size()) < decimals) fracStr.insert(fracStr.begin(), '0');
  std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
  if (decimals > 0) out += "." + fracStr;
  return out;
}

namespace detail {

// The floor(q*n)-th smallest detected period (1-indexed, clamped to the
// first). This is the reading of "the value h such that q of the detected
// period lengths are <= h" that reproduces the reference tables.
inline long long quantile_rank_floor(const std::vector<long long>& sortedPeriods,
                                     long long num, long long den) {
  if (sortedPeriods.empty()) return 0;
  const long long total = static_cast<long long>(sortedPeriods.size());
  long long rank = num * total / den;
  if (rank < 1) rank = 1;
  return sortedPeriods[static_cast<std::size_t>(rank - 1)];
}

}  // namespace detail

inline std::vector<TableRow> make_table_rows(const SweepConfig& cfg,
                                             const std::vector<SweepOutcome>& outcomes) {
  std::vector<TableRow> rows;
  for (long long pi = 0; pi < static_cast<long long>(cfg.primes.size()); ++pi) {
    for (AlgorithmKind alg : cfg.algorithms) {
      TableRow row;
      row.p = cfg.primes[static_cast<std::size_t>(pi)].value();
      row.algorithm = alg;
      std::vector<long long> periods;
      for (const SweepOutcome& o : outcomes) {
        if (o.primeIndex != pi || o.alg != alg) continue;
        ++row.total;
        if (o.status == ExpansionStatus::Periodic) periods.push_back(o.period);
      }
      row.periodicCount = static_cast<long long>(periods.size());
      if (!periods.empty()) {
        long long sum = 0;
        for (long long k : periods) sum += k;
        row.meanPeriod = Rat(sum, row.periodicCount);
        std::sort(periods.begin(), periods.end());
        row.q75 = detail::quantile_rank_floor(periods, 3, 4);
        row.q90 = detail::quantile_rank_floor(periods, 9, 10);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// File emission. CSVs are UTF-8 with LF endings and a header row matching the
// row type's field names. The manifest (config + version + wall time) is the
// only artifact that carries a timestamp.

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

inline std::string table_csv(const std::vector<TableRow>& rows, AlgorithmKind alg,
                             bool exactMeans) {
  std::string csv = exactMeans
                        ? "p,algorithm,periodicCount,meanPeriodNum,meanPeriodDen,q75,q90,total\n"
                        : "p,algorithm,periodicCount,meanPeriod,q75,q90,total\n";
  for (const TableRow& r : rows) {
    if (r.algorithm != alg) continue;
    csv += r.p.str() + "," + std::string(algorithm_token(alg)) + "," +
           std::to_string(r.periodicCount) + ",";
    if (r.periodicCount == 0) {
      csv += exactMeans ? "none,none,none,none" : "none,none,none";
    } else if (exactMeans) {
      csv += boost::multiprecision::numerator(r.meanPeriod).str() + "," +
             boost::multiprecision::denominator(r.meanPeriod).str() + "," +
             std::to_string(r.q75) + "," + std::to_string(r.q90);
    } else {
      csv += format_fixed(r.meanPeriod, 2) + "," + std::to_string(r.q75) + "," +
             std::to_string(r.q90);
    }
    csv += "," + std::to_string(r.total) + "\n";
  }
  return csv;
}

inline nlohmann::json config_json(const SweepConfig& cfg) {
  nlohmann::json j;
  for (const Prime& p : cfg.primes) j["primes"].push_back(p.to_string());
  j["dMax"] = cfg.dMax;
  j["maxSteps"] = cfg.maxSteps;
  for (AlgorithmKind a : cfg.algorithms)
    j["algorithms"].push_back(std::string(algorithm_token(a)));
  j["parallelism"] = cfg.parallelism;
  return j;
}

inline void write_manifest(const std::filesystem::path& dir, const std::string& command,
                           const SweepConfig& cfg, long long wallMillis) {
  nlohmann::json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["config"] = config_json(cfg);
  j["wallMillis"] = wallMillis;
  const auto now = std::chrono::system_clock::now();
  j["generatedAtUnixMs"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               now.time_since_epoch())
                               .count();
  write_file(dir / (command + "_manifest.json"), j.dump(2) + "\n");
}

// Periodicity tables, one CSV per algorithm (rounded means) plus an exact
// companion, written to cfg.outDir.
inline std::vector<TableRow> run_table(const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepOutcome> outcomes = sweep_expansions(cfg);
  std::vector<TableRow> rows = make_table_rows(cfg, outcomes);
  std::filesystem::create_directories(cfg.outDir);
  for (AlgorithmKind alg : cfg.algorithms) {
    const std::string token(algorithm_token(alg));
    write_file(cfg.outDir / ("table_" + token + ".csv"), table_csv(rows, alg, false));
    write_file(cfg.outDir / ("table_" + token + "_exact.csv"), table_csv(rows, alg, true));
  }
  const long long wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  write_manifest(cfg.outDir, "table", cfg, wall);
  return rows;
}

// ---------------------------------------------------------------------------
// Pre-period statistics (BrowkinII).

struct PrePeriodRow {
  Int p;
  long long detections = 0;
  Rat meanPrePeriod;
  std::map<long long, long long> histogram;  // pre-period length -> count
};

inline std::vector<PrePeriodRow> make_preperiod_rows(const SweepConfig& cfg,
                                                     const std::vector<SweepOutcome>& outcomes) {
  std::vector<PrePeriodRow> rows;
  for (long long pi = 0; pi < static_cast<long long>(cfg.primes.size()); ++pi) {
    PrePeriodRow row;
    row.p = cfg.primes[static_cast<std::size_t>(pi)].value();
    long long sum = 0;
    for (const SweepOutcome& o : outcomes) {
      if (o.primeIndex != pi || o.alg != AlgorithmKind::BrowkinII) continue;
      if (o.status != ExpansionStatus::Periodic) continue;
      if (o.preperiod > 1 && o.preperiod % 2 != 0)
        throw InvariantViolationError(
            "BrowkinII pre-period must be 1 or even; sqrt(" + std::to_string(o.D) +
            ") at p=" + row.p.str() + " has h=" + std::to_string(o.preperiod));
      ++row.detections;
      sum += o.preperiod;
      ++row.histogram[o.preperiod];
    }
    if (row.detections > 0) row.meanPrePeriod = Rat(sum, row.detections);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Mean pre-periods of periodic BrowkinII expansions per prime, plus the
// pre-period histogram. Odd pre-periods greater than 1 are a hard error.
inline std::vector<PrePeriodRow> run_preperiod_stats(const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SweepConfig prepCfg = cfg;
  prepCfg.algorithms = {AlgorithmKind::BrowkinII};
  const std::vector<SweepOutcome> outcomes = sweep_expansions(prepCfg);
  std::vector<PrePeriodRow> rows = make_preperiod_rows(prepCfg, outcomes);
  std::filesystem::create_directories(cfg.outDir);
  std::string csv = "p,detections,meanPrePeriod\n";
  std::string hist = "p,prePeriod,count\n";
  for (const PrePeriodRow& r : rows) {
    csv += r.p.str() + "," + std::to_string(r.detections) + "," +
           (r.detections ? format_fixed(r.meanPrePeriod, 2) : std::string("none")) + "\n";
    for (const auto& [h, count] : r.histogram)
      hist += r.p.str() + "," + std::to_string(h) + "," + std::to_string(count) + "\n";
  }
  write_file(cfg.outDir / "prep.csv", csv);
  write_file(cfg.outDir / "prep_hist.csv", hist);
  const long long wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  write_manifest(cfg.outDir, "prep", cfg, wall);
  return rows;
}

// ---------------------------------------------------------------------------
// Approximation quality: mean v_p(B_n) after 10, 100 and 1000 steps.

struct ApproxRow {
  Int p;
  AlgorithmKind algorithm = AlgorithmKind::New;
  Rat meanVal10;
  Rat meanVal100;
  Rat meanVal1000;
};

inline constexpr long long kApproxSteps[3] = {10, 100, 1000};

// The denominator valuation reached after n computed partial quotients
// b_0 .. b_{n-1}, i.e. v_p(B_{n-1}) = sum_{i=1..n-1} v_p(b_i) by the
// verified digit-count identity. Checkpoints at n in {10, 100, 1000}.
// Periodic expansions are literally extended by unrolling their cycle, so
// every input contributes all three checkpoints no matter where its period
// was detected.
inline std::vector<ApproxRow> make_approx_rows(const SweepConfig& cfg) {
  struct Item {
    long long primeIndex;
    AlgorithmKind alg;
    long long D;
    long long vals[3] = {0, 0, 0};
  };
  std::vector<Item> items;
  for (long long pi = 0; pi < static_cast<long long>(cfg.primes.size()); ++pi) {
    const std::vector<long long> ds = eligible_D(cfg.primes[static_cast<std::size_t>(pi)],
                                                 cfg.dMax);
    for (AlgorithmKind alg : cfg.algorithms)
      for (long long d : ds) items.push_back(Item{pi, alg, d, {0, 0, 0}});
  }
  const long long needed = kApproxSteps[2];  // quotients b_0 .. b_999
  detail::parallel_for(
      static_cast<long long>(items.size()), cfg.parallelism, [&](long long i) {
        Item& it = items[static_cast<std::size_t>(i)];
        const Prime& p = cfg.primes[static_cast<std::size_t>(it.primeIndex)];
        const QuadCtx ctx = QuadContext::with_sqrt(p, Int(it.D));
        const ExpansionResult res =
            expand(QuadElem::sqrt_d(ctx), it.alg, std::max(cfg.maxSteps, needed));
        const std::vector<PartialQuotient> qs = extend_quotients(res, needed);
        long long sum = 0;
        std::size_t target = 0;
        for (long long n = 1; n < needed && target < 3; ++n) {
          sum += qs[static_cast<std::size_t>(n)].valuation(p);
          if (n == kApproxSteps[target] - 1) it.vals[target++] = sum;
        }
      });

  std::vector<ApproxRow> rows;
  for (long long pi = 0; pi < static_cast<long long>(cfg.primes.size()); ++pi) {
    for (AlgorithmKind alg : cfg.algorithms) {
      ApproxRow row;
      row.p = cfg.primes[static_cast<std::size_t>(pi)].value();
      row.algorithm = alg;
      long long sums[3] = {0, 0, 0}, count = 0;
      for (const Item& it : items) {
        if (it.primeIndex != pi || it.alg != alg) continue;
        ++count;
        for (int t = 0; t < 3; ++t) sums[t] += it.vals[t];
      }
      if (count > 0) {
        row.meanVal10 = Rat(sums[0], count);
        row.meanVal100 = Rat(sums[1], count);
        row.meanVal1000 = Rat(sums[2], count);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::vector<ApproxRow> run_approx(const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ApproxRow> rows = make_approx_rows(cfg);
  std::filesystem::create_directories(cfg.outDir);
  std::string csv = "p,algorithm,meanVal10,meanVal100,meanVal1000\n";
  std::string exact = "p,algorithm,meanVal10Num,meanVal10Den,meanVal100Num,meanVal100Den,"
                      "meanVal1000Num,meanVal1000Den\n";
  for (const ApproxRow& r : rows) {
    const std::string head = r.p.str() + "," + std::string(algorithm_token(r.algorithm));
    csv += head + "," + format_fixed(r.meanVal10, 2) + "," + format_fixed(r.meanVal100, 2) +
           "," + format_fixed(r.meanVal1000, 2) + "\n";
    exact += head;
    for (const Rat* q : {&r.meanVal10, &r.meanVal100, &r.meanVal1000})
      exact += "," + boost::multiprecision::numerator(*q).str() + "," +
               boost::multiprecision::denominator(*q).str();
    exact += "\n";
  }
  write_file(cfg.outDir / "approx.csv", csv);
  write_file(cfg.outDir / "approx_exact.csv", exact);
  const long long wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  write_manifest(cfg.outDir, "approx", cfg, wall);
  return rows;
}

// ---------------------------------------------------------------------------
// Classical real continued fraction of sqrt(D), for comparison.

// Period length of the real continued fraction of sqrt(D) (pre-period is
// always 1). Integer PQa recurrence, exact.
inline long long real_cf_period(const Int& D) {
  if (D < 2 || is_perfect_square(D))
    throw std::invalid_argument("real_cf_period: D must be a non-square >= 2");
  const Int a0 = boost::multiprecision::sqrt(D);
  const Int p1 = a0;
  const Int q1 = D - a0 * a0;
  Int p = p1, q = q1;
  long long k = 0;
  do {
    const Int a = (a0 + p) / q;
    const Int pNext = a * q - p;
    q = (D - pNext * pNext) / q;
    p = pNext;
    ++k;
  } while (p != p1 || q != q1);
  return k;
}

// ---------------------------------------------------------------------------
// Figures: SVG charts plus their backing CSVs.

// Emits three charts: periodic counts vs p, mean period vs p, and the
// scatter of period lengths against D at p = 5 (empty when p = 5 was not
// swept). Every chart gets a CSV with the same data.
inline void emit_figures(const SweepConfig& cfg, const std::vector<TableRow>& rows,
                         const std::vector<SweepOutcome>& outcomes,
                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const char* colors[] = {"#c0392b", "#2471a3", "#1e8449", "#8e44ad"};

  SvgChart counts("Periodic square roots of integers", "p", "periodic count");
  SvgChart means("Mean period of periodic square roots", "p", "mean period");
  std::string countsCsv = "p,algorithm,periodicCount\n";
  std::string meansCsv = "p,algorithm,meanPeriod\n";
  int ci = 0;
  for (AlgorithmKind alg : cfg.algorithms) {
    SvgChart::Series cs{std::string(algorithm_name(alg)), colors[ci % 4], true, {}};
    SvgChart::Series ms = cs;
    for (const TableRow& r : rows) {
      if (r.algorithm != alg) continue;
      const double p = r.p.convert_to<double>();
      cs.points.emplace_back(p, static_cast<double>(r.periodicCount));
      countsCsv += r.p.str() + "," + std::string(algorithm_token(alg)) + "," +
                   std::to_string(r.periodicCount) + "\n";
      if (r.periodicCount > 0) {
        ms.points.emplace_back(p, r.meanPeriod.convert_to<double>());
        meansCsv += r.p.str() + "," + std::string(algorithm_token(alg)) + "," +
                    format_fixed(r.meanPeriod, 2) + "\n";
      }
    }
    counts.add_series(std::move(cs));
    means.add_series(std::move(ms));
    ++ci;
  }

  SvgChart scatter("Period lengths at p = 5", "D", "period length");
  std::string scatterCsv = "D,algorithm,period\n";
  long long p5Index = -1;
  for (long long pi = 0; pi < static_cast<long long>(cfg.primes.size()); ++pi)
    if (cfg.primes[static_cast<std::size_t>(pi)].value() == 5) p5Index = pi;
  ci = 0;
  for (AlgorithmKind alg : cfg.algorithms) {
    SvgChart::Series s{std::string(algorithm_name(alg)), colors[ci % 4], false, {}};
    for (const SweepOutcome& o : outcomes) {
      if (o.primeIndex != p5Index || o.alg != alg) continue;
      if (o.status != ExpansionStatus::Periodic) continue;
      s.points.emplace_back(static_cast<double>(o.D), static_cast<double>(o.period));
      scatterCsv += std::to_string(o.D) + "," + std::string(algorithm_token(alg)) + "," +
                    std::to_string(o.period) + "\n";
    }
    scatter.add_series(std::move(s));
    ++ci;
  }

  write_file(dir / "fig_periodic_counts.svg", counts.render());
  write_file(dir / "fig_periodic_counts.csv", countsCsv);
  write_file(dir / "fig_mean_periods.svg", means.render());
  write_file(dir / "fig_mean_periods.csv", meansCsv);
  write_file(dir / "fig_period_lengths_p5.svg", scatter.render());
  write_file(dir / "fig_period_lengths_p5.csv", scatterCsv);
}

inline void run_figures(const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepOutcome> outcomes = sweep_expansions(cfg);
  const std::vector<TableRow> rows = make_table_rows(cfg, outcomes);
  emit_figures(cfg, rows, outcomes, cfg.outDir);
  const long long wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  write_manifest(cfg.outDir, "figures", cfg, wall);
}

}  // namespace padiccf
