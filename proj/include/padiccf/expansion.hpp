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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "padiccf/errors.hpp"
#include "padiccf/integer.hpp"
#include "padiccf/padic.hpp"
#include "padiccf/quadratic.hpp"

namespace padiccf {

// The four expansion algorithms.
//
//   BrowkinI    b_n = s(a_n) at every step.
//   BrowkinII   b_n = s(a_n) at even n; at odd n, t(a_n) when
//               v_p(a_n - t(a_n)) = 0 and t(a_n) - sign(t(a_n)) otherwise.
//   New         b_n = s(a_n) at even n, t(a_n) at odd n (sign-free).
//   NewSwapped  the same with the roles of s and t switched.
enum class AlgorithmKind { BrowkinI, BrowkinII, New, NewSwapped };

inline constexpr AlgorithmKind kAllAlgorithms[] = {
    AlgorithmKind::BrowkinI, AlgorithmKind::BrowkinII, AlgorithmKind::New,
    AlgorithmKind::NewSwapped};

inline std::string_view algorithm_token(AlgorithmKind alg) {
  switch (alg) {
    case AlgorithmKind::BrowkinI: return "b1";
    case AlgorithmKind::BrowkinII: return "b2";
    case AlgorithmKind::New: return "new";
    case AlgorithmKind::NewSwapped: return "new-swapped";
  }
  return "?";
}

inline std::string_view algorithm_name(AlgorithmKind alg) {
  switch (alg) {
    case AlgorithmKind::BrowkinI: return "Browkin I";
    case AlgorithmKind::BrowkinII: return "Browkin II";
    case AlgorithmKind::New: return "New";
    case AlgorithmKind::NewSwapped: return "New (s/t swapped)";
  }
  return "?";
}

inline std::optional<AlgorithmKind> algorithm_from_token(std::string_view token) {
  for (AlgorithmKind alg : kAllAlgorithms)
    if (token == algorithm_token(alg)) return alg;
  return std::nullopt;
}

// B: Q_p -> {-1, 0, +1}. Zero when the digit a_0 of x is nonzero, otherwise
// the Euclidean sign of t(x). This is exactly the sign correction BrowkinII
// applies at odd steps.
inline int b_classify(const QuadElem& x) {
  if (x.is_zero()) throw std::invalid_argument("b_classify: zero element");
  const long long v = x.valuation().value();
  if (v > 0)
    throw ImpossibleStateError("b_classify: a_0 = 0 and t(x) = 0 (v_p(x) > 0)");
  if (v == 0) return 0;  // leading digit sits at exponent 0
  const DigitWindow win = x.digits(0);
  if (win.digits.back() != 0) return 0;
  // t(x) != 0 here because the leading digit at exponent v < 0 is nonzero.
  for (auto it = win.digits.rbegin(); it != win.digits.rend(); ++it)
    if (*it != 0) return *it > 0 ? 1 : -1;
  throw ImpossibleStateError("b_classify: a_0 = 0 and t(x) = 0");
}

// One step of an expansion: the partial quotient, the next complete quotient
// (absent when the expansion terminates at this step), and the value of B
// when the BrowkinII sign branch was consulted (odd BrowkinII steps only).
struct StepResult {
  PartialQuotient b;
  std::optional<QuadElem> next;
  std::optional<int> signB;
};

inline StepResult step(AlgorithmKind alg, long long n, const QuadElem& x) {
  const bool even = n % 2 == 0;
  StepResult out;

  if (alg == AlgorithmKind::BrowkinII && !even && !x.is_zero()) {
    const long long v = x.valuation().value();
    if (v >= 0)
      throw ImpossibleStateError(
          "BrowkinII: t = 0 at odd step (v_p >= 0); sign(0) has no value");
    DigitWindow win = x.digits(0);
    const bool unitDigit = win.digits.back() != 0;
    win.digits.pop_back();  // keep exponents v..-1: the t floor
    PartialQuotient t = QuadElem::quotient_from_digits(win, x.prime());
    if (unitDigit) {
      out.b = std::move(t);
      out.signB = 0;
    } else {
      const int s = t.num > 0 ? 1 : -1;
      out.b = PartialQuotient{t.num - s * pow_int(x.prime().value(), t.pexp), t.pexp};
      out.signB = s;
    }
  } else {
    FloorKind kind;
    switch (alg) {
      case AlgorithmKind::BrowkinI: kind = FloorKind::S; break;
      case AlgorithmKind::BrowkinII: kind = FloorKind::S; break;  // even step
      case AlgorithmKind::New: kind = even ? FloorKind::S : FloorKind::T; break;
      case AlgorithmKind::NewSwapped: kind = even ? FloorKind::T : FloorKind::S; break;
      default: kind = FloorKind::S; break;
    }
    out.b = x.floor(kind);
  }

  QuadElem rest = x.sub(out.b);
  if (!rest.is_zero()) out.next = rest.invert();
  return out;
}

enum class ExpansionStatus { Finite, Periodic, Truncated };

inline std::string_view status_token(ExpansionStatus s) {
  switch (s) {
    case ExpansionStatus::Finite: return "finite";
    case ExpansionStatus::Periodic: return "periodic";
    case ExpansionStatus::Truncated: return "truncated";
  }
  return "?";
}

// A consultation of the sign branch: B(a_n) at the odd BrowkinII step n.
struct SignUse {
  long long stepIndex = 0;
  int value = 0;
};

struct ExpansionResult {
  std::vector<PartialQuotient> quotients;
  ExpansionStatus status = ExpansionStatus::Truncated;
  long long preperiod = 0;  // h, valid when Periodic
  long long period = 0;     // k, valid when Periodic
  long long steps = 0;      // quotients produced
  std::vector<SignUse> signTrace;  // BrowkinII runs only

  bool is_periodic() const { return status == ExpansionStatus::Periodic; }
};

// An expansion together with the complete quotients a_0, a_1, ... it visited.
struct ExpansionTrace {
  ExpansionResult result;
  std::vector<QuadElem> completeQuotients;
};

// Runs `alg` from x, visiting the complete quotients a_0 .. a_maxSteps.
//
// Termination (a_n equal to its own floor) reports Finite. An exact revisit
// of a canonical complete quotient at matching step parity reports Periodic
// with minimal pre-period h and minimal period k; parity is ignored for
// BrowkinI, which is not alternating. Everything else is Truncated. The
// quotient list carries b_0 .. b_{h+k-1} for periodic expansions.
inline ExpansionTrace expand_with_trace(const QuadElem& x, AlgorithmKind alg,
                                        long long maxSteps) {
  if (maxSteps < 1) throw std::invalid_argument("expand: maxSteps must be >= 1");
  const bool keyedParity = alg != AlgorithmKind::BrowkinI;

  ExpansionTrace trace;
  ExpansionResult& res = trace.result;
  std::vector<QuadElem>& states = trace.completeQuotients;
  states.reserve(static_cast<std::size_t>(std::min<long long>(maxSteps + 1, 1 << 12)));

  using StateKey = std::tuple<Int, Int, Int, int>;
  std::map<StateKey, long long> firstSeen;

  QuadElem cur = x;
  for (long long n = 0;; ++n) {
    states.push_back(cur);
    StateKey key{cur.a(), cur.b(), cur.c(), keyedParity ? static_cast<int>(n % 2) : 0};
    auto [it, inserted] = firstSeen.try_emplace(std::move(key), n);
    if (!inserted) {
      long long h = it->second;
      const long long k = n - h;
      // First revisit of a deterministic keyed orbit already gives minimal
      // (h, k); the walk-back below guards the minimality claim anyway.
      while (h > 0 && states[static_cast<std::size_t>(h - 1)] ==
                          states[static_cast<std::size_t>(h - 1 + k)] &&
             (!keyedParity || k % 2 == 0))
        --h;
      res.status = ExpansionStatus::Periodic;
      res.preperiod = h;
      res.period = k;
      res.quotients.resize(static_cast<std::size_t>(h + k));
      break;
    }
    if (n == maxSteps) {
      res.status = ExpansionStatus::Truncated;
      break;
    }
    StepResult st = step(alg, n, cur);
    res.quotients.push_back(std::move(st.b));
    if (st.signB && alg == AlgorithmKind::BrowkinII)
      res.signTrace.push_back(SignUse{n, *st.signB});
    if (!st.next) {
      res.status = ExpansionStatus::Finite;
      break;
    }
    cur = std::move(*st.next);
  }
  res.steps = static_cast<long long>(res.quotients.size());
  return trace;
}

inline ExpansionResult expand(const QuadElem& x, AlgorithmKind alg, long long maxSteps) {
  return expand_with_trace(x, alg, maxSteps).result;
}

// b_0 .. b_{count-1}, unrolling the cycle of a periodic expansion as far as
// needed. Finite and truncated expansions must already hold enough quotients.
inline std::vector<PartialQuotient> extend_quotients(const ExpansionResult& res,
                                                     long long count) {
  if (count <= static_cast<long long>(res.quotients.size()))
    return {res.quotients.begin(), res.quotients.begin() + count};
  if (res.status != ExpansionStatus::Periodic)
    throw std::out_of_range("extend_quotients: expansion has too few quotients");
  std::vector<PartialQuotient> out(res.quotients);
  out.reserve(static_cast<std::size_t>(count));
  const long long h = res.preperiod, k = res.period;
  for (long long i = static_cast<long long>(out.size()); i < count; ++i)
    out.push_back(out[static_cast<std::size_t>(h + (i - h) % k)]);
  return out;
}

// The Toeplitz matrix C_x of the theorem predicting sign usage one step
// ahead: n = v_p(x - s(x)) and the matrix is built from the digits
// c_n .. c_{2n} of x - s(x), first row (c_{n+1}, c_n, 0, ...), each
// following row shifting one digit deeper.
struct SignMatrix {
  long long n = 0;
  std::vector<Int> entries;  // row-major n*n

  const Int& at(long long i, long long j) const {
    return entries[static_cast<std::size_t>(i * n + j)];
  }
};

inline SignMatrix sign_matrix(const QuadElem& x) {
  const PartialQuotient s = x.floor(FloorKind::S);
  const QuadElem rest = x.sub(s);
  if (rest.is_zero())
    throw std::domain_error("sign_matrix: x equals its floor; expansion terminated");
  const long long n = rest.valuation().value();
  const DigitWindow win = rest.digits(2 * n);  // digits c_n .. c_{2n}

  SignMatrix m;
  m.n = n;
  m.entries.reserve(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      const long long digit = 1 + i - j;  // index of c_{n + digit} in the window
      if (digit < 0 || digit > n)
        m.entries.emplace_back(0);
      else
        m.entries.push_back(win.digits[static_cast<std::size_t>(digit)]);
    }
  }
  return m;
}

// Exact integer determinant (Bareiss fraction-free elimination).
inline Int det_bareiss(const SignMatrix& m) {
  const long long n = m.n;
  if (n == 0) return Int(1);
  std::vector<Int> a = m.entries;
  auto at = [&](long long i, long long j) -> Int& {
    return a[static_cast<std::size_t>(i * n + j)];
  };
  Int prev = 1;
  int sign = 1;
  for (long long k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      long long swap = -1;
      for (long long i = k + 1; i < n; ++i)
        if (at(i, k) != 0) { swap = i; break; }
      if (swap < 0) return Int(0);
      for (long long j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (long long i = k + 1; i < n; ++i) {
      for (long long j = k + 1; j < n; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

// The determinant test in both readings: over the integers and mod p
// (balanced residue). The predicted statement is "B of the next complete
// quotient is nonzero iff the determinant vanishes"; which ring the
// vanishing should be read in is exactly what predictor_agreement measures.
struct SignPrediction {
  Int detInt;
  Int detModP;
  bool predictedNonzeroB = false;  // detInt == 0 reading
};

inline SignPrediction predict_sign_usage(const QuadElem& x) {
  const SignMatrix m = sign_matrix(x);
  SignPrediction out;
  out.detInt = det_bareiss(m);
  out.detModP = balanced_digits_mod(out.detInt, x.prime(), 1).front();
  out.predictedNonzeroB = out.detInt == 0;
  return out;
}

// One even-step comparison of prediction against ground truth.
struct PredictorCase {
  std::string input;  // reproducer: the complete quotient the run started from
  long long evenStep = 0;
  Int detInt;
  Int detModP;
  bool truthNonzeroB = false;
};

struct PredictorReport {
  long long casesChecked = 0;
  long long agreeInt = 0;
  long long agreeModP = 0;
  std::vector<PredictorCase> disagreeInt;
  std::vector<PredictorCase> disagreeModP;
};

// Validation harness for the sign predictor: for every even step k of every
// trace, compare both determinant readings against the directly computed
// B(a_{k+1}) != 0. Disagreements carry a reproducer.
inline PredictorReport predictor_agreement(const std::vector<ExpansionTrace>& runs) {
  PredictorReport report;
  for (const ExpansionTrace& run : runs) {
    const auto& states = run.completeQuotients;
    if (states.empty()) continue;
    const std::string label =
        states.front().to_string() + " (p=" + states.front().prime().to_string() + ")";
    for (std::size_t k = 0; k + 1 < states.size(); k += 2) {
      const SignPrediction pred = predict_sign_usage(states[k]);
      const bool truth = b_classify(states[k + 1]) != 0;
      PredictorCase rec{label, static_cast<long long>(k), pred.detInt, pred.detModP,
                        truth};
      ++report.casesChecked;
      if ((pred.detInt == 0) == truth)
        ++report.agreeInt;
      else
        report.disagreeInt.push_back(rec);
      if ((pred.detModP == 0) == truth)
        ++report.agreeModP;
      else
        report.disagreeModP.push_back(std::move(rec));
    }
  }
  return report;
}

}  // namespace padiccf
