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

#include <vector>

#include "padiccf/errors.hpp"
#include "padiccf/expansion.hpp"
#include "padiccf/integer.hpp"
#include "padiccf/padic.hpp"
#include "padiccf/quadratic.hpp"

namespace padiccf {

// Numerator/denominator of the n-th convergent A_n/B_n, as exact rationals.
// Seeds: A_{-1} = 1, B_{-1} = 0, A_0 = b_0, B_0 = 1.
struct Convergent {
  Rat A;
  Rat B;
  long long n = 0;
};

inline Valuation vp_rational(const Rat& q, const Prime& p) {
  if (q == 0) return Valuation::infinity();
  return Valuation(vp_nonzero(boost::multiprecision::numerator(q), p.value()) -
                   vp_nonzero(boost::multiprecision::denominator(q), p.value()));
}

// Convergents A_0/B_0 .. A_upTo/B_upTo of the recurrence
// A_n = b_n A_{n-1} + A_{n-2}, B_n = b_n B_{n-1} + B_{n-2}.
inline std::vector<Convergent> convergent_seq(const std::vector<PartialQuotient>& quotients,
                                              long long upTo, const Prime& p) {
  if (upTo < 0 || upTo >= static_cast<long long>(quotients.size()))
    throw std::out_of_range("convergent_seq: not enough quotients");
  std::vector<Convergent> out;
  out.reserve(static_cast<std::size_t>(upTo + 1));
  Rat aPrev = 1, aPrevPrev = 0;  // A_{-1} = 1, A_{-2} = 0
  Rat bPrev = 0, bPrevPrev = 1;  // B_{-1} = 0, B_{-2} = 1
  for (long long n = 0; n <= upTo; ++n) {
    const Rat b = quotients[static_cast<std::size_t>(n)].value(p);
    Rat aCur = b * aPrev + aPrevPrev;
    Rat bCur = b * bPrev + bPrevPrev;
    out.push_back(Convergent{aCur, bCur, n});
    aPrevPrev = std::move(aPrev);
    bPrevPrev = std::move(bPrev);
    aPrev = std::move(aCur);
    bPrev = std::move(bCur);
  }
  return out;
}

// v_p(b_i) of the i-th quotient; only b_0 may be zero on a legal run.
inline long long quotient_valuation(const PartialQuotient& q, const Prime& p) {
  return q.valuation(p);
}

// v_p(B_n), computed both from the exact rational B_n and from the digit
// count sum_{i=1..n} v_p(b_i); a mismatch throws. The sum starts at i = 1:
// B_0 = 1 contributes nothing, whatever b_0 is.
inline long long valuation_of_B(const std::vector<PartialQuotient>& quotients, long long n,
                                const Prime& p) {
  const std::vector<Convergent> conv = convergent_seq(quotients, n, p);
  const Rat& bn = conv.back().B;
  if (bn == 0) throw InvariantViolationError("valuation_of_B: B_n vanished");
  const long long direct = vp_rational(bn, p).value();
  long long bySum = 0;
  for (long long i = 1; i <= n; ++i)
    bySum += quotients[static_cast<std::size_t>(i)].valuation(p);
  if (direct != bySum)
    throw InvariantViolationError("valuation_of_B: sum formula disagrees at n=" +
                                  std::to_string(n) + " (direct " + std::to_string(direct) +
                                  ", sum " + std::to_string(bySum) + ")");
  return direct;
}

// v_p(x - A_n/B_n) by exact field subtraction, checked against the identity
// v_p(x - A_n/B_n) = -v_p(B_n B_{n+1}). Needs the quotient b_{n+1}.
inline long long approx_error_valuation(const QuadElem& x,
                                        const std::vector<PartialQuotient>& quotients,
                                        long long n) {
  if (n < 0 || n + 1 >= static_cast<long long>(quotients.size()))
    throw std::out_of_range("approx_error_valuation: needs quotients through b_{n+1}");
  const Prime& p = x.prime();
  const std::vector<Convergent> conv = convergent_seq(quotients, n + 1, p);
  const Rat& bn = conv[static_cast<std::size_t>(n)].B;
  const Rat& bn1 = conv[static_cast<std::size_t>(n + 1)].B;
  if (bn == 0 || bn1 == 0)
    throw InvariantViolationError("approx_error_valuation: vanishing B_n");

  const QuadElem diff = x.sub(conv[static_cast<std::size_t>(n)].A / bn);
  const Valuation lhs = diff.valuation();
  const long long rhs = -(vp_rational(bn, p).value() + vp_rational(bn1, p).value());
  if (lhs.is_infinity() || lhs.value() != rhs)
    throw InvariantViolationError("approx_error_valuation: v_p(x - A_n/B_n) = " +
                                  lhs.to_string() + " but -v_p(B_n B_{n+1}) = " +
                                  std::to_string(rhs));
  return rhs;
}

// v_p(x - C_n) for the plain digit truncation C_n = sum_{i <= n} a_i p^i,
// checked against the bound v_p(x - C_n) >= n + 1. Infinity when x happens
// to equal its truncation.
inline Valuation truncation_error(const QuadElem& x, long long n) {
  if (x.is_zero()) throw std::invalid_argument("truncation_error: zero element");
  const long long v = x.valuation().value();
  Rat cn = 0;
  if (v <= n) cn = x.digits(n).value(x.prime());
  const QuadElem diff = x.sub(cn);
  const Valuation err = diff.is_zero() ? Valuation::infinity() : diff.valuation();
  if (!err.is_at_least(n + 1))
    throw InvariantViolationError("truncation_error: v_p(x - C_n) = " + err.to_string() +
                                  " < n + 1 = " + std::to_string(n + 1));
  return err;
}

}  // namespace padiccf
