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

#include <algorithm>
#include <string>
#include <vector>

#include "padiccf/errors.hpp"
#include "padiccf/integer.hpp"
#include "padiccf/prime.hpp"

namespace padiccf {

// A digit in the balanced residue system, constrained to
// [-(p-1)/2, (p-1)/2] by every routine that produces one.
using BalancedDigit = Int;

// v_p(num/den). v_p(0) is the +infinity sentinel.
inline Valuation valuation_rational(const Int& num, const Int& den, const Prime& p) {
  if (den == 0) throw std::invalid_argument("valuation_rational: zero denominator");
  if (num == 0) return Valuation::infinity();
  return Valuation(vp_nonzero(num, p.value()) - vp_nonzero(den, p.value()));
}

// Balanced digits d_0..d_{k-1} with sum d_i p^i == x (mod p^k).
inline std::vector<BalancedDigit> balanced_digits_mod(const Int& x, const Prime& p,
                                                      long long k) {
  if (k < 1) throw std::invalid_argument("balanced_digits_mod: k must be >= 1");
  std::vector<BalancedDigit> digits;
  digits.reserve(static_cast<std::size_t>(k));
  Int rest = x;
  for (long long i = 0; i < k; ++i) {
    Int d = mod_floor(rest, p.value());
    if (d > p.half()) d -= p.value();
    rest = (rest - d) / p.value();
    digits.push_back(std::move(d));
  }
  return digits;
}

// y in [0, m) with x*y == 1 (mod m); requires gcd(x, m) = 1 and m >= 2.
inline Int mod_inverse(const Int& x, const Int& m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  Int r;
  if (mpz_invert(r.backend().data(), x.backend().data(), m.backend().data()) == 0)
    throw std::invalid_argument("mod_inverse: " + x.str() + " is not invertible mod " +
                                m.str());
  return r;
}

namespace detail {

// Tonelli-Shanks square root of the unit a mod p. Throws NotAResidueError
// when a has no root.
inline Int sqrt_mod_prime(const Int& a0, const Prime& prime) {
  const Int& p = prime.value();
  Int a = mod_floor(a0, p);
  if (a == 0) throw std::invalid_argument("sqrt_mod_prime: a divisible by p");
  using boost::multiprecision::powm;
  const Int exp = (p - 1) / 2;
  if (powm(a, exp, p) != 1)
    throw NotAResidueError(a0.str() + " is not a quadratic residue mod " + p.str());
  if (p % 4 == 3) return powm(a, (p + 1) / 4, p);

  Int q = p - 1;
  long long s = remove_factor(q, Int(2));
  Int z = 2;
  while (powm(z, exp, p) != p - 1) ++z;
  Int c = powm(z, q, p);
  Int t = powm(a, q, p);
  Int r = powm(a, (q + 1) / 2, p);
  long long m = s;
  while (t != 1) {
    Int t2 = t;
    long long i = 0;
    while (t2 != 1) {
      t2 = (t2 * t2) % p;
      ++i;
    }
    Int b = c;
    for (long long j = 0; j < m - i - 1; ++j) b = (b * b) % p;
    r = (r * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  return r;
}

// Newton lift of a unit square root from precision `fromPrec` to `toPrec`.
// Preserves the residue mod p, so the branch chosen at the base survives.
inline Int hensel_lift_unit(Int root, const Int& a, const Prime& p, long long fromPrec,
                            long long toPrec) {
  long long prec = fromPrec;
  while (prec < toPrec) {
    const long long next = std::min(2 * prec, toPrec);
    const Int mod = pow_int(p.value(), next);
    const Int num = mod_floor(root * root - a, mod);
    root = mod_floor(root - num * mod_inverse(mod_floor(2 * root, mod), mod), mod);
    prec = next;
  }
  return root;
}

}  // namespace detail

// r in [0, p^k) with r^2 == d (mod p^k). Of the two roots the one whose
// balanced digit mod p lies in {1, ..., (p-1)/2} is returned; this is the
// branch every expansion in this library uses for sqrt(d).
inline Int hensel_sqrt(const Int& d, const Prime& p, long long k) {
  if (k < 1) throw std::invalid_argument("hensel_sqrt: k must be >= 1");
  if (mod_floor(d, p.value()) == 0)
    throw std::invalid_argument("hensel_sqrt: p divides d");
  Int r = detail::sqrt_mod_prime(d, p);
  if (r > p.half()) r = p.value() - r;  // balanced digit of r mod p positive
  return detail::hensel_lift_unit(std::move(r), d, p, 1, k);
}

// An element of Z[1/p]: num / p^pexp, with p not dividing num when pexp > 0.
struct PartialQuotient {
  Int num = 0;
  long long pexp = 0;

  bool is_zero() const { return num == 0; }

  Rat value(const Prime& p) const { return Rat(num, pow_int(p.value(), pexp)); }

  // v_p of a nonzero quotient.
  long long valuation(const Prime& p) const {
    if (num == 0) throw std::invalid_argument("PartialQuotient: v_p of zero");
    return vp_nonzero(num, p.value()) - pexp;
  }

  // Printed as the paper-style fraction "num/p^pexp" with the power expanded,
  // e.g. "-12/25"; plain "num" when pexp = 0.
  std::string to_string(const Prime& p) const {
    if (pexp == 0) return num.str();
    return num.str() + "/" + pow_int(p.value(), pexp).str();
  }

  friend bool operator==(const PartialQuotient& a, const PartialQuotient& b) {
    return a.pexp == b.pexp && a.num == b.num;
  }
};

// A finite window of balanced digits: digits[i] multiplies p^(startExp + i).
struct DigitWindow {
  long long startExp = 0;
  std::vector<BalancedDigit> digits;

  Rat value(const Prime& p) const {
    Int acc = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * p.value() + *it;
    if (startExp >= 0) return Rat(acc * pow_int(p.value(), startExp));
    return Rat(acc, pow_int(p.value(), -startExp));
  }
};

}  // namespace padiccf
