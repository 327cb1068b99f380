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

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

#include "padiccf/errors.hpp"

namespace padiccf {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// x mod m in [0, m); requires m > 0.
inline Int mod_floor(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

inline Int pow_int(const Int& base, long long exp) {
  if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned long>(exp));
}

// Strips every factor p from x (x != 0) and returns the multiplicity.
inline long long remove_factor(Int& x, const Int& p) {
  return static_cast<long long>(
      mpz_remove(x.backend().data(), x.backend().data(), p.backend().data()));
}

inline long long vp_nonzero(const Int& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("vp_nonzero: x is zero");
  Int t = x;
  return remove_factor(t, p);
}

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.backend().data()) != 0;
}

// p-adic valuation with an explicit +infinity for 0. The sentinel is a real
// state, not a large integer, so min/ordering logic cannot silently
// misbehave on zero inputs.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(long long v) : v_(v) {}

  static Valuation infinity() {
    Valuation r;
    r.inf_ = true;
    return r;
  }

  bool is_infinity() const { return inf_; }

  long long value() const {
    if (inf_) throw std::logic_error("Valuation: +infinity has no finite value");
    return v_;
  }

  // inf >= k for every finite k.
  bool is_at_least(long long k) const { return inf_ || v_ >= k; }

  Valuation operator+(const Valuation& o) const {
    if (inf_ || o.inf_) return infinity();
    return Valuation(v_ + o.v_);
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  std::string to_string() const { return inf_ ? "+inf" : std::to_string(v_); }

 private:
  long long v_ = 0;
  bool inf_ = false;
};

}  // namespace padiccf
