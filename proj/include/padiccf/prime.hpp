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

#include <string>
#include <utility>

#include "padiccf/integer.hpp"

namespace padiccf {

// An odd prime p >= 3, validated at construction. p = 2 is rejected: the
// balanced digit set {-(p-1)/2, ..., (p-1)/2} needs p odd.
class Prime {
 public:
  explicit Prime(Int p) : p_(std::move(p)) {
    if (p_ < 3) throw std::invalid_argument("Prime: p must be >= 3");
    if (p_ % 2 == 0) throw std::invalid_argument("Prime: p must be odd");
    if (mpz_probab_prime_p(p_.backend().data(), 32) == 0)
      throw std::invalid_argument("Prime: " + p_.str() + " is composite");
    half_ = (p_ - 1) / 2;
  }

  explicit Prime(long long p) : Prime(Int(p)) {}

  const Int& value() const { return p_; }
  // (p - 1) / 2, the largest balanced digit.
  const Int& half() const { return half_; }

  std::string to_string() const { return p_.str(); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

 private:
  Int p_;
  Int half_;
};

}  // namespace padiccf
