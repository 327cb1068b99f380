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

#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "padiccf/errors.hpp"
#include "padiccf/integer.hpp"
#include "padiccf/padic.hpp"
#include "padiccf/prime.hpp"

namespace padiccf {

class QuadContext;
using QuadCtx = std::shared_ptr<const QuadContext>;

// Shared embedding context for elements of Q(sqrt(d)) inside Q_p: the prime,
// the fixed non-square d, and a growing cache of sqrt(d) lifted mod p^k.
// d is never rescaled (no d -> d/k^2 reduction); inputs are taken literally.
//
// The cache is guarded by a mutex: contexts may be shared across threads,
// although sweep workers normally build one context per work item.
class QuadContext {
 public:
  // Context for plain rationals viewed in Q_p (no sqrt available).
  static QuadCtx rationals(Prime p) {
    return QuadCtx(new QuadContext(std::move(p), 0, false));
  }

  // Context for Q(sqrt(d)) in Q_p. Requires d non-square with v_p(d) even
  // and the unit part of d a quadratic residue mod p, so that sqrt(d) exists
  // in Q_p. Negative d is allowed whenever the residue condition holds.
  static QuadCtx with_sqrt(Prime p, Int d) {
    if (d == 0 || is_perfect_square(d))
      throw std::invalid_argument("QuadContext: d must not be a perfect square");
    return QuadCtx(new QuadContext(std::move(p), std::move(d), true));
  }

  const Prime& prime() const { return p_; }
  const Int& d() const { return d_; }
  bool has_sqrt() const { return hasSqrt_; }

  // v_p(sqrt(d)) = v_p(d)/2.
  long long sqrt_valuation() const { return rootVal_; }

  // The truncation of sqrt(d) to precision k: r in [0, p^k) with
  // r == sqrt(d) (mod p^k) as p-adic numbers, on the branch whose leading
  // balanced digit is positive. Requires k >= 1.
  Int sqrt_mod(long long k) const {
    if (!hasSqrt_) throw std::logic_error("QuadContext: rational context has no sqrt");
    if (k < 1) throw std::invalid_argument("QuadContext::sqrt_mod: k must be >= 1");
    const long long unitPrec = std::max<long long>(1, k - rootVal_);
    Int unitRoot;
    {
      std::lock_guard<std::mutex> lock(cacheMu_);
      if (cachedPrec_ < unitPrec) {
        if (cachedPrec_ == 0) {
          cachedRoot_ = detail::sqrt_mod_prime(unit_, p_);
          if (cachedRoot_ > p_.half()) cachedRoot_ = p_.value() - cachedRoot_;
          cachedPrec_ = 1;
        }
        cachedRoot_ = detail::hensel_lift_unit(cachedRoot_, unit_, p_, cachedPrec_, unitPrec);
        cachedPrec_ = unitPrec;
      }
      unitRoot = cachedPrec_ == unitPrec ? cachedRoot_
                                         : mod_floor(cachedRoot_, pow_int(p_.value(), unitPrec));
    }
    if (rootVal_ == 0) return unitRoot;
    return mod_floor(pow_int(p_.value(), rootVal_) * unitRoot, pow_int(p_.value(), k));
  }

 private:
  QuadContext(Prime p, Int d, bool hasSqrt)
      : p_(std::move(p)), d_(std::move(d)), hasSqrt_(hasSqrt) {
    if (!hasSqrt_) return;
    unit_ = d_;
    const long long vd = remove_factor(unit_, p_.value());
    if (vd % 2 != 0)
      throw NotAResidueError("sqrt(" + d_.str() + ") is not in Q_" + p_.to_string() +
                             ": v_p(d) is odd");
    rootVal_ = vd / 2;
    using boost::multiprecision::powm;
    const Int euler = powm(mod_floor(unit_, p_.value()), (p_.value() - 1) / 2, p_.value());
    if (euler != 1)
      throw NotAResidueError("sqrt(" + d_.str() + ") is not in Q_" + p_.to_string() +
                             ": unit part is a non-residue");
  }

  Prime p_;
  Int d_;
  bool hasSqrt_;
  Int unit_ = 0;          // d / p^(2*rootVal_)
  long long rootVal_ = 0;

  mutable std::mutex cacheMu_;
  mutable Int cachedRoot_ = 0;  // root of unit_ mod p^cachedPrec_
  mutable long long cachedPrec_ = 0;
};

// Which of Browkin's two floors to take: s keeps digits at exponents <= 0,
// t keeps digits at exponents <= -1.
enum class FloorKind { S, T };

// An exact element (a + b*sqrt(d))/c of Q(sqrt(d)) embedded in Q_p, in
// canonical form: gcd(a, b, c) = 1 and c > 0. Rationals are b = 0.
// Component-wise equality of canonical elements is the exact period
// detection key; nothing here is approximate.
class QuadElem {
 public:
  static QuadElem make(Int a, Int b, Int c, QuadCtx ctx) {
    if (!ctx) throw std::invalid_argument("QuadElem: null context");
    if (c == 0) throw std::invalid_argument("QuadElem: c must be nonzero");
    if (b != 0 && !ctx->has_sqrt())
      throw std::invalid_argument("QuadElem: b != 0 requires a sqrt context");
    if (a == 0 && b == 0) return QuadElem(0, 0, 1, std::move(ctx));
    Int g = gcd(gcd(a, b), c);
    if (c < 0) g = -g;
    return QuadElem(a / g, b / g, c / g, std::move(ctx));
  }

  static QuadElem zero(QuadCtx ctx) { return make(0, 0, 1, std::move(ctx)); }

  static QuadElem sqrt_d(QuadCtx ctx) { return make(0, 1, 1, std::move(ctx)); }

  static QuadElem from_rational(Int num, Int den, QuadCtx ctx) {
    return make(std::move(num), 0, std::move(den), std::move(ctx));
  }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const QuadCtx& context() const { return ctx_; }
  const Prime& prime() const { return ctx_->prime(); }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Rat rational_value() const {
    if (b_ != 0) throw std::logic_error("QuadElem: not a rational element");
    return Rat(a_, c_);
  }

  QuadElem conjugate() const { return QuadElem(a_, -b_, c_, ctx_); }

  // v_p((a + b*sqrt(d))/c), robust under cancellation in a + b*sqrt(d):
  // since v_p(a + b*sqrt(d)) <= v_p(a^2 - b^2 d), lifting sqrt(d) to
  // precision v_p(a^2 - b^2 d) + 1 is always enough to read the valuation
  // off an integer representative. The cheap first rung (precision 1)
  // settles the common non-cancelling case without forming the norm.
  Valuation valuation() const {
    if (is_zero()) return Valuation::infinity();
    const Int& p = prime().value();
    const long long vc = vp_nonzero(c_, p);
    if (b_ == 0) return Valuation(vp_nonzero(a_, p) - vc);

    long long vT;
    const Int t1 = mod_floor(a_ + b_ * ctx_->sqrt_mod(1), p);
    if (t1 != 0) {
      vT = 0;
    } else {
      Int norm = a_ * a_ - b_ * b_ * ctx_->d();  // nonzero: d is not a square
      const long long k = vp_nonzero(norm, p) + 1;
      const Int mod = pow_int(p, k);
      const Int t = mod_floor(a_ + mod_floor(b_, mod) * ctx_->sqrt_mod(k), mod);
      vT = vp_nonzero(t, p);  // t != 0: the true valuation is < k
    }
    return Valuation(vT - vc);
  }

  // Balanced digits of this element from exponent v_p(x) through upToExp.
  DigitWindow digits(long long upToExp) const {
    if (is_zero()) throw std::invalid_argument("QuadElem::digits: zero element");
    const Int& p = prime().value();
    const long long v = valuation().value();
    if (upToExp < v) return DigitWindow{v, {}};

    const long long vc = vp_nonzero(c_, p);
    Int cUnit = c_;
    remove_factor(cUnit, p);
    const long long count = upToExp - v + 1;
    const long long prec = upToExp + vc + 1;  // >= 1 because v + vc >= 0
    const Int mod = pow_int(p, prec);

    Int w = mod_floor(a_, mod);
    if (b_ != 0) w = mod_floor(w + mod_floor(b_, mod) * ctx_->sqrt_mod(prec), mod);
    w = mod_floor(w * mod_inverse(mod_floor(cUnit, mod), mod), mod);
    // w represents x * p^vc mod p^prec, so v_p(w) = v + vc exactly.
    w /= pow_int(p, v + vc);
    return DigitWindow{v, balanced_digits_mod(w, prime(), count)};
  }

  // Browkin's floors. s sums the digits at exponents v..0 (zero when
  // v_p(x) > 0), t the digits at exponents v..-1 (zero when v_p(x) >= 0).
  PartialQuotient floor(FloorKind kind) const {
    if (is_zero()) return PartialQuotient{};
    const long long v = valuation().value();
    const long long top = kind == FloorKind::S ? 0 : -1;
    if (v > top) return PartialQuotient{};
    return quotient_from_digits(digits(top), prime());
  }

  QuadElem sub(const PartialQuotient& q) const {
    const Int pe = pow_int(prime().value(), q.pexp);
    return make(a_ * pe - q.num * c_, b_ * pe, c_ * pe, ctx_);
  }

  QuadElem sub(const Rat& q) const {
    const Int& nq = boost::multiprecision::numerator(q);
    const Int& dq = boost::multiprecision::denominator(q);
    return make(a_ * dq - nq * c_, b_ * dq, c_ * dq, ctx_);
  }

  // 1/x = c*(a - b*sqrt(d)) / (a^2 - b^2 d).
  QuadElem invert() const {
    if (is_zero()) throw std::domain_error("QuadElem::invert: division by zero");
    if (b_ == 0) return make(c_, 0, a_, ctx_);
    return make(c_ * a_, -(c_ * b_), a_ * a_ - b_ * b_ * ctx_->d(), ctx_);
  }

  std::string to_string() const {
    std::string s;
    if (b_ == 0) {
      s = a_.str();
    } else {
      s = "(" + a_.str() + (b_ < 0 ? " - " : " + ");
      const Int babs = abs(b_);
      if (babs != 1) s += babs.str() + "*";
      s += "sqrt(" + ctx_->d().str() + "))";
    }
    if (c_ != 1) s += "/" + c_.str();
    return s;
  }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ &&
           x.prime() == y.prime() && x.ctx_->d() == y.ctx_->d();
  }
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

  // Window -> Z[1/p] value, used by the floors: digits at exponents v..top
  // give num = sum d_j p^j over p^(-v).
  static PartialQuotient quotient_from_digits(const DigitWindow& win, const Prime& p) {
    Int num = 0;
    for (auto it = win.digits.rbegin(); it != win.digits.rend(); ++it)
      num = num * p.value() + *it;
    if (num == 0) return PartialQuotient{};
    return PartialQuotient{std::move(num), -win.startExp};
  }

 private:
  QuadElem(Int a, Int b, Int c, QuadCtx ctx)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), ctx_(std::move(ctx)) {}

  Int a_, b_, c_;
  QuadCtx ctx_;
};

}  // namespace padiccf
