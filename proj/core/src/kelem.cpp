/* Copyright 2026 The resforge Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "resforge/kelem.hpp"

#include <algorithm>
#include <string>

#include "resforge/error.hpp"

namespace resforge {

KElem KElem::zero(std::shared_ptr<const RingCtx> ring, int abs_precision) {
  KElem z;
  z.ring_ = std::move(ring);
  z.zero_ = true;
  z.abs_ = std::min(abs_precision, kExact);
  return z;
}

KElem KElem::from_ring(std::shared_ptr<const RingCtx> ring, int val, const GrElem& x,
                       int precision) {
  if (precision > ring->precision()) precision = ring->precision();
  const int w = ring->valuation(x, precision);
  if (w >= precision) return zero(std::move(ring), val + precision);
  KElem r;
  r.zero_ = false;
  r.val_ = val + w;
  r.prec_ = precision - w;
  r.unit_ = ring->reduce(ring->shift_down(ring->reduce(x, precision), w), r.prec_);
  r.ring_ = std::move(ring);
  return r;
}

KElem KElem::from_parts(std::shared_ptr<const RingCtx> ring, int val, const GrElem& unit,
                        int precision) {
  if (precision < 1) throw PrecisionError("KElem: unit with no precision");
  if (!ring->is_unit(unit)) throw DomainError("KElem: unit part is divisible by p");
  return from_ring(std::move(ring), val, unit, precision);
}

KElem KElem::from_int(std::shared_ptr<const RingCtx> ring, std::int64_t v) {
  return from_rational(std::move(ring), v, 1);
}

KElem KElem::from_rational(std::shared_ptr<const RingCtx> ring, std::int64_t num,
                           std::int64_t den) {
  if (den == 0) throw DomainError("KElem: zero denominator");
  if (num == 0) return zero(std::move(ring));
  const auto p = static_cast<std::int64_t>(ring->p());
  int val = 0;
  while (num % p == 0) {
    num /= p;
    ++val;
  }
  while (den % p == 0) {
    den /= p;
    --val;
  }
  const int n = ring->precision();
  const GrElem u = ring->mul(ring->from_int(num, n), ring->inv(ring->from_int(den, n), n), n);
  return from_parts(std::move(ring), val, u, n);
}

KElem KElem::uniformizer_power(std::shared_ptr<const RingCtx> ring, int k) {
  const int n = ring->precision();
  const GrElem one = ring->one();
  return from_parts(std::move(ring), k, one, n);
}

KElem KElem::inv() const {
  if (zero_) throw PrecisionError("KElem: inverse of an element indistinguishable from zero");
  KElem r = *this;
  r.val_ = -val_;
  r.unit_ = ring_->inv(unit_, prec_);
  return r;
}

KElem KElem::neg() const {
  if (zero_) return *this;
  KElem r = *this;
  r.unit_ = ring_->neg(unit_, prec_);
  return r;
}

KElem KElem::pow(std::int64_t k) const {
  if (zero_) {
    if (k <= 0) throw PrecisionError("KElem: non-positive power of zero");
    if (is_exact_zero()) return *this;
    return zero(ring_, static_cast<int>(std::min<std::int64_t>(abs_ * k, kExact)));
  }
  const KElem base = k < 0 ? inv() : *this;
  const std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  KElem r = base;
  r.val_ = static_cast<int>(base.val_ * static_cast<std::int64_t>(e));
  r.unit_ = ring_->pow(base.unit_, e, base.prec_);
  return r;
}

KElem operator*(const KElem& a, const KElem& b) {
  const auto& ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.zero_ || b.zero_) {
    if (a.is_exact_zero() || b.is_exact_zero()) return KElem::zero(ring);
    // Known to be divisible by p^(abs(a) + val(b)), both sides inexact or one nonzero.
    const int bound = std::min<std::int64_t>(
        static_cast<std::int64_t>(a.val()) + b.val(), KElem::kExact);
    return KElem::zero(ring, bound);
  }
  KElem r;
  r.ring_ = ring;
  r.zero_ = false;
  r.val_ = a.val_ + b.val_;
  r.prec_ = std::min(a.prec_, b.prec_);
  r.unit_ = ring->mul(a.unit_, b.unit_, r.prec_);
  return r;
}

KElem operator+(const KElem& a, const KElem& b) {
  const auto& ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.zero_ && b.zero_) return KElem::zero(ring, std::min(a.abs_, b.abs_));
  const int abs = std::min(a.abs_precision(), b.abs_precision());
  if (a.zero_ || b.zero_) {
    const KElem& x = a.zero_ ? b : a;
    if (abs <= x.val_) return KElem::zero(ring, abs);
    return x.truncated(abs - x.val_);
  }
  const int v = std::min(a.val_, b.val_);
  const int rel = abs - v;
  if (rel <= 0) return KElem::zero(ring, abs);
  const GrElem ua = ring->shift_up(a.unit_, a.val_ - v, rel);
  const GrElem ub = ring->shift_up(b.unit_, b.val_ - v, rel);
  return KElem::from_ring(ring, v, ring->add(ua, ub, rel), rel);
}

KElem operator-(const KElem& a, const KElem& b) { return a + b.neg(); }

KElem KElem::truncated(int precision) const {
  if (zero_ || precision >= prec_) return *this;
  if (precision <= 0) return zero(ring_, val_ + std::max(precision, 0));
  KElem r = *this;
  r.prec_ = precision;
  r.unit_ = ring_->reduce(unit_, precision);
  return r;
}

FieldElem KElem::reduce_mod_pi() const {
  if (zero_) throw PrecisionError("reduce mod pi: element indistinguishable from zero");
  if (val_ != 0) {
    throw DomainError("reduce mod pi: element has valuation " + std::to_string(val_) +
                      ", not a unit");
  }
  return ring_->residue(unit_);
}

KElem KElem::canonical_residue(int k, KElem* quotient) const {
  if (abs_precision() < k) {
    throw PrecisionError("canonical residue mod p^" + std::to_string(k) +
                         " needs more precision than available");
  }
  KElem residue;
  if (zero_ || val_ >= k) {
    residue = zero(ring_);
  } else {
    // Finite expansion p^v * (u mod p^(k-v)), exact as an element of K.
    const int len = k - val_;
    residue = from_ring(ring_, val_, ring_->reduce(unit_, len), ring_->precision());
  }
  if (quotient != nullptr) {
    *quotient = (*this - residue) * uniformizer_power(ring_, -k);
  }
  return residue;
}

bool KElem::same_value(const KElem& other) const {
  return (*this - other).is_zero();
}

KElem k_mul(const KElem& a, const KElem& b) { return a * b; }

KElem k_inv(const KElem& a) { return a.inv(); }

FieldElem k_reduce_mod_pi(const KElem& a) { return a.reduce_mod_pi(); }

}  // namespace resforge
