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

#pragma once

#include <climits>
#include <cstdint>
#include <memory>

#include "resforge/galois_ring.hpp"

namespace resforge {

/// An element of K known to finite precision.
///
/// Nonzero values are p^val * unit with the unit known modulo p^precision
/// (relative precision). Zero carries an absolute precision: it is known to
/// be divisible by p^abs_precision, or is exact. Precision only ever shrinks
/// through arithmetic; operations that cannot decide a result at the
/// available precision throw PrecisionError.
class KElem {
 public:
  static constexpr int kExact = INT_MAX / 4;

  KElem() = default;

  static KElem zero(std::shared_ptr<const RingCtx> ring, int abs_precision = kExact);
  static KElem from_int(std::shared_ptr<const RingCtx> ring, std::int64_t v);
  /// num/den; exact inputs are stored at the ring precision.
  static KElem from_rational(std::shared_ptr<const RingCtx> ring, std::int64_t num,
                             std::int64_t den);
  /// p^val * unit, unit reduced modulo p^precision (precision <= ring precision).
  static KElem from_parts(std::shared_ptr<const RingCtx> ring, int val, const GrElem& unit,
                          int precision);
  /// p^val * x for an arbitrary (possibly non-unit) ring element x mod p^precision.
  static KElem from_ring(std::shared_ptr<const RingCtx> ring, int val, const GrElem& x,
                         int precision);
  static KElem uniformizer_power(std::shared_ptr<const RingCtx> ring, int k);

  const RingCtx& ring() const { return *ring_; }
  const std::shared_ptr<const RingCtx>& ring_ptr() const { return ring_; }

  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && abs_ >= kExact; }
  /// Valuation; for zero, the absolute precision.
  int val() const { return zero_ ? abs_ : val_; }
  const GrElem& unit() const { return unit_; }
  /// Relative precision of the unit (0 for zero).
  int precision() const { return zero_ ? 0 : prec_; }
  /// The value is known modulo p^abs_precision().
  int abs_precision() const { return zero_ ? abs_ : val_ + prec_; }

  KElem inv() const;
  KElem pow(std::int64_t k) const;
  KElem neg() const;

  friend KElem operator+(const KElem& a, const KElem& b);
  friend KElem operator-(const KElem& a, const KElem& b);
  friend KElem operator*(const KElem& a, const KElem& b);
  friend KElem operator/(const KElem& a, const KElem& b) { return a * b.inv(); }
  KElem operator-() const { return neg(); }

  /// Unit residue in F_q; requires val() == 0.
  FieldElem reduce_mod_pi() const;

  /// Residue of x modulo p^k O, as the canonical representative p^v * (u mod
  /// p^(k-v)); the quotient (x - residue)/p^k is returned through `quotient`.
  KElem canonical_residue(int k, KElem* quotient = nullptr) const;

  /// Equality to the precision both sides carry.
  bool same_value(const KElem& other) const;

  /// Reduce the unit to the given relative precision (never increases it).
  KElem truncated(int precision) const;

 private:
  std::shared_ptr<const RingCtx> ring_;
  bool zero_ = true;
  int val_ = 0;
  int prec_ = 0;
  int abs_ = kExact;
  GrElem unit_{};
};

/// Pivot order for elimination: nonzero before zero, then smaller valuation.
inline bool pivot_before(const KElem& a, const KElem& b) {
  if (a.is_zero() != b.is_zero()) return !a.is_zero();
  return a.val() < b.val();
}

/// Group laws on K^x; names mirror the library's arithmetic contract.
KElem k_mul(const KElem& a, const KElem& b);
KElem k_inv(const KElem& a);
FieldElem k_reduce_mod_pi(const KElem& a);

}  // namespace resforge
