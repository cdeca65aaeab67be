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

// Truncated ring of integers O/p^N of the unramified extension of Q_p of
// degree f: Z/p^N for f = 1, the Galois ring (Z/p^N)[x]/(P) otherwise, P the
// integer lift of the residue field modulus. The uniformiser is p.

#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include "resforge/field.hpp"

namespace resforge {

inline constexpr std::uint32_t kMaxRingDegree = 8;

/// Coefficients c_0..c_{f-1} in [0, p^e) for the working exponent e.
struct GrElem {
  std::array<std::uint64_t, kMaxRingDegree> c{};
  friend bool operator==(const GrElem&, const GrElem&) = default;
};

class RingCtx {
 public:
  /// Largest N with p^N < 2^62.
  static int max_precision(std::uint32_t p);

  /// precision <= 0 selects max_precision(p).
  static std::shared_ptr<const RingCtx> make(std::shared_ptr<const FieldCtx> field,
                                             int precision = 0);

  const FieldCtx& field() const { return *field_; }
  const std::shared_ptr<const FieldCtx>& field_ptr() const { return field_; }
  std::uint32_t p() const { return field_->p(); }
  std::uint32_t degree() const { return field_->degree(); }
  int precision() const { return precision_; }
  /// p^e for 0 <= e <= precision().
  std::uint64_t pow_p(int e) const { return pow_p_[static_cast<std::size_t>(e)]; }

  GrElem zero() const { return GrElem{}; }
  GrElem one() const;
  GrElem from_int(std::int64_t v, int e) const;
  GrElem reduce(const GrElem& a, int e) const;

  GrElem add(const GrElem& a, const GrElem& b, int e) const;
  GrElem sub(const GrElem& a, const GrElem& b, int e) const;
  GrElem neg(const GrElem& a, int e) const;
  GrElem mul(const GrElem& a, const GrElem& b, int e) const;
  GrElem scale_int(const GrElem& a, std::uint64_t s, int e) const;
  GrElem pow(GrElem a, std::uint64_t k, int e) const;
  /// Inverse of a unit modulo p^e (Newton lifting).
  GrElem inv(const GrElem& a, int e) const;

  bool is_zero(const GrElem& a, int e) const;
  bool is_unit(const GrElem& a) const { return !is_zero(a, 1); }
  /// min_i v_p(c_i), capped at e.
  int valuation(const GrElem& a, int e) const;
  /// Exact division by p^k; a must be divisible.
  GrElem shift_down(const GrElem& a, int k) const;
  /// Multiplication by p^k modulo p^e.
  GrElem shift_up(const GrElem& a, int k, int e) const;

  FieldElem residue(const GrElem& a) const;
  /// Lift with coefficients in [0, p).
  GrElem lift(FieldElem x) const;
  /// Teichmuller representative of x modulo p^e.
  GrElem teichmuller(FieldElem x, int e) const;

  /// Order of coefficient tuples, used as the canonical element order.
  static bool less(const GrElem& a, const GrElem& b, std::uint32_t degree);

 private:
  RingCtx(std::shared_ptr<const FieldCtx> field, int precision);

  std::shared_ptr<const FieldCtx> field_;
  int precision_;
  std::array<std::uint64_t, 64> pow_p_{};
  std::array<std::uint64_t, kMaxRingDegree + 1> modulus_{};
};

}  // namespace resforge
