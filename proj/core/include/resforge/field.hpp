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

// Residue field F_q, the roots of unity mu_n inside it, and the characters
// built from them.
//
// Elements of F_q = F_p[x]/(P) are stored by their code sum_i c_i p^i, where
// c_i in [0, p) is the coefficient of x^i. The code order is the canonical
// element order used everywhere a "least" element is chosen.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace resforge {

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

struct FieldElem {
  std::uint32_t code = 0;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

bool is_prime(std::uint64_t n);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

class FieldCtx {
 public:
  /// Builds F_{p^f} with the least monic irreducible modulus and the least
  /// generator of the multiplicative group (both in code order).
  static std::shared_ptr<const FieldCtx> make(std::uint32_t p, std::uint32_t f,
                                              std::uint64_t bound = kDefaultFieldBound);

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return f_; }
  std::uint32_t order() const { return q_; }
  /// Monic defining polynomial, little-endian, size degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElem generator() const { return generator_; }

  FieldElem zero() const { return FieldElem{0}; }
  FieldElem one() const { return FieldElem{1}; }
  FieldElem minus_one() const { return from_int(-1); }
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem x) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::int64_t e) const;

  /// Discrete log to the canonical generator; a must be nonzero.
  std::uint32_t log(FieldElem a) const;
  FieldElem exp(std::uint64_t k) const { return FieldElem{exp_[k % (q_ - 1)]}; }

  /// Integer for prime fields, "[c0,c1,...]" otherwise.
  std::string to_string(FieldElem a) const;

 private:
  FieldCtx(std::uint32_t p, std::uint32_t f);
  FieldElem slow_mul(FieldElem a, FieldElem b) const;

  std::uint32_t p_;
  std::uint32_t f_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElem generator_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Determinant of a dim x dim row-major matrix over F_q.
FieldElem field_det(const FieldCtx& field, std::vector<FieldElem> matrix, std::size_t dim);

/// An element zeta^exp of mu_n, zeta = g^((q-1)/n) for the canonical generator
/// g. The group is written multiplicatively; exponents add.
class MuScalar {
 public:
  MuScalar() = default;
  MuScalar(std::uint32_t n, std::int64_t exp);

  static MuScalar identity(std::uint32_t n) { return MuScalar(n, 0); }

  std::uint32_t n() const { return n_; }
  std::uint32_t exp() const { return exp_; }
  bool is_identity() const { return exp_ == 0; }

  MuScalar inverse() const { return MuScalar(n_, -static_cast<std::int64_t>(exp_)); }
  MuScalar pow(std::int64_t k) const;

  friend MuScalar operator*(MuScalar a, MuScalar b);
  friend MuScalar operator/(MuScalar a, MuScalar b) { return a * b.inverse(); }
  MuScalar& operator*=(MuScalar b) { return *this = *this * b; }
  friend bool operator==(const MuScalar&, const MuScalar&) = default;

 private:
  std::uint32_t n_ = 1;
  std::uint32_t exp_ = 0;
};

/// Throws DomainError unless n >= 1 and n | q-1.
void require_mu_n(const FieldCtx& field, std::uint32_t n);

FieldElem mu_embed(const FieldCtx& field, MuScalar s);
MuScalar mu_dlog(const FieldCtx& field, FieldElem x, std::uint32_t n);

/// x -> x^((q-1)/n), read back in mu_n.
MuScalar power_residue_char(const FieldCtx& field, FieldElem x, std::uint32_t n);

/// Sign of the permutation x -> a*x of F_q (cycle parity).
int zolotarev_sign(const FieldCtx& field, FieldElem a);

/// -1 as an element of mu_n: zeta^(n/2) for even n. For odd n it is the image
/// of -1 under power_residue_char, which is trivial whenever q is odd.
MuScalar mu_minus_one(const FieldCtx& field, std::uint32_t n);

/// F_{q^d} = F_q[y]/(h) with h the least monic irreducible of degree d over F_q
/// (coefficient codes compared from the top degree down).
class FieldTower {
 public:
  using Elem = std::vector<FieldElem>;  // d coefficients over F_q, little-endian

  FieldTower(std::shared_ptr<const FieldCtx> base, std::uint32_t d,
             std::uint64_t bound = kDefaultFieldBound);

  const FieldCtx& base() const { return *base_; }
  std::uint32_t degree() const { return d_; }
  std::uint64_t order() const { return order_; }
  const std::vector<FieldElem>& modulus() const { return modulus_; }

  Elem from_base(FieldElem a) const;
  Elem generator_y() const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  bool is_zero(const Elem& a) const;

  /// Every element, in code order.
  std::vector<Elem> elements() const;

 private:
  std::shared_ptr<const FieldCtx> base_;
  std::uint32_t d_;
  std::uint64_t order_;
  std::vector<FieldElem> modulus_;
};

/// Determinant over F_q of multiplication by x on F_{q^d}.
FieldElem norm_check(const FieldTower& tower, const FieldTower::Elem& x);

/// x^((q^d - 1)/(q - 1)); lands in the constants of the tower.
FieldElem norm_by_power(const FieldTower& tower, const FieldTower::Elem& x);

}  // namespace resforge
