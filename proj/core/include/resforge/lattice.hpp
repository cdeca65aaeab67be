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

// Full-rank O-lattices in K^m, their sums, intersections and quotients.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "resforge/finite_module.hpp"
#include "resforge/kmatrix.hpp"

namespace resforge {

/// A lattice is stored by its canonical basis: the lower triangular column
/// Hermite form with diagonal p^{k_i} and entries left of the diagonal in
/// row r reduced to the residue system p^v (u mod p^(k_r - v)). Equal
/// lattices have equal bases.
class Lattice {
 public:
  Lattice() = default;
  /// Lattice spanned by the columns (any number >= rows); throws DomainError
  /// if they do not span K^m.
  static Lattice span(const KMatrix& generators);
  /// O^m.
  static Lattice standard(std::shared_ptr<const RingCtx> ring, std::size_t m);

  std::size_t rank() const { return basis_.rows(); }
  const KMatrix& basis() const { return basis_; }
  const std::shared_ptr<const RingCtx>& ring_ptr() const { return basis_.ring_ptr(); }
  /// v(det basis).
  int volume_exponent() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.basis_.same_value(b.basis_);
  }

 private:
  explicit Lattice(KMatrix basis) : basis_(std::move(basis)) {}
  KMatrix basis_;
};

Lattice lat_sum(const Lattice& a, const Lattice& b);
Lattice lat_intersect(const Lattice& a, const Lattice& b);
/// {y : y^T x in O for x in A}.
Lattice lat_dual(const Lattice& a);
bool lat_contains(const Lattice& a, const std::vector<KElem>& x);
/// b inside a.
bool lat_contains(const Lattice& a, const Lattice& b);
Lattice lat_apply(const KMatrix& f, const Lattice& a);

/// A/B for B inside A, with an adapted basis: the columns of adapted span
/// A and p^{d_i} times them span B. Components with d_i > 0 form the module,
/// in ascending exponent order.
struct Quotient {
  Lattice top;
  Lattice bottom;
  FiniteModule module;
  KMatrix adapted;
  KMatrix adapted_inv;
  std::vector<std::size_t> components;

  FiniteModule::Coords project(const std::vector<KElem>& x) const;
  std::vector<KElem> lift(const FiniteModule::Coords& c) const;
};

/// Throws DomainError unless bottom lies inside top.
Quotient quotient_struct(const Lattice& top, const Lattice& bottom);

/// The map A1/B1 -> A2/B2 induced by f; f(A1) must lie in A2 and f(B1) in B2.
ModuleMap induced_map(const KMatrix& f, const Quotient& from, const Quotient& to);

/// Length of A/B (sum of exponents); B inside A.
int quotient_length(const Lattice& a, const Lattice& b);

/// [A|B] = dim(A/A n B) - dim(B/A n B), dim counting mu_n-orbits.
boost::multiprecision::cpp_int rel_dim(const Lattice& a, const Lattice& b, std::uint32_t n);

}  // namespace resforge
