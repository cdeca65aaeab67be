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

// Finite free pointed mu_n-sets given by an orbit count, their automorphisms
// (orbit permutation plus twist vector), the determinant Delta and the
// cartesian product.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "resforge/field.hpp"

namespace resforge {

/// The pointed set {*} u {zeta^e x_i : 0 <= i < t, e in Z/n}.
/// Points are encoded 0 for *, and 1 + i*n + e for zeta^e x_i.
struct MuSet {
  std::uint32_t n = 1;
  std::uint32_t t = 0;

  std::uint64_t size() const { return std::uint64_t{n} * t + 1; }
  std::uint64_t encode(std::uint32_t orbit, std::uint32_t e) const {
    return 1 + std::uint64_t{orbit} * n + e % n;
  }
  friend bool operator==(const MuSet&, const MuSet&) = default;
};

/// f(x_i) = zeta^mu[i] x_sigma[i].
class MuSetAut {
 public:
  MuSetAut() = default;
  MuSetAut(MuSet set, std::vector<std::uint32_t> sigma, std::vector<std::uint32_t> mu);

  static MuSetAut identity(MuSet set);

  const MuSet& set() const { return set_; }
  const std::vector<std::uint32_t>& sigma() const { return sigma_; }
  const std::vector<std::uint32_t>& mu() const { return mu_; }

  /// Image of an encoded point.
  std::uint64_t apply(std::uint64_t point) const;

  friend bool operator==(const MuSetAut&, const MuSetAut&) = default;

 private:
  MuSet set_;
  std::vector<std::uint32_t> sigma_;
  std::vector<std::uint32_t> mu_;
};

/// f o g.
MuSetAut aut_compose(const MuSetAut& f, const MuSetAut& g);
MuSetAut aut_inverse(const MuSetAut& f);

MuScalar aut_delta(const MuSetAut& f);

/// Sign of a permutation of {0..k-1} by cycle parity.
int permutation_sign(const std::vector<std::uint64_t>& perm);

/// (Delta(f), sign of sigma_f).
std::pair<MuScalar, int> aut_abelianize(const MuSetAut& f);

/// Orbits of X x Y: (x_i, *) for i < t, then (*, y_j), then
/// (x_i, zeta^k y_j) at t + u + (i*u + j)*n + k.
MuSet muset_product(const MuSet& x, const MuSet& y);

/// f x Id on X x Y.
MuSetAut aut_extend(const MuSetAut& f, const MuSet& y);

/// The permutation of all nt+1 points, forgetting the mu_n-structure.
std::vector<std::uint64_t> aut_to_permutation(const MuSetAut& f);
int perm_sign(const MuSetAut& f);

}  // namespace resforge
