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

// Finite O-modules T = (+) O/p^{e_i}, O-linear maps between them, and the
// mu_n-orbit structure of T (mu_n acting through Teichmuller lifts).

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "resforge/galois_ring.hpp"
#include "resforge/muset.hpp"

namespace resforge {

inline constexpr std::uint64_t kDefaultEnumBound = 100000;

class FiniteModule {
 public:
  using Coords = std::vector<GrElem>;

  FiniteModule() = default;
  /// Every exponent must be positive and at most the ring precision.
  FiniteModule(std::shared_ptr<const RingCtx> ring, std::vector<int> exps);

  const RingCtx& ring() const { return *ring_; }
  const std::shared_ptr<const RingCtx>& ring_ptr() const { return ring_; }
  const std::vector<int>& exps() const { return exps_; }
  std::size_t rank() const { return exps_.size(); }
  int length() const;
  int max_exp() const;
  /// q^length, saturated at UINT64_MAX.
  std::uint64_t size() const;
  void require_enumerable(std::uint64_t bound) const;

  /// Elements are numbered in mixed radix: component 0 is least significant,
  /// and inside a component the coefficient of x^0 is least significant.
  /// This numbering is the canonical element order.
  std::uint64_t encode(const Coords& x) const;
  Coords decode(std::uint64_t index) const;

  friend bool operator==(const FiniteModule& a, const FiniteModule& b) {
    return a.exps_ == b.exps_ && a.ring_ == b.ring_;
  }

 private:
  std::shared_ptr<const RingCtx> ring_;
  std::vector<int> exps_;
};

/// O-linear map given by a target.rank x source.rank matrix (row-major) of
/// ring elements acting on coordinate vectors.
class ModuleMap {
 public:
  ModuleMap() = default;
  /// Throws DomainError unless the matrix induces a well-defined map, i.e.
  /// v(M_ji) >= e'_j - e_i.
  ModuleMap(FiniteModule source, FiniteModule target, std::vector<GrElem> matrix);

  static ModuleMap identity(const FiniteModule& t);

  const FiniteModule& source() const { return source_; }
  const FiniteModule& target() const { return target_; }
  const std::vector<GrElem>& matrix() const { return matrix_; }
  const GrElem& at(std::size_t row, std::size_t col) const {
    return matrix_[row * source_.rank() + col];
  }

  FiniteModule::Coords apply(const FiniteModule::Coords& x) const;
  std::uint64_t apply_index(std::uint64_t index) const;

  /// Residue matrices on the graded pieces p^i T / p^(i+1) T (source == target
  /// as modules); invertible everywhere iff the map is bijective.
  std::vector<FieldElem> graded_block(int level, std::size_t* dim) const;
  bool is_automorphism() const;

 private:
  FiniteModule source_;
  FiniteModule target_;
  std::vector<GrElem> matrix_;
};

/// g o f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

enum class BasepointRule { kLeast, kSecondLeast };

/// Orbit data of a finite pointed mu_n-set given by the permutation of its
/// points induced by zeta (point 0 is the marked point). Orbits are numbered
/// by their least member; each orbit has a representative chosen by the
/// basepoint rule, and every point y is zeta^exp(y) * rep(orbit(y)).
class OrbitIndex {
 public:
  OrbitIndex(std::uint32_t n, const std::vector<std::uint64_t>& zeta_perm, BasepointRule rule);

  /// Cached per (module shape, n, rule).
  static std::shared_ptr<const OrbitIndex> of_module(const FiniteModule& t, std::uint32_t n,
                                                     BasepointRule rule,
                                                     std::uint64_t bound = kDefaultEnumBound);

  std::uint32_t n() const { return n_; }
  std::uint64_t size() const { return orbit_.size(); }
  std::uint32_t orbit_count() const { return static_cast<std::uint32_t>(reps_.size()); }
  std::uint32_t orbit(std::uint64_t y) const { return orbit_[y]; }
  std::uint32_t exp(std::uint64_t y) const { return exp_[y]; }
  std::uint64_t rep(std::uint32_t orbit) const { return reps_[orbit]; }
  const std::vector<std::uint64_t>& reps() const { return reps_; }
  bool is_rep(std::uint64_t y) const { return y != 0 && exp_[y] == 0; }
  const std::vector<std::uint64_t>& zeta_perm() const { return zeta_; }

  MuSet muset() const { return MuSet{n_, orbit_count()}; }

 private:
  std::uint32_t n_;
  std::vector<std::uint64_t> zeta_;
  std::vector<std::uint32_t> orbit_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint64_t> reps_;
};

/// The permutation of T induced by the Teichmuller lift of zeta_n.
std::vector<std::uint64_t> module_zeta_permutation(const FiniteModule& t, std::uint32_t n,
                                                   std::uint64_t bound = kDefaultEnumBound);

MuSet module_as_muset(const FiniteModule& t, std::uint32_t n,
                      std::uint64_t bound = kDefaultEnumBound);

/// g as (sigma, mu) relative to the orbit representatives of T.
MuSetAut module_aut_as_musetaut(const ModuleMap& g, std::uint32_t n,
                                BasepointRule rule = BasepointRule::kLeast,
                                std::uint64_t bound = kDefaultEnumBound);

}  // namespace resforge
