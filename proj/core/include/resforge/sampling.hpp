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

// Seeded random generation of the objects used by property checks. The
// streams depend only on the seed (no library distributions), so runs are
// reproducible across platforms.

#pragma once

#include <cstdint>
#include <random>

#include "resforge/finite_module.hpp"
#include "resforge/kmatrix.hpp"
#include "resforge/lattice.hpp"
#include "resforge/muset.hpp"

namespace resforge {

/// Lattices C inside B inside A and an element g of GL_m(K) with gA = A,
/// gB = B and gC = C.
struct StableFlag {
  Lattice a;
  Lattice b;
  Lattice c;
  KMatrix g;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  MuSetAut muset_aut(const MuSet& set);
  FieldElem field_unit(const FieldCtx& field);

  /// A unit of O known to the full ring precision.
  KElem unit(const std::shared_ptr<const RingCtx>& ring);
  /// p^v u with v uniform in [vmin, vmax].
  KElem element(const std::shared_ptr<const RingCtx>& ring, int vmin, int vmax);
  /// Entries zero with probability 1/4, otherwise element(vmin, vmax);
  /// resampled until invertible.
  KMatrix gl(const std::shared_ptr<const RingCtx>& ring, std::size_t m, int vmin, int vmax);
  /// Integral with unit determinant.
  KMatrix gl_o(const std::shared_ptr<const RingCtx>& ring, std::size_t m);
  /// Integral matrix, entries of valuation in [0, vmax] or zero, invertible.
  KMatrix integral(const std::shared_ptr<const RingCtx>& ring, std::size_t m, int vmax);

  /// A random automorphism of T.
  ModuleMap module_aut(const FiniteModule& t);

  /// Nested lattices C inside B inside A, A = hO^m for random h, each step
  /// of length at most max_step.
  StableFlag nested(const std::shared_ptr<const RingCtx>& ring, std::size_t m, int max_step);
  /// A conjugated diagonal flag with elementary divisors at most max_exp and
  /// a random element of its stabilizer.
  StableFlag stable_flag(const std::shared_ptr<const RingCtx>& ring, std::size_t m, int max_exp);

 private:
  std::mt19937_64 rng_;
};

}  // namespace resforge
