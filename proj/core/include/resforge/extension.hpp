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

// Relative determinants (A|B), the maps rho_f and the contraction kappa on
// them, and the central extension of GL_m(K) by mu_n as a normalized
// 2-cocycle relative to the canonical base points.

#pragma once

#include <cstdint>

#include "resforge/lattice.hpp"
#include "resforge/torsor.hpp"

namespace resforge {

struct ExtCtx {
  std::shared_ptr<const RingCtx> ring;
  std::uint32_t n = 1;
  BasepointRule rule = BasepointRule::kLeast;
  std::uint64_t bound = kDefaultEnumBound;

  /// Checks n | q-1.
  ExtCtx(std::shared_ptr<const RingCtx> ring, std::uint32_t n,
         BasepointRule rule = BasepointRule::kLeast, std::uint64_t bound = kDefaultEnumBound);
};

/// (A|B) = det(A/A n B) (x) det(B/A n B)^v with base base (x) dual base.
struct RelDet {
  Lattice a;
  Lattice b;
  Lattice meet;
  MuLine line;
};

RelDet reldet(const ExtCtx& ctx, const Lattice& a, const Lattice& b);

/// rho_f(base(A|B)) = zeta^c base(fA|fB).
MuScalar rho(const ExtCtx& ctx, const KMatrix& f, const Lattice& a, const Lattice& b);

/// The scalar of det(B/C) (x) det(A/B) -> det(A/C) for C inside B inside A.
MuScalar nested_contraction(const ExtCtx& ctx, const Lattice& a, const Lattice& b,
                            const Lattice& c);

/// kappa(base(A|B) (x) base(B|C)) = zeta^c base(A|C).
MuScalar kappa(const ExtCtx& ctx, const Lattice& a, const Lattice& b, const Lattice& c);

/// kappa computed through an arbitrary common sublattice F of A, B and C,
/// rewriting each (X|Y) as det(X/F) (x) det(Y/F)^v. Agrees with kappa.
MuScalar kappa_through(const ExtCtx& ctx, const Lattice& a, const Lattice& b,
                       const Lattice& c, const Lattice& f);

/// c(f, g) with iota_g^f(base (x) base) = zeta^c base, V+ = O^m.
MuScalar cocycle(const ExtCtx& ctx, const KMatrix& f, const KMatrix& g);

/// (f, zeta^s base(V+|fV+)).
struct ExtElem {
  KMatrix f;
  MuScalar s;
};

ExtElem ext_identity(const ExtCtx& ctx, std::size_t m);
/// (f, s)(g, t) = (fg, s t c(f, g)).
ExtElem ext_mul(const ExtCtx& ctx, const ExtElem& x, const ExtElem& y);
ExtElem ext_inverse(const ExtCtx& ctx, const ExtElem& x);

/// Commutator of lifts of commuting f and g; throws DomainError if fg != gf.
MuScalar comm_symbol(const ExtCtx& ctx, const KMatrix& f, const KMatrix& g);

/// (-1)^([O|aO][O|bO]) {a, b} for m = 1.
MuScalar corrected_symbol(const ExtCtx& ctx, const KElem& a, const KElem& b);

}  // namespace resforge
