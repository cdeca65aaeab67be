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

#include "resforge/extension.hpp"

#include "resforge/error.hpp"

namespace resforge {

ExtCtx::ExtCtx(std::shared_ptr<const RingCtx> ring_, std::uint32_t n_, BasepointRule rule_,
               std::uint64_t bound_)
    : ring(std::move(ring_)), n(n_), rule(rule_), bound(bound_) {
  require_mu_n(ring->field(), n);
}

RelDet reldet(const ExtCtx& ctx, const Lattice& a, const Lattice& b) {
  const Lattice d = lat_intersect(a, b);
  if (a == b) return RelDet{a, b, d, MuLine{"mu_n^*", ctx.n}};
  const MuLine top = det_line(quotient_struct(a, d).module, ctx.n, "A/AnB");
  const MuLine bottom = det_line(quotient_struct(b, d).module, ctx.n, "B/AnB");
  return RelDet{a, b, d, line_tensor(top, line_dual(bottom))};
}

MuScalar rho(const ExtCtx& ctx, const KMatrix& f, const Lattice& a, const Lattice& b) {
  const Lattice d = lat_intersect(a, b);
  const Lattice fa = lat_apply(f, a);
  const Lattice fb = lat_apply(f, b);
  const Lattice fd = lat_apply(f, d);
  const KMatrix finv = f.inverse();
  // tau_f on det(A/D), then psi_f = (f^{-1})^* on det(B/D)^v.
  const MuScalar tau = det_iso_scalar(
      induced_map(f, quotient_struct(a, d), quotient_struct(fa, fd)), ctx.n, DetMethod::kFast,
      ctx.rule, ctx.bound);
  const MuScalar psi = det_iso_scalar(
      induced_map(finv, quotient_struct(fb, fd), quotient_struct(b, d)), ctx.n,
      DetMethod::kFast, ctx.rule, ctx.bound);
  return tau * psi;
}

MuScalar nested_contraction(const ExtCtx& ctx, const Lattice& a, const Lattice& b,
                            const Lattice& c) {
  if (a == b || b == c) return MuScalar::identity(ctx.n);
  const KMatrix id = KMatrix::identity(ctx.ring, a.rank());
  const Quotient bc = quotient_struct(b, c);
  const Quotient ac = quotient_struct(a, c);
  const Quotient ab = quotient_struct(a, b);
  return exact_seq_iso(induced_map(id, bc, ac), induced_map(id, ac, ab), ctx.n, ctx.rule,
                       ctx.bound);
}

namespace {

// (X|Y) = det(X/F) (x) det(Y/F)^v for F inside X n Y: base(X|Y) maps to
// zeta^c (base (x) dual base).
MuScalar relative_to(const ExtCtx& ctx, const Lattice& x, const Lattice& y, const Lattice& f) {
  const Lattice d = lat_intersect(x, y);
  return nested_contraction(ctx, x, d, f) / nested_contraction(ctx, y, d, f);
}

}  // namespace

MuScalar kappa_through(const ExtCtx& ctx, const Lattice& a, const Lattice& b,
                       const Lattice& c, const Lattice& f) {
  return relative_to(ctx, a, b, f) * relative_to(ctx, b, c, f) / relative_to(ctx, a, c, f);
}

MuScalar kappa(const ExtCtx& ctx, const Lattice& a, const Lattice& b, const Lattice& c) {
  if (a == c) return MuScalar::identity(ctx.n);
  if (lat_contains(a, b) && lat_contains(b, c)) return nested_contraction(ctx, a, b, c);
  if (lat_contains(b, a) && lat_contains(c, b)) return nested_contraction(ctx, c, b, a).inverse();
  return kappa_through(ctx, a, b, c, lat_intersect(lat_intersect(a, b), c));
}

MuScalar cocycle(const ExtCtx& ctx, const KMatrix& f, const KMatrix& g) {
  const Lattice v = Lattice::standard(ctx.ring, f.rows());
  const Lattice gv = lat_apply(g, v);
  const Lattice fv = lat_apply(f, v);
  const Lattice fgv = lat_apply(f * g, v);
  return rho(ctx, f, v, gv) * kappa(ctx, v, fv, fgv);
}

ExtElem ext_identity(const ExtCtx& ctx, std::size_t m) {
  return ExtElem{KMatrix::identity(ctx.ring, m), MuScalar::identity(ctx.n)};
}

ExtElem ext_mul(const ExtCtx& ctx, const ExtElem& x, const ExtElem& y) {
  return ExtElem{x.f * y.f, x.s * y.s * cocycle(ctx, x.f, y.f)};
}

ExtElem ext_inverse(const ExtCtx& ctx, const ExtElem& x) {
  const KMatrix inv = x.f.inverse();
  return ExtElem{inv, (x.s * cocycle(ctx, x.f, inv)).inverse()};
}

MuScalar comm_symbol(const ExtCtx& ctx, const KMatrix& f, const KMatrix& g) {
  if (!(f * g).same_value(g * f)) throw DomainError("comm_symbol: matrices do not commute");
  return cocycle(ctx, f, g) / cocycle(ctx, g, f);
}

MuScalar corrected_symbol(const ExtCtx& ctx, const KElem& a, const KElem& b) {
  const Lattice o = Lattice::standard(ctx.ring, 1);
  const KMatrix fa = KMatrix::scalar(a, 1);
  const KMatrix fb = KMatrix::scalar(b, 1);
  const auto da = rel_dim(o, lat_apply(fa, o), ctx.n);
  const auto db = rel_dim(o, lat_apply(fb, o), ctx.n);
  MuScalar sym = comm_symbol(ctx, fa, fb);
  if ((da * db) % 2 != 0) sym *= mu_minus_one(ctx.ring->field(), ctx.n);
  return sym;
}

}  // namespace resforge
