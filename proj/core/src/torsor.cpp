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

#include "resforge/torsor.hpp"

#include <limits>
#include <map>
#include <sstream>

#include "resforge/error.hpp"

namespace resforge {

namespace {

void require_same_n(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw DomainError("mu_n-lines with different n");
}

}  // namespace

MuLine line_tensor(const MuLine& l, const MuLine& m) {
  require_same_n(l.n, m.n);
  return MuLine{"(" + l.label + " x " + m.label + ")", l.n};
}

MuLine line_dual(const MuLine& l) { return MuLine{l.label + "^v", l.n}; }

TorsorElem tensor_elem(const TorsorElem& s, const TorsorElem& t) {
  return TorsorElem{line_tensor(s.line, t.line), s.exp * t.exp};
}

MuScalar duality_contract(const TorsorElem& s, const TorsorElem& phi) {
  if (!(phi.line == line_dual(s.line))) {
    throw DomainError("duality_contract: " + phi.line.label + " is not the dual of " +
                      s.line.label);
  }
  return s.exp * phi.exp;
}

MuLine det_line(const FiniteModule& t, std::uint32_t n, const std::string& label) {
  require_mu_n(t.ring().field(), n);
  return MuLine{"det(" + label + ")", n};
}

MuScalar det_of_module_aut(const ModuleMap& g, std::uint32_t n, DetMethod method,
                           BasepointRule rule, std::uint64_t bound) {
  const FieldCtx& field = g.source().ring().field();
  require_mu_n(field, n);
  if (!g.is_automorphism()) throw DomainError("det_of_module_aut: map is not an automorphism");
  if (method == DetMethod::kBrute) return aut_delta(module_aut_as_musetaut(g, n, rule, bound));
  MuScalar acc = MuScalar::identity(n);
  for (int level = 0; level < g.source().max_exp(); ++level) {
    std::size_t dim = 0;
    auto block = g.graded_block(level, &dim);
    acc *= power_residue_char(field, field_det(field, std::move(block), dim), n);
  }
  return acc;
}

MuScalar det_iso_scalar(const ModuleMap& g, std::uint32_t n, DetMethod method,
                        BasepointRule rule, std::uint64_t bound) {
  const FiniteModule& s = g.source();
  const FiniteModule& t = g.target();
  if (method == DetMethod::kFast && s.exps() == t.exps()) {
    // Base points depend only on the coordinate shape, so this is Delta of the
    // coordinate automorphism.
    return det_of_module_aut(ModuleMap(s, s, g.matrix()), n, DetMethod::kFast, rule, bound);
  }
  if (s.size() != t.size()) throw DomainError("det_iso_scalar: modules of different size");
  const auto src = OrbitIndex::of_module(s, n, rule, bound);
  const auto dst = OrbitIndex::of_module(t, n, rule, bound);
  std::vector<bool> hit(dst->orbit_count(), false);
  std::int64_t sum = 0;
  for (std::uint32_t i = 0; i < src->orbit_count(); ++i) {
    const std::uint64_t y = g.apply_index(src->rep(i));
    if (y == 0 || hit[dst->orbit(y)]) throw DomainError("det_iso_scalar: map is not bijective");
    hit[dst->orbit(y)] = true;
    sum += dst->exp(y);
  }
  return MuScalar(n, sum);
}

MuScalar fiber_iso(const OrbitIndex& y, const OrbitIndex& z, const std::vector<std::uint64_t>& f) {
  const std::uint32_t n = y.n();
  require_same_n(n, z.n());
  if (f.size() != y.size()) throw DomainError("fiber_iso: map size mismatch");
  std::vector<std::uint64_t> fiber(z.size(), 0);
  for (std::uint64_t p = 0; p < f.size(); ++p) {
    if (f[p] >= z.size()) throw DomainError("fiber_iso: map leaves the target");
    if (f[y.zeta_perm()[p]] != z.zeta_perm()[f[p]]) {
      throw DomainError("fiber_iso: map is not mu_n-equivariant");
    }
    ++fiber[f[p]];
  }
  if (fiber[0] != 1) throw DomainError("fiber_iso: the fiber over the point is not the point");
  for (std::uint64_t w = 1; w < z.size(); ++w) {
    if (fiber[w] % n != 1 % n || fiber[w] == 0) {
      throw DomainError("fiber_iso: fiber of size " + std::to_string(fiber[w]) +
                        " is not 1 mod " + std::to_string(n));
    }
  }
  std::int64_t sum = 0;
  for (std::uint64_t p = 1; p < f.size(); ++p) {
    if (z.is_rep(f[p])) sum += y.exp(p);
  }
  return MuScalar(n, sum);
}

namespace {

std::string sequence_key(const ModuleMap& iota, const ModuleMap& proj, std::uint32_t n,
                         BasepointRule rule) {
  std::ostringstream key;
  const RingCtx& ring = iota.source().ring();
  key << ring.p() << ',' << ring.degree() << ',' << n << ',' << static_cast<int>(rule);
  for (const auto* m : {&iota, &proj}) {
    key << '|';
    for (int e : m->source().exps()) key << e << ',';
    key << ':';
    for (int e : m->target().exps()) key << e << ',';
    key << ':';
    for (const auto& a : m->matrix()) {
      for (std::uint32_t j = 0; j < ring.degree(); ++j) key << a.c[j] << ',';
    }
  }
  return key.str();
}

MuScalar exact_seq_iso_uncached(const ModuleMap& iota, const ModuleMap& proj, std::uint32_t n,
                                BasepointRule rule, std::uint64_t bound) {
  const FiniteModule& x = iota.source();
  const FiniteModule& y = iota.target();
  const FiniteModule& z = proj.target();
  const auto ix = OrbitIndex::of_module(x, n, rule, bound);
  const auto iy = OrbitIndex::of_module(y, n, rule, bound);
  const auto iz = OrbitIndex::of_module(z, n, rule, bound);
  if (iy->size() / ix->size() != iz->size() || iy->size() % ix->size() != 0) {
    throw DomainError("exact_seq_iso: |Y| != |X| |Z|");
  }

  // X inside Y.
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<bool> in_x(iy->size(), false);
  for (std::uint64_t p = 0; p < ix->size(); ++p) {
    const std::uint64_t q = iota.apply_index(p);
    if (in_x[q]) throw DomainError("exact_seq_iso: first map is not injective");
    in_x[q] = true;
  }
  std::vector<std::uint64_t> proj_of(iy->size());
  std::uint64_t kernel = 0;
  for (std::uint64_t p = 0; p < iy->size(); ++p) {
    proj_of[p] = proj.apply_index(p);
    if (proj_of[p] == 0) {
      if (!in_x[p]) throw DomainError("exact_seq_iso: sequence is not exact in the middle");
      ++kernel;
    }
  }
  if (kernel != ix->size()) throw DomainError("exact_seq_iso: sequence is not exact in the middle");

  // det(Y) = det(X) (x) det(Y//X); Y//X keeps the order of Y off X.
  std::int64_t sum = 0;
  for (std::uint64_t r : ix->reps()) sum += iy->exp(iota.apply_index(r));
  std::vector<std::uint64_t> to_collapsed(iy->size(), kNone);
  std::vector<std::uint64_t> from_collapsed{0};
  to_collapsed[0] = 0;
  for (std::uint64_t p = 1; p < iy->size(); ++p) {
    if (in_x[p]) continue;
    to_collapsed[p] = from_collapsed.size();
    from_collapsed.push_back(p);
  }
  std::vector<std::uint64_t> zeta(from_collapsed.size());
  std::vector<std::uint64_t> f(from_collapsed.size());
  for (std::uint64_t w = 0; w < from_collapsed.size(); ++w) {
    zeta[w] = to_collapsed[iy->zeta_perm()[from_collapsed[w]]];
    f[w] = proj_of[from_collapsed[w]];
  }
  const OrbitIndex collapsed(n, zeta, rule);
  for (std::uint64_t r : collapsed.reps()) sum += iy->exp(from_collapsed[r]);

  // det(Z) = det(Y//X).
  sum += fiber_iso(collapsed, *iz, f).exp();
  return MuScalar(n, sum);
}

}  // namespace

MuScalar exact_seq_iso(const ModuleMap& iota, const ModuleMap& proj, std::uint32_t n,
                       BasepointRule rule, std::uint64_t bound) {
  if (!(iota.target() == proj.source())) throw DomainError("exact_seq_iso: maps do not compose");
  require_mu_n(iota.source().ring().field(), n);
  thread_local std::map<std::string, std::uint32_t> cache;
  const std::string key = sequence_key(iota, proj, n, rule);
  auto it = cache.find(key);
  if (it != cache.end()) return MuScalar(n, it->second);
  const MuScalar c = exact_seq_iso_uncached(iota, proj, n, rule, bound);
  cache.emplace(key, c.exp());
  return c;
}

}  // namespace resforge
