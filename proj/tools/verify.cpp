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

#include "verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "resforge/error.hpp"
#include "resforge/parse.hpp"
#include "resforge/sampling.hpp"
#include "resforge/symbols.hpp"

namespace resforge::cli {

using nlohmann::json;

void VerifyReport::check(const std::string& property, const std::function<bool()>& body,
                         const std::function<json()>& witness) {
  PropertyTally& t = tally(property);
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const BoundError&) {
    ++t.skipped;
    return;
  } catch (const std::exception& e) {
    error = e.what();
  }
  ++t.checked;
  if (ok) return;
  ++t.failed;
  if (!counterexample_) {
    json w;
    try {
      w = witness();
    } catch (const std::exception& e) {
      w = {{"witness_error", e.what()}};
    }
    w["property"] = property;
    if (!error.empty()) w["error"] = error;
    counterexample_ = std::move(w);
  }
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& [name, t] : other.props_) {
    PropertyTally& mine = tally(name);
    mine.checked += t.checked;
    mine.failed += t.failed;
    mine.skipped += t.skipped;
  }
  if (!counterexample_ && other.counterexample_) counterexample_ = other.counterexample_;
}

PropertyTally& VerifyReport::tally(const std::string& property) {
  for (auto& [name, t] : props_) {
    if (name == property) return t;
  }
  props_.emplace_back(property, PropertyTally{});
  return props_.back().second;
}

bool VerifyReport::passed() const {
  return std::all_of(props_.begin(), props_.end(),
                     [](const auto& p) { return p.second.failed == 0; });
}

json VerifyReport::to_json() const {
  json props = json::object();
  for (const auto& [name, t] : props_) {
    props[name] = {{"checked", t.checked}, {"failed", t.failed}, {"skipped", t.skipped}};
  }
  return {{"suite", suite_},
          {"seed", seed_},
          {"passed", passed()},
          {"properties", props},
          {"counterexample", counterexample_ ? *counterexample_ : json(nullptr)}};
}

namespace {

struct FieldSpec {
  std::uint32_t p;
  std::uint32_t f;
};

std::vector<FieldSpec> fields_or(const VerifyOptions& o, std::vector<FieldSpec> defaults) {
  if (o.p) return {{*o.p, o.f}};
  return defaults;
}

std::vector<std::uint32_t> mu_orders(const FieldCtx& field) {
  std::vector<std::uint32_t> out;
  for (auto d : divisors(field.order() - 1)) out.push_back(static_cast<std::uint32_t>(d));
  return out;
}

json aut_json(const MuSetAut& f) {
  return {{"n", f.set().n}, {"t", f.set().t}, {"sigma", f.sigma()}, {"mu", f.mu()}};
}

json module_map_json(const ModuleMap& g) {
  json m = json::array();
  for (const auto& a : g.matrix()) {
    json c = json::array();
    for (std::uint32_t i = 0; i < g.source().ring().degree(); ++i) c.push_back(a.c[i]);
    m.push_back(c);
  }
  return {{"exps", g.source().exps()}, {"matrix", m}};
}

KElem unit_lift(const std::shared_ptr<const RingCtx>& ring, std::uint32_t code) {
  return KElem::from_ring(ring, 0, ring->lift(FieldElem{code}), ring->precision());
}

void suite_zolotarev(const VerifyOptions& o, VerifyReport& r) {
  std::vector<FieldSpec> fields;
  if (o.p) {
    fields.push_back({*o.p, o.f});
  } else {
    for (std::uint32_t p = 3; p <= 31; p += 2) {
      if (is_prime(p)) fields.push_back({p, 1});
    }
    for (FieldSpec s : {FieldSpec{3, 2}, FieldSpec{5, 2}, FieldSpec{3, 3}, FieldSpec{7, 2}}) {
      fields.push_back(s);
    }
  }
  for (const auto& spec : fields) {
    const auto field = FieldCtx::make(spec.p, spec.f);
    if (field->order() % 2 == 0) continue;
    for (std::uint32_t a = 1; a < field->order(); ++a) {
      r.check(
          "sign_equals_quadratic_character",
          [&] {
            const int euler = power_residue_char(*field, FieldElem{a}, 2).is_identity() ? 1 : -1;
            return zolotarev_sign(*field, FieldElem{a}) == euler;
          },
          [&] { return json{{"q", field->order()}, {"a", field->to_string(FieldElem{a})}}; });
    }
  }
}

void suite_muset(const VerifyOptions& o, VerifyReport& r) {
  Sampler rng(o.seed);
  for (int trial = 0; trial < 200; ++trial) {
    const MuSet x{static_cast<std::uint32_t>(rng.range(1, 6)),
                  static_cast<std::uint32_t>(rng.range(0, 20))};
    const MuSetAut f = rng.muset_aut(x), g = rng.muset_aut(x), h = rng.muset_aut(x);
    r.check(
        "delta_homomorphism",
        [&] { return aut_delta(aut_compose(f, g)) == aut_delta(f) * aut_delta(g); },
        [&] { return json{{"f", aut_json(f)}, {"g", aut_json(g)}}; });
    r.check(
        "abelianization_conjugation_invariant",
        [&] {
          return aut_abelianize(aut_compose(aut_compose(h, f), aut_inverse(h))) ==
                 aut_abelianize(f);
        },
        [&] { return json{{"f", aut_json(f)}, {"h", aut_json(h)}}; });
    r.check(
        "inverse",
        [&] { return aut_compose(f, aut_inverse(f)) == MuSetAut::identity(x); },
        [&] { return json{{"f", aut_json(f)}}; });

    const MuSet two{2, static_cast<std::uint32_t>(rng.range(0, 20))};
    const MuSetAut s = rng.muset_aut(two);
    r.check(
        "sign_lemma_n2",
        [&] { return perm_sign(s) == (aut_delta(s).is_identity() ? 1 : -1); },
        [&] { return json{{"f", aut_json(s)}}; });

    const std::uint32_t n = static_cast<std::uint32_t>(rng.range(1, 4));
    const MuSet px{n, static_cast<std::uint32_t>(rng.range(0, 5))};
    const MuSet py{n, static_cast<std::uint32_t>(rng.range(0, 5))};
    const MuSetAut pf = rng.muset_aut(px);
    r.check(
        "product_lemma",
        [&] { return aut_delta(aut_extend(pf, py)) == aut_delta(pf); },
        [&] { return json{{"f", aut_json(pf)}, {"y_orbits", py.t}}; });
  }
  for (const auto& spec : fields_or(o, {{2, 2}, {5, 1}, {7, 1}, {3, 2}, {13, 1}, {5, 2}, {3, 3}, {7, 2}})) {
    const auto field = FieldCtx::make(spec.p, spec.f);
    const auto ring = RingCtx::make(field);
    const FiniteModule k(ring, {1});
    for (std::uint32_t n : mu_orders(*field)) {
      for (std::uint32_t a = 1; a < field->order(); ++a) {
        r.check(
            "transfer_lemma",
            [&] {
              const ModuleMap m(k, k, {ring->lift(FieldElem{a})});
              return aut_delta(module_aut_as_musetaut(m, n, BasepointRule::kLeast, o.bound)) ==
                     power_residue_char(*field, FieldElem{a}, n);
            },
            [&] {
              return json{{"q", field->order()}, {"n", n}, {"a", field->to_string(FieldElem{a})}};
            });
      }
    }
  }
}

// Quotients of a flag C in B in A and the short exact sequence B/C -> A/C -> A/B.
struct FlagSequence {
  Quotient x, y, z;
  ModuleMap iota, proj;
};

FlagSequence flag_sequence(const ExtCtx& ctx, const Lattice& a, const Lattice& b,
                           const Lattice& c) {
  FlagSequence s{quotient_struct(b, c), quotient_struct(a, c), quotient_struct(a, b), {}, {}};
  const KMatrix id = KMatrix::identity(ctx.ring, a.rank());
  s.y.module.require_enumerable(ctx.bound);
  s.iota = induced_map(id, s.x, s.y);
  s.proj = induced_map(id, s.y, s.z);
  return s;
}

void suite_torsor(const VerifyOptions& o, VerifyReport& r) {
  Sampler rng(o.seed);
  const auto fields = fields_or(
      o, {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}});
  for (const auto& spec : fields) {
    const auto field = FieldCtx::make(spec.p, spec.f);
    const auto ring = RingCtx::make(field);
    for (std::uint32_t n : mu_orders(*field)) {
      for (int e = 1; e <= 3; ++e) {
        const FiniteModule t(ring, {e});
        if (t.size() > o.bound) continue;
        for (int trial = 0; trial < 5; ++trial) {
          const ModuleMap g = rng.module_aut(t), h = rng.module_aut(t);
          r.check(
              "fast_equals_brute",
              [&] {
                return det_of_module_aut(g, n, DetMethod::kFast) ==
                       det_of_module_aut(g, n, DetMethod::kBrute, BasepointRule::kLeast, o.bound);
              },
              [&] { return json{{"q", field->order()}, {"n", n}, {"g", module_map_json(g)}}; });
          r.check(
              "det_multiplicative",
              [&] {
                return det_of_module_aut(compose(g, h), n, DetMethod::kBrute,
                                         BasepointRule::kLeast, o.bound) ==
                       det_of_module_aut(g, n, DetMethod::kBrute, BasepointRule::kLeast,
                                         o.bound) *
                           det_of_module_aut(h, n, DetMethod::kBrute, BasepointRule::kLeast,
                                             o.bound);
              },
              [&] {
                return json{{"q", field->order()}, {"n", n}, {"g", module_map_json(g)},
                            {"h", module_map_json(h)}};
              });
        }
      }
    }
    if (field->order() <= 5) {
      const std::uint32_t q = field->order();
      const FiniteModule plane(ring, {1, 1});
      for (std::uint32_t code = 0; code < q * q * q * q; ++code) {
        std::vector<FieldElem> m{FieldElem{code % q}, FieldElem{code / q % q},
                                 FieldElem{code / q / q % q}, FieldElem{code / q / q / q}};
        const FieldElem det = field_det(*field, m, 2);
        if (det == FieldElem{0}) continue;
        r.check(
            "det_is_classical_det",
            [&] {
              std::vector<GrElem> lifts;
              for (auto x : m) lifts.push_back(ring->lift(x));
              const ModuleMap g(plane, plane, lifts);
              return det_of_module_aut(g, q - 1, DetMethod::kBrute, BasepointRule::kLeast,
                                       o.bound) == mu_dlog(*field, det, q - 1);
            },
            [&] { return json{{"q", q}, {"matrix_code", code}}; });
      }
    }
  }
  for (const auto& spec : fields_or(o, {{3, 1}, {5, 1}, {7, 1}})) {
    const auto ring = RingCtx::make(FieldCtx::make(spec.p, spec.f));
    for (int trial = 0; trial < 40; ++trial) {
      const auto ns = mu_orders(ring->field());
      const ExtCtx ctx(ring, ns[rng.below(ns.size())], BasepointRule::kLeast, o.bound);
      const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
      const StableFlag flag = rng.stable_flag(ring, m, 2);
      const KMatrix h = rng.gl(ring, m, -1, 1);
      r.check(
          "exact_sequence_naturality",
          [&] {
            const auto s = flag_sequence(ctx, flag.a, flag.b, flag.c);
            const auto dx = det_of_module_aut(induced_map(flag.g, s.x, s.x), ctx.n);
            const auto dy = det_of_module_aut(induced_map(flag.g, s.y, s.y), ctx.n);
            const auto dz = det_of_module_aut(induced_map(flag.g, s.z, s.z), ctx.n);
            return dx * dz == dy;
          },
          [&] {
            return json{{"p", spec.p}, {"n", ctx.n}, {"g", matrix_to_json(flag.g)},
                        {"b", lattice_to_json(flag.b)}, {"c", lattice_to_json(flag.c)}};
          });
      r.check(
          "exact_sequence_transport",
          [&] {
            const auto s = flag_sequence(ctx, flag.a, flag.b, flag.c);
            const auto t = flag_sequence(ctx, lat_apply(h, flag.a), lat_apply(h, flag.b),
                                         lat_apply(h, flag.c));
            const auto c0 = exact_seq_iso(s.iota, s.proj, ctx.n, ctx.rule, ctx.bound);
            const auto c1 = exact_seq_iso(t.iota, t.proj, ctx.n, ctx.rule, ctx.bound);
            const auto dx = det_iso_scalar(induced_map(h, s.x, t.x), ctx.n);
            const auto dy = det_iso_scalar(induced_map(h, s.y, t.y), ctx.n);
            const auto dz = det_iso_scalar(induced_map(h, s.z, t.z), ctx.n);
            return c1 * dx * dz == c0 * dy;
          },
          [&] {
            return json{{"p", spec.p}, {"n", ctx.n}, {"h", matrix_to_json(h)},
                        {"b", lattice_to_json(flag.b)}, {"c", lattice_to_json(flag.c)}};
          });
    }
  }
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const MuLine l{"L", n};
    for (std::uint32_t e = 0; e < n; ++e) {
      r.check(
          "duality_perfect_pairing",
          [&] {
            std::vector<bool> seen(n, false);
            for (std::uint32_t k = 0; k < n; ++k) {
              const auto v = duality_contract({l, MuScalar(n, e)}, {line_dual(l), MuScalar(n, k)});
              if (seen[v.exp()]) return false;
              seen[v.exp()] = true;
            }
            return true;
          },
          [&] { return json{{"n", n}, {"exp", e}}; });
    }
  }
}

void suite_lattice(const VerifyOptions& o, VerifyReport& r) {
  Sampler rng(o.seed);
  for (const auto& spec : fields_or(o, {{3, 1}, {5, 1}, {7, 1}})) {
    const auto ring = RingCtx::make(FieldCtx::make(spec.p, spec.f));
    const auto ns = mu_orders(ring->field());
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t m = static_cast<std::size_t>(rng.range(1, 3));
      const Lattice a = lat_apply(rng.gl(ring, m, -3, 3), Lattice::standard(ring, m));
      const Lattice b = lat_apply(rng.gl(ring, m, -3, 3), Lattice::standard(ring, m));
      const auto witness = [&] {
        return json{{"p", spec.p}, {"a", lattice_to_json(a)}, {"b", lattice_to_json(b)}};
      };
      r.check(
          "intersection_sum_inclusions",
          [&] {
            const Lattice s = lat_sum(a, b), i = lat_intersect(a, b);
            return lat_contains(a, i) && lat_contains(b, i) && lat_contains(s, a) &&
                   lat_contains(s, b);
          },
          witness);
      r.check(
          "second_isomorphism_cardinality",
          [&] {
            return quotient_length(lat_sum(a, b), a) == quotient_length(b, lat_intersect(a, b));
          },
          witness);
      r.check(
          "commensurable_quotients_finite",
          [&] {
            const Lattice s = lat_sum(a, b);
            return quotient_struct(s, a).module.length() == quotient_length(s, a) &&
                   quotient_struct(s, b).module.length() == quotient_length(s, b);
          },
          witness);
      const std::uint32_t n = ns[rng.below(ns.size())];
      r.check(
          "rel_dim_antisymmetric", [&] { return rel_dim(a, b, n) == -rel_dim(b, a, n); },
          witness);

      const StableFlag flag = rng.nested(ring, m, 4);
      r.check(
          "dimension_additivity",
          [&] {
            const boost::multiprecision::cpp_int q = ring->field().order();
            const auto orbits = [&](const Lattice& x, const Lattice& y) {
              return boost::multiprecision::pow(q, quotient_length(x, y)) - 1;
            };
            for (std::uint32_t k : ns) {
              const auto lhs = orbits(flag.a, flag.b) / k + orbits(flag.b, flag.c) / k;
              const auto rhs = orbits(flag.a, flag.c) / k;
              for (std::uint32_t mod : ns) {
                if ((lhs - rhs) % mod != 0) return false;
              }
            }
            return true;
          },
          [&] {
            return json{{"p", spec.p}, {"a", lattice_to_json(flag.a)},
                        {"b", lattice_to_json(flag.b)}, {"c", lattice_to_json(flag.c)}};
          });
    }
  }
}

void suite_cocycle(const VerifyOptions& o, VerifyReport& r) {
  Sampler rng(o.seed);
  for (const auto& spec : fields_or(o, {{3, 1}, {5, 1}, {7, 1}})) {
    const auto ring = RingCtx::make(FieldCtx::make(spec.p, spec.f));
    const auto ns = mu_orders(ring->field());
    for (int trial = 0; trial < 30; ++trial) {
      const std::uint32_t n = ns[rng.below(ns.size())];
      const ExtCtx ctx(ring, n, BasepointRule::kLeast, o.bound);
      const ExtCtx alt(ring, n, BasepointRule::kSecondLeast, o.bound);
      const std::size_t m = static_cast<std::size_t>(rng.range(1, 2));
      const int vmax = m == 1 ? 2 : 1;
      const KMatrix f = rng.gl(ring, m, -vmax, vmax);
      const KMatrix g = rng.gl(ring, m, -vmax, vmax);
      const KMatrix h = rng.gl(ring, m, -vmax, vmax);
      const KMatrix id = KMatrix::identity(ring, m);
      const auto triple = [&] {
        return json{{"p", spec.p}, {"n", n}, {"f", matrix_to_json(f)}, {"g", matrix_to_json(g)},
                    {"h", matrix_to_json(h)}};
      };
      r.check(
          "cocycle_identity",
          [&] {
            return cocycle(ctx, f, g * h) * cocycle(ctx, g, h) ==
                   cocycle(ctx, f * g, h) * cocycle(ctx, f, g);
          },
          triple);
      r.check(
          "normalized",
          [&] { return cocycle(ctx, id, g).is_identity() && cocycle(ctx, f, id).is_identity(); },
          triple);

      // Commuting elements of the algebra K[f].
      const auto poly = [&](const KMatrix& base) {
        for (;;) {
          const KMatrix c = KMatrix::scalar(rng.element(ring, -vmax, vmax), m) +
                            KMatrix::scalar(rng.element(ring, -vmax, vmax), m) * base;
          if (!c.det().is_zero()) return c;
        }
      };
      const KMatrix g1 = poly(f), f2 = poly(f);
      const auto pair = [&] {
        return json{{"p", spec.p}, {"n", n}, {"f", matrix_to_json(f)}, {"g", matrix_to_json(g1)},
                    {"f2", matrix_to_json(f2)}};
      };
      r.check(
          "antisymmetry",
          [&] { return comm_symbol(ctx, f, g1) == comm_symbol(ctx, g1, f).inverse(); }, pair);
      r.check(
          "bimultiplicative",
          [&] {
            return comm_symbol(ctx, f * f2, g1) == comm_symbol(ctx, f, g1) * comm_symbol(ctx, f2, g1);
          },
          pair);
      r.check(
          "inverse_argument",
          [&] { return comm_symbol(ctx, f.inverse(), g1) == comm_symbol(ctx, f, g1).inverse(); },
          pair);
      r.check(
          "trivialization_independence",
          [&] { return comm_symbol(ctx, f, g1) == comm_symbol(alt, f, g1); }, pair);
      r.check(
          "group_law_commutator",
          [&] {
            const ExtElem x{f, MuScalar::identity(n)}, y{g1, MuScalar::identity(n)};
            const ExtElem c = ext_mul(
                ctx, ext_mul(ctx, ext_mul(ctx, x, y), ext_inverse(ctx, x)), ext_inverse(ctx, y));
            return c.f.same_value(id) && c.s == comm_symbol(ctx, f, g1);
          },
          pair);

      const KMatrix u = rng.gl_o(ring, m);
      KMatrix u2 = u;
      for (;;) {
        u2 = KMatrix::scalar(rng.element(ring, 0, 1), m) +
             KMatrix::scalar(rng.element(ring, 0, 1), m) * u;
        const KElem d = u2.det();
        if (!d.is_zero() && d.val() == 0) break;
      }
      r.check(
          "integral_pairs_trivial", [&] { return comm_symbol(ctx, u, u2).is_identity(); },
          [&] {
            return json{{"p", spec.p}, {"n", n}, {"f", matrix_to_json(u)}, {"g", matrix_to_json(u2)}};
          });
      const KElem a = rng.element(ring, -2, 2);
      r.check(
          "self_pairing_trivial",
          [&] { return comm_symbol(ctx, KMatrix::scalar(a, 1), KMatrix::scalar(a, 1)).is_identity(); },
          [&] { return json{{"p", spec.p}, {"n", n}, {"a", format_element(a)}}; });

      const Lattice v = Lattice::standard(ring, m);
      const Lattice la = lat_apply(f, v), lb = lat_apply(g, v), lc = lat_apply(h, v);
      r.check(
          "contraction_path_independence",
          [&] {
            const Lattice common = lat_intersect(lat_intersect(la, lb), lc);
            const KMatrix p = KMatrix::scalar(KElem::uniformizer_power(ring, 1), m);
            return kappa(ctx, la, lb, lc) ==
                   kappa_through(ctx, la, lb, lc, lat_apply(p, common));
          },
          triple);
    }
  }
}

std::vector<std::uint32_t> units_of(const FieldCtx& field) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 1; a < field.order(); ++a) out.push_back(a);
  return out;
}

template <typename Body>
void sweep(const VerifyOptions& o, Body body) {
  for (const auto& spec : fields_or(o, {{3, 1}, {5, 1}, {7, 1}, {13, 1}})) {
    const auto ring = RingCtx::make(FieldCtx::make(spec.p, spec.f));
    const int vmax = spec.f == 1 ? 2 : 1;
    for (std::uint32_t n : mu_orders(ring->field())) {
      const ExtCtx ctx(ring, n, BasepointRule::kLeast, o.bound);
      for (int va = -vmax; va <= vmax; ++va) {
        for (std::uint32_t ua : units_of(ring->field())) {
          const KElem a = KElem::uniformizer_power(ring, va) * unit_lift(ring, ua);
          for (int vb = -vmax; vb <= vmax; ++vb) {
            for (std::uint32_t ub : units_of(ring->field())) {
              body(ctx, a, KElem::uniformizer_power(ring, vb) * unit_lift(ring, ub));
            }
          }
        }
      }
    }
  }
}

json pair_json(const ExtCtx& ctx, const KElem& a, const KElem& b) {
  return {{"p", ctx.ring->p()}, {"f", ctx.ring->degree()}, {"n", ctx.n},
          {"a", format_element(a)}, {"b", format_element(b)}};
}

void suite_theorem(const VerifyOptions& o, VerifyReport& r) {
  sweep(o, [&](const ExtCtx& ctx, const KElem& a, const KElem& b) {
    r.check(
        "commutator_equals_tame_formula",
        [&] {
          const KElem t = a.pow(b.val()) * b.pow(-a.val());
          return comm_symbol(ctx, KMatrix::scalar(a, 1), KMatrix::scalar(b, 1)) ==
                 power_residue_char(ctx.ring->field(), t.reduce_mod_pi(), ctx.n);
        },
        [&] { return pair_json(ctx, a, b); });
  });
}

void suite_corollary(const VerifyOptions& o, VerifyReport& r) {
  sweep(o, [&](const ExtCtx& ctx, const KElem& a, const KElem& b) {
    r.check(
        "three_way_agreement", [&] { return crosscheck(ctx, a, b).agree; },
        [&] { return pair_json(ctx, a, b); });
  });
  Sampler rng(o.seed);
  for (const auto& spec : fields_or(o, {{3, 1}, {5, 1}, {7, 1}, {13, 1}})) {
    const auto ring = RingCtx::make(FieldCtx::make(spec.p, spec.f));
    for (std::uint32_t n : mu_orders(ring->field())) {
      for (int trial = 0; trial < 100; ++trial) {
        const KElem a = rng.element(ring, -3, 3);
        if ((KElem::from_int(ring, 1) - a).is_zero()) continue;
        r.check(
            "steinberg", [&] { return steinberg_check(a, n); },
            [&] { return json{{"p", spec.p}, {"n", n}, {"a", format_element(a)}}; });
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"zolotarev", "muset",   "torsor",    "lattice",
                                              "cocycle",   "theorem", "corollary", "all"};
  return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
  VerifyReport report(suite, options.seed);
  const auto run = [&](const std::string& name) {
    if (name == "zolotarev") suite_zolotarev(options, report);
    else if (name == "muset") suite_muset(options, report);
    else if (name == "torsor") suite_torsor(options, report);
    else if (name == "lattice") suite_lattice(options, report);
    else if (name == "cocycle") suite_cocycle(options, report);
    else if (name == "theorem") suite_theorem(options, report);
    else if (name == "corollary") suite_corollary(options, report);
    else throw std::invalid_argument("unknown suite '" + name + "'");
  };
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      if (name != "all") run(name);
    }
  } else {
    run(suite);
  }
  return report;
}

}  // namespace resforge::cli
