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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "resforge/error.hpp"
#include "resforge/extension.hpp"
#include "resforge/lattice.hpp"
#include "resforge/muset.hpp"
#include "resforge/sampling.hpp"
#include "resforge/symbols.hpp"
#include "resforge/torsor.hpp"

namespace {

using namespace resforge;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts cases and keeps the first mismatch.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what();
  }
  std::uint64_t cases() const { return cases_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures_) + " mismatches, first: " + first_};
  }

 private:
  std::uint64_t cases_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

std::shared_ptr<const RingCtx> ring_of(std::uint32_t p, std::uint32_t f = 1) {
  return RingCtx::make(FieldCtx::make(p, f));
}

std::vector<std::uint32_t> mu_orders(const FieldCtx& k) {
  std::vector<std::uint32_t> out;
  for (auto d : divisors(k.order() - 1)) out.push_back(static_cast<std::uint32_t>(d));
  return out;
}

KElem elem(const std::shared_ptr<const RingCtx>& ring, int v, std::int64_t u) {
  return KElem::from_int(ring, u) * KElem::uniformizer_power(ring, v);
}

std::string show(const MuScalar& s) { return "zeta^" + std::to_string(s.exp()); }

std::string cases_text(std::uint64_t n, const char* noun = "cases") {
  return std::to_string(n) + " " + noun;
}

// Sweep over Q_p: v in [-2, 2] and every unit residue, for both arguments.
Outcome three_way_agreement() {
  Tally t;
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    auto ring = ring_of(p);
    for (std::uint32_t n : mu_orders(ring->field())) {
      const ExtCtx ctx(ring, n);
      for (int va = -2; va <= 2; ++va) {
        for (std::int64_t ua = 1; ua < p; ++ua) {
          const KElem a = elem(ring, va, ua);
          for (int vb = -2; vb <= 2; ++vb) {
            for (std::int64_t ub = 1; ub < p; ++ub) {
              const KElem b = elem(ring, vb, ub);
              const SymbolReport r = crosscheck(ctx, a, b);
              const auto expect = oracle::direct_symbol_exponent(
                  va, static_cast<std::uint64_t>(ua), vb, static_cast<std::uint64_t>(ub), p, n, true);
              t.expect(r.agree && r.direct->exp() == expect, [&] {
                return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " a=p^" +
                       std::to_string(va) + "*" + std::to_string(ua) + " b=p^" + std::to_string(vb) +
                       "*" + std::to_string(ub) + ": direct " + show(*r.direct) + ", muset " +
                       show(*r.muset) + ", extension " + show(*r.extension);
              });
            }
          }
        }
      }
    }
  }
  return t.outcome(cases_text(t.cases()) + " over p in {3,5,7,13}, all n | p-1");
}

Outcome commutator_formula() {
  Tally t;
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    auto ring = ring_of(p);
    for (std::uint32_t n : mu_orders(ring->field())) {
      const ExtCtx ctx(ring, n);
      for (int va = -2; va <= 2; ++va) {
        for (std::int64_t ua = 1; ua < p; ++ua) {
          const KMatrix f = KMatrix::scalar(elem(ring, va, ua), 1);
          for (int vb = -2; vb <= 2; ++vb) {
            for (std::int64_t ub = 1; ub < p; ++ub) {
              const KMatrix g = KMatrix::scalar(elem(ring, vb, ub), 1);
              const MuScalar c = comm_symbol(ctx, f, g);
              const auto expect = oracle::direct_symbol_exponent(
                  va, static_cast<std::uint64_t>(ua), vb, static_cast<std::uint64_t>(ub), p, n, false);
              t.expect(c.exp() == expect, [&] {
                return "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": got " + show(c) +
                       ", expected zeta^" + std::to_string(expect);
              });
            }
          }
        }
      }
    }
  }
  // The uncorrected and corrected symbols differ at (pi, pi) over Q_7.
  auto q7 = ring_of(7);
  const ExtCtx ctx(q7, 2);
  const KElem pi = KElem::uniformizer_power(q7, 1);
  const MuScalar comm = comm_symbol(ctx, KMatrix::scalar(pi, 1), KMatrix::scalar(pi, 1));
  const MuScalar full = power_residue_symbol(pi, pi, 2);
  t.expect(comm.is_identity() && full == MuScalar(2, 1), [&] {
    return "{pi,pi} = " + show(comm) + ", (pi,pi)_2 = " + show(full);
  });
  return t.outcome(cases_text(t.cases()) + ", including {pi,pi}=1 with (pi,pi)_2=-1 over Q_7");
}

Outcome zolotarev_is_legendre() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t p = 3; p <= 31; p += 2) {
    if (!is_prime(p)) continue;
    auto k = FieldCtx::make(p, 1);
    for (std::uint32_t a = 1; a < p; ++a) {
      const int s = zolotarev_sign(*k, FieldElem{a});
      t.expect(s == oracle::euler_criterion(a, p), [&] {
        return "p=" + std::to_string(p) + " a=" + std::to_string(a);
      });
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 1.0, [&] { return "took " + std::to_string(secs) + " s"; });
  return t.outcome(cases_text(t.cases() - 1) + " over odd p <= 31 in " + std::to_string(secs) + " s");
}

Outcome transfer_lemma() {
  Tally t;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{
      {2, 2}, {5, 1}, {7, 1}, {3, 2}, {13, 1}, {5, 2}, {3, 3}, {7, 2}};
  for (auto [p, f] : fields) {
    auto ring = ring_of(p, f);
    const FieldCtx& k = ring->field();
    const FiniteModule t1(ring, {1});
    for (std::uint32_t n : mu_orders(k)) {
      for (std::uint32_t a = 1; a < k.order(); ++a) {
        const ModuleMap m(t1, t1, {ring->lift(FieldElem{a})});
        const MuScalar delta = aut_delta(module_aut_as_musetaut(m, n));
        const MuScalar expect = mu_dlog(k, k.pow(FieldElem{a}, (k.order() - 1) / n), n);
        bool ok = delta == expect;
        if (f == 1) ok = ok && delta.exp() == oracle::naive_delta_mult(a, p, 1, n);
        t.expect(ok, [&] {
          return "q=" + std::to_string(k.order()) + " n=" + std::to_string(n) + " a=" +
                 k.to_string(FieldElem{a}) + ": Delta " + show(delta) + ", power " + show(expect);
        });
      }
    }
  }
  return t.outcome(cases_text(t.cases()) + " over q in {4,5,7,9,13,25,27,49}");
}

Outcome sign_lemma() {
  Tally t;
  Sampler s(101);
  for (int i = 0; i < 1000; ++i) {
    const MuSet x{2, static_cast<std::uint32_t>(s.below(21))};
    const MuSetAut f = s.muset_aut(x);
    const int sign = perm_sign(f);
    const int expect = aut_delta(f).is_identity() ? 1 : -1;
    t.expect(sign == expect && sign == oracle::inversion_sign(aut_to_permutation(f)),
             [&] { return "t=" + std::to_string(x.t); });
  }
  return t.outcome(cases_text(t.cases(), "random mu_2-automorphisms") + ", t <= 20");
}

Outcome product_lemma() {
  Tally t;
  Sampler s(102);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::uint32_t>(1 + s.below(4));
    const MuSet x{n, static_cast<std::uint32_t>(s.below(8))};
    const MuSet y{n, static_cast<std::uint32_t>(s.below(8))};
    const MuSetAut f = s.muset_aut(x);
    const MuSetAut fy = aut_extend(f, y);
    // Recount the twists of f x Id straight from its action on points.
    const MuSet xy = fy.set();
    std::uint64_t twist = 0;
    for (std::uint32_t o = 0; o < xy.t; ++o) twist += (fy.apply(xy.encode(o, 0)) - 1) % n;
    t.expect(aut_delta(fy) == aut_delta(f) && twist % n == aut_delta(f).exp(), [&] {
      return "n=" + std::to_string(n) + " t=" + std::to_string(x.t) + " u=" + std::to_string(y.t);
    });
  }
  return t.outcome(cases_text(t.cases(), "random (X, Y, f)") + ", n <= 4");
}

Outcome determinant_coherence() {
  Tally t;
  Sampler s(103);
  std::uint64_t autos = 0;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}};
  for (auto [p, f] : fields) {
    auto ring = ring_of(p, f);
    for (int e = 1; e <= 3; ++e) {
      const FiniteModule m(ring, {e});
      for (int i = 0; i < 50; ++i) {
        const ModuleMap g = s.module_aut(m);
        ++autos;
        for (std::uint32_t n : mu_orders(ring->field())) {
          const MuScalar fast = det_of_module_aut(g, n, DetMethod::kFast);
          const MuScalar brute = det_of_module_aut(g, n, DetMethod::kBrute);
          t.expect(fast == brute, [&] {
            return "q=" + std::to_string(ring->field().order()) + " e=" + std::to_string(e) +
                   " n=" + std::to_string(n) + ": fast " + show(fast) + ", brute " + show(brute);
          });
        }
      }
    }
  }
  std::uint64_t matrices = 0;
  for (auto [p, f] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
    auto ring = RingCtx::make(FieldCtx::make(p, f), 1);
    const FieldCtx& k = ring->field();
    const std::uint32_t q = k.order();
    const FiniteModule m(ring, {1, 1});
    for (std::uint32_t code = 0; code < q * q * q * q; ++code) {
      std::vector<FieldElem> fm{FieldElem{code % q}, FieldElem{code / q % q},
                                FieldElem{code / q / q % q}, FieldElem{code / q / q / q}};
      const FieldElem det = field_det(k, fm, 2);
      if (det.code == 0) continue;
      std::vector<GrElem> lifted;
      for (auto x : fm) lifted.push_back(ring->lift(x));
      const MuScalar d = det_of_module_aut(ModuleMap(m, m, lifted), q - 1, DetMethod::kBrute);
      ++matrices;
      t.expect(mu_embed(k, d) == det, [&] { return "GL_2(F_" + std::to_string(q) + ")"; });
    }
  }
  return t.outcome(std::to_string(autos) + " automorphisms of O/p^e (e <= 3, q <= 13), fast = brute; " +
                   std::to_string(matrices) + " matrices of GL_2(F_q), q <= 5, det = classical det");
}

struct Sequence {
  Quotient x, y, z;
};

Outcome exactness_naturality() {
  Tally t;
  Sampler s(104);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{3, 1}, {5, 1}, {7, 1}, {3, 2}};
  std::uint64_t nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    const auto [p, f] = fields[static_cast<std::size_t>(i) % fields.size()];
    auto ring = ring_of(p, f);
    const auto ns = mu_orders(ring->field());
    const std::uint32_t n = ns[s.below(ns.size())];
    const StableFlag fl = s.stable_flag(ring, 2, 2);
    // 0 -> B/C -> A/C -> A/B -> 0 with g acting on each term.
    const Quotient x = quotient_struct(fl.b, fl.c);
    const Quotient y = quotient_struct(fl.a, fl.c);
    const Quotient z = quotient_struct(fl.a, fl.b);
    const KMatrix id = KMatrix::identity(ring, 2);
    const MuScalar c = exact_seq_iso(induced_map(id, x, y), induced_map(id, y, z), n);
    (void)c;
    const MuScalar dx = det_of_module_aut(induced_map(fl.g, x, x), n);
    const MuScalar dy = det_of_module_aut(induced_map(fl.g, y, y), n);
    const MuScalar dz = det_of_module_aut(induced_map(fl.g, z, z), n);
    if (!dy.is_identity()) ++nontrivial;
    t.expect(dx * dz == dy, [&] {
      return "q=" + std::to_string(ring->field().order()) + " n=" + std::to_string(n) + ": det X " +
             show(dx) + ", det Z " + show(dz) + ", det Y " + show(dy);
    });
  }
  return t.outcome(cases_text(t.cases(), "random sequences") + " (" + std::to_string(nontrivial) +
                   " with nontrivial det on Y)");
}

Outcome cocycle_and_symbol_properties() {
  Tally t;
  Sampler s(105);
  std::uint64_t resampled = 0;
  const std::vector<std::uint32_t> primes{3, 5, 7};
  int triples = 0;
  while (triples < 200) {
    const std::uint32_t p = primes[static_cast<std::size_t>(triples) % primes.size()];
    auto ring = ring_of(p);
    const auto ns = mu_orders(ring->field());
    const ExtCtx ctx(ring, ns[s.below(ns.size())]);
    const std::size_t m = 1 + static_cast<std::size_t>(triples % 2);
    const int vmax = m == 1 ? 2 : 1;
    const KMatrix f = s.gl(ring, m, -vmax, vmax), g = s.gl(ring, m, -vmax, vmax),
                  h = s.gl(ring, m, -vmax, vmax);
    try {
      const MuScalar lhs = cocycle(ctx, f, g * h) * cocycle(ctx, g, h);
      const MuScalar rhs = cocycle(ctx, f * g, h) * cocycle(ctx, f, g);
      t.expect(lhs == rhs, [&] {
        return "cocycle p=" + std::to_string(p) + " m=" + std::to_string(m) + ": " + show(lhs) +
               " vs " + show(rhs);
      });
      ++triples;
    } catch (const BoundError&) {
      ++resampled;
    }
  }
  const std::uint64_t cocycle_cases = t.cases();

  int pairs = 0;
  while (pairs < 200) {
    const std::uint32_t p = primes[static_cast<std::size_t>(pairs) % primes.size()];
    auto ring = ring_of(p);
    const auto ns = mu_orders(ring->field());
    const ExtCtx ctx(ring, ns[s.below(ns.size())]);
    // Commuting f, f2, g: diagonal in a common random basis.
    const KMatrix basis = s.gl_o(ring, 2);
    const auto conj = [&](const KMatrix& d) { return basis * d * basis.inverse(); };
    const auto diag = [&] {
      return KMatrix::diagonal({s.element(ring, -1, 1), s.element(ring, -1, 1)});
    };
    const KMatrix f = conj(diag()), f2 = conj(diag()), g = conj(diag());
    const KMatrix u = s.gl_o(ring, 2);
    const KMatrix ui = conj(KMatrix::diagonal({s.unit(ring), s.unit(ring)}));
    try {
      const MuScalar fg = comm_symbol(ctx, f, g);
      t.expect(fg == comm_symbol(ctx, g, f).inverse(), [&] { return "antisymmetry"; });
      t.expect(comm_symbol(ctx, f * f2, g) == fg * comm_symbol(ctx, f2, g),
               [&] { return "bimultiplicativity"; });
      t.expect(comm_symbol(ctx, f.inverse(), g) == fg.inverse(), [&] { return "inverse"; });
      t.expect(comm_symbol(ctx, u, u * u * u).is_identity() &&
                   comm_symbol(ctx, ui, conj(KMatrix::diagonal({s.unit(ring), s.unit(ring)}))).is_identity(),
               [&] { return "integral pair"; });
      ++pairs;
    } catch (const BoundError&) {
      ++resampled;
    }
  }
  return t.outcome(std::to_string(cocycle_cases) + " cocycle triples (m in {1,2}, p in {3,5,7}); " +
                   std::to_string(pairs) + " commuting pairs x 4 properties; " +
                   "redrawn over the enumeration bound: " + std::to_string(resampled));
}

Outcome dimension_additivity() {
  Tally t;
  Sampler s(106);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{5, 1}, {7, 1}, {13, 1}, {3, 2}};
  for (int i = 0; i < 200; ++i) {
    const auto [p, f] = fields[static_cast<std::size_t>(i) % fields.size()];
    auto ring = ring_of(p, f);
    const StableFlag fl = s.nested(ring, 2, 2);
    bool ok = true;
    for (std::uint32_t m : mu_orders(ring->field())) {
      const auto ab = rel_dim(fl.a, fl.b, m), bc = rel_dim(fl.b, fl.c, m), ac = rel_dim(fl.a, fl.c, m);
      ok = ok && (ab + bc - ac) % m == 0;
      // Cross-check the orbit count by enumeration when the quotient is small.
      const Quotient q = quotient_struct(fl.a, fl.b);
      if (q.module.size() <= 5000) ok = ok && ab == module_as_muset(q.module, m).t;
    }
    t.expect(ok, [&] { return "q=" + std::to_string(ring->field().order()); });
  }
  return t.outcome(cases_text(t.cases(), "nested triples") + ", every m | q-1");
}

Outcome trivialization_independence() {
  Tally t;
  Sampler s(107);
  std::uint64_t cocycles_moved = 0;
  const std::vector<std::uint32_t> primes{5, 7, 13};
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t p = primes[static_cast<std::size_t>(i) % primes.size()];
    auto ring = ring_of(p);
    const auto ns = mu_orders(ring->field());
    const std::uint32_t n = ns[1 + s.below(ns.size() - 1)];
    const ExtCtx least(ring, n, BasepointRule::kLeast);
    const ExtCtx second(ring, n, BasepointRule::kSecondLeast);
    KMatrix f, g;
    if (i % 2 == 0) {
      f = KMatrix::scalar(s.element(ring, -2, 2), 1);
      g = KMatrix::scalar(s.element(ring, -2, 2), 1);
    } else {
      f = KMatrix::diagonal({s.element(ring, -1, 1), s.element(ring, -1, 1)});
      g = KMatrix::diagonal({s.element(ring, -1, 1), s.element(ring, -1, 1)});
    }
    const MuScalar a = comm_symbol(least, f, g), b = comm_symbol(second, f, g);
    if (!(cocycle(least, f, g) == cocycle(second, f, g))) ++cocycles_moved;
    t.expect(a == b, [&] { return "p=" + std::to_string(p) + ": " + show(a) + " vs " + show(b); });
  }
  return t.outcome(cases_text(t.cases(), "random pairs") + "; the cocycle itself changed on " +
                   std::to_string(cocycles_moved));
}

Outcome steinberg() {
  Tally t;
  Sampler s(108);
  std::uint64_t pairs = 0;
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    auto ring = ring_of(p);
    for (std::uint32_t n : mu_orders(ring->field())) {
      ++pairs;
      int done = 0;
      while (done < 500) {
        const KElem a = s.element(ring, -3, 3);
        if ((a - KElem::from_int(ring, 1)).is_zero()) continue;
        t.expect(steinberg_check(a, n), [&] { return "p=" + std::to_string(p) + " n=" + std::to_string(n); });
        ++done;
      }
    }
  }
  return t.outcome(cases_text(t.cases(), "checks") + " over " + std::to_string(pairs) + " (p, n) pairs");
}

Outcome unramified_sweep() {
  Tally t;
  auto ring = ring_of(3, 2);
  const FieldCtx& k = ring->field();
  std::vector<KElem> xs;
  for (int v = -1; v <= 1; ++v) {
    for (std::uint32_t u = 1; u < k.order(); ++u) {
      xs.push_back(KElem::from_parts(ring, v, ring->lift(FieldElem{u}), ring->precision()));
    }
  }
  for (std::uint32_t n : {2u, 4u, 8u}) {
    const ExtCtx ctx(ring, n);
    for (const auto& a : xs) {
      for (const auto& b : xs) {
        const SymbolReport r = crosscheck(ctx, a, b);
        t.expect(r.agree, [&] { return "n=" + std::to_string(n); });
      }
    }
  }
  return t.outcome(cases_text(t.cases()) + " at q = 9, n in {2,4,8}, |v| <= 1");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"three-way agreement", three_way_agreement},
      {"commutator equals the uncorrected formula", commutator_formula},
      {"Zolotarev sign equals Euler criterion", zolotarev_is_legendre},
      {"transfer: Delta of multiplication is the power character", transfer_lemma},
      {"n=2: permutation sign equals Delta", sign_lemma},
      {"product: Delta(f x Id) = Delta(f)", product_lemma},
      {"determinant coherence", determinant_coherence},
      {"exact sequences: det(g_X) det(g_Z) = det(g_Y)", exactness_naturality},
      {"cocycle identity and commutator properties", cocycle_and_symbol_properties},
      {"relative dimension additivity", dimension_additivity},
      {"trivialization independence", trivialization_independence},
      {"Steinberg relation", steinberg},
      {"unramified sweep at q = 9", unramified_sweep},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
