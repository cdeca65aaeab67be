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

#include "resforge/sampling.hpp"

#include <algorithm>

#include "resforge/error.hpp"

namespace resforge {

std::uint64_t Sampler::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Sampler: empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = 0;
  do {
    x = rng_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Sampler::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

MuSetAut Sampler::muset_aut(const MuSet& set) {
  std::vector<std::uint32_t> sigma(set.t), mu(set.t);
  for (std::uint32_t i = 0; i < set.t; ++i) sigma[i] = i;
  for (std::uint32_t i = set.t; i > 1; --i) std::swap(sigma[i - 1], sigma[below(i)]);
  for (auto& m : mu) m = static_cast<std::uint32_t>(below(set.n));
  return MuSetAut(set, std::move(sigma), std::move(mu));
}

FieldElem Sampler::field_unit(const FieldCtx& field) {
  return FieldElem{static_cast<std::uint32_t>(1 + below(field.order() - 1))};
}

KElem Sampler::unit(const std::shared_ptr<const RingCtx>& ring) {
  const int prec = ring->precision();
  GrElem x = ring->lift(field_unit(ring->field()));
  for (std::uint32_t i = 0; i < ring->degree(); ++i) {
    x.c[i] += ring->p() * below(ring->pow_p(prec - 1));
  }
  return KElem::from_parts(ring, 0, x, prec);
}

KElem Sampler::element(const std::shared_ptr<const RingCtx>& ring, int vmin, int vmax) {
  return KElem::uniformizer_power(ring, static_cast<int>(range(vmin, vmax))) * unit(ring);
}

KMatrix Sampler::gl(const std::shared_ptr<const RingCtx>& ring, std::size_t m, int vmin,
                    int vmax) {
  for (;;) {
    KMatrix a(ring, m, m);
    for (auto r = 0u; r < m; ++r) {
      for (auto c = 0u; c < m; ++c) {
        if (m > 1 && below(4) == 0) continue;
        a.at(r, c) = element(ring, vmin, vmax);
      }
    }
    if (!a.det().is_zero()) return a;
  }
}

KMatrix Sampler::gl_o(const std::shared_ptr<const RingCtx>& ring, std::size_t m) {
  for (;;) {
    KMatrix a(ring, m, m);
    for (auto r = 0u; r < m; ++r) {
      for (auto c = 0u; c < m; ++c) {
        if (below(3) == 0) continue;
        a.at(r, c) = element(ring, 0, 1);
      }
    }
    const KElem d = a.det();
    if (!d.is_zero() && d.val() == 0) return a;
  }
}

KMatrix Sampler::integral(const std::shared_ptr<const RingCtx>& ring, std::size_t m, int vmax) {
  return gl(ring, m, 0, vmax);
}

ModuleMap Sampler::module_aut(const FiniteModule& t) {
  const RingCtx& ring = t.ring();
  const std::size_t r = t.rank();
  for (;;) {
    std::vector<GrElem> m(r * r);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < r; ++i) {
        const int e = t.exps()[j];
        const int shift = std::max(0, e - t.exps()[i]);
        GrElem x;
        for (std::uint32_t k = 0; k < ring.degree(); ++k) x.c[k] = below(ring.pow_p(e));
        m[j * r + i] = ring.shift_up(x, shift, e);
      }
    }
    ModuleMap g(t, t, std::move(m));
    if (g.is_automorphism()) return g;
  }
}

StableFlag Sampler::nested(const std::shared_ptr<const RingCtx>& ring, std::size_t m,
                           int max_step) {
  const auto step = [&](const Lattice& top) {
    for (;;) {
      const Lattice next = Lattice::span(top.basis() * integral(ring, m, 1));
      if (quotient_length(top, next) <= max_step) return next;
    }
  };
  StableFlag s;
  s.a = lat_apply(gl(ring, m, -1, 1), Lattice::standard(ring, m));
  s.b = step(s.a);
  s.c = step(s.b);
  s.g = KMatrix::identity(ring, m);
  return s;
}

StableFlag Sampler::stable_flag(const std::shared_ptr<const RingCtx>& ring, std::size_t m,
                                int max_exp) {
  std::vector<int> b(m), c(m);
  for (std::size_t i = 0; i < m; ++i) {
    b[i] = static_cast<int>(range(0, max_exp));
    c[i] = static_cast<int>(range(b[i], max_exp));
  }
  KMatrix g0(ring, m, m);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const int lo = std::max({0, b[i] - b[j], c[i] - c[j]});
        g0.at(i, j) = below(4) == 0 && i != j ? KElem::zero(ring) : element(ring, lo, lo + 1);
      }
    }
    const KElem d = g0.det();
    if (!d.is_zero() && d.val() == 0) break;
  }
  std::vector<KElem> db, dc;
  for (std::size_t i = 0; i < m; ++i) {
    db.push_back(KElem::uniformizer_power(ring, b[i]));
    dc.push_back(KElem::uniformizer_power(ring, c[i]));
  }
  const KMatrix h = gl_o(ring, m);
  StableFlag s;
  s.a = Lattice::standard(ring, m);
  s.b = Lattice::span(h * KMatrix::diagonal(db));
  s.c = Lattice::span(h * KMatrix::diagonal(dc));
  s.g = h * g0 * h.inverse();
  return s;
}

}  // namespace resforge
