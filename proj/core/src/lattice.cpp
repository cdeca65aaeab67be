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

#include "resforge/lattice.hpp"

#include <algorithm>
#include <string>

#include "resforge/error.hpp"

namespace resforge {

namespace {

void require_same_rank(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) throw DomainError("lattices of different rank");
}

// Column Hermite form of a rows x cols generator matrix; returns rows x rows.
KMatrix hermite_form(KMatrix g) {
  const std::size_t m = g.rows();
  if (g.cols() < m) throw DomainError("lattice: fewer generators than the rank");
  const auto& ring = g.ring_ptr();
  std::vector<int> k(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < g.cols(); ++j) {
      if (pivot_before(g.at(i, j), g.at(i, best))) best = j;
    }
    if (g.at(i, best).is_zero()) {
      throw DomainError("lattice: generators do not span K^m at the available precision");
    }
    g.swap_columns(i, best);
    k[i] = g.at(i, i).val();
    // Normalize the pivot to p^k.
    g.scale_column(i, KElem::uniformizer_power(ring, k[i]) / g.at(i, i));
    const KElem pinv = KElem::uniformizer_power(ring, -k[i]);
    for (std::size_t j = i + 1; j < g.cols(); ++j) {
      if (g.at(i, j).is_exact_zero()) continue;
      g.add_column_multiple(j, i, -(g.at(i, j) * pinv));
    }
  }
  KMatrix h(ring, m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c <= r; ++c) h.at(r, c) = g.at(r, c);
    h.at(r, r) = KElem::uniformizer_power(ring, k[r]);
  }
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      KElem quot;
      h.at(r, c).canonical_residue(k[r], &quot);
      if (!quot.is_zero()) h.add_column_multiple(c, r, -quot);
      h.at(r, c) = h.at(r, c).canonical_residue(k[r]);
    }
  }
  return h;
}

// Solve L y = x for the lower triangular basis L.
std::vector<KElem> triangular_solve(const KMatrix& l, const std::vector<KElem>& x) {
  std::vector<KElem> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    KElem acc = x[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (!l.at(i, j).is_exact_zero()) acc = acc - l.at(i, j) * y[j];
    }
    y[i] = acc / l.at(i, i);
  }
  return y;
}

}  // namespace

Lattice Lattice::span(const KMatrix& generators) { return Lattice(hermite_form(generators)); }

Lattice Lattice::standard(std::shared_ptr<const RingCtx> ring, std::size_t m) {
  return Lattice(KMatrix::identity(std::move(ring), m));
}

int Lattice::volume_exponent() const {
  int v = 0;
  for (std::size_t i = 0; i < rank(); ++i) v += basis_.at(i, i).val();
  return v;
}

Lattice lat_sum(const Lattice& a, const Lattice& b) {
  require_same_rank(a, b);
  const std::size_t m = a.rank();
  KMatrix g(a.ring_ptr(), m, 2 * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      g.at(r, c) = a.basis().at(r, c);
      g.at(r, m + c) = b.basis().at(r, c);
    }
  }
  return Lattice::span(g);
}

Lattice lat_dual(const Lattice& a) { return Lattice::span(a.basis().inverse().transpose()); }

Lattice lat_intersect(const Lattice& a, const Lattice& b) {
  require_same_rank(a, b);
  return lat_dual(lat_sum(lat_dual(a), lat_dual(b)));
}

bool lat_contains(const Lattice& a, const std::vector<KElem>& x) {
  if (x.size() != a.rank()) throw DomainError("lat_contains: vector length mismatch");
  for (const auto& y : triangular_solve(a.basis(), x)) {
    if (!y.is_zero() && y.val() < 0) return false;
    if (y.is_zero() && y.val() < 0) {
      throw PrecisionError("lat_contains: membership undecidable at the available precision");
    }
  }
  return true;
}

bool lat_contains(const Lattice& a, const Lattice& b) {
  require_same_rank(a, b);
  for (std::size_t c = 0; c < b.rank(); ++c) {
    if (!lat_contains(a, b.basis().column(c))) return false;
  }
  return true;
}

Lattice lat_apply(const KMatrix& f, const Lattice& a) {
  if (f.rows() != a.rank() || f.cols() != a.rank()) throw DomainError("lat_apply: shape mismatch");
  return Lattice::span(f * a.basis());
}

FiniteModule::Coords Quotient::project(const std::vector<KElem>& x) const {
  const auto c = adapted_inv.apply(x);
  FiniteModule::Coords out(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    out[i] = to_ring(c[components[i]], module.exps()[i]);
  }
  return out;
}

std::vector<KElem> Quotient::lift(const FiniteModule::Coords& c) const {
  const auto& ring = adapted.ring_ptr();
  std::vector<KElem> coords(adapted.cols(), KElem::zero(ring));
  for (std::size_t i = 0; i < components.size(); ++i) {
    coords[components[i]] = KElem::from_ring(ring, 0, c[i], ring->precision());
  }
  return adapted.apply(coords);
}

Quotient quotient_struct(const Lattice& top, const Lattice& bottom) {
  require_same_rank(top, bottom);
  const std::size_t m = top.rank();
  const auto& ring = top.ring_ptr();
  const KMatrix top_inv = top.basis().inverse();
  KMatrix t = top_inv * bottom.basis();
  if (t.min_valuation() < 0) throw DomainError("quotient_struct: lattice is not contained in the top");
  // Smith form by row and column operations; row operations are mirrored as
  // inverse column operations on u, so that top.basis * u stays adapted.
  KMatrix u = KMatrix::identity(ring, m);
  std::vector<int> d(m);
  for (std::size_t s = 0; s < m; ++s) {
    std::size_t br = s, bc = s;
    for (std::size_t r = s; r < m; ++r) {
      for (std::size_t c = s; c < m; ++c) {
        if (pivot_before(t.at(r, c), t.at(br, bc))) {
          br = r;
          bc = c;
        }
      }
    }
    if (t.at(br, bc).is_zero()) {
      throw DomainError("quotient_struct: bottom lattice is not full rank at the available precision");
    }
    t.swap_rows(s, br);
    u.swap_columns(s, br);
    t.swap_columns(s, bc);
    d[s] = t.at(s, s).val();
    const KElem pinv = t.at(s, s).inv();
    for (std::size_t r = s + 1; r < m; ++r) {
      if (t.at(r, s).is_exact_zero()) continue;
      const KElem c = t.at(r, s) * pinv;
      t.add_row_multiple(r, s, -c);
      u.add_column_multiple(s, r, c);
    }
    for (std::size_t c = s + 1; c < m; ++c) {
      if (t.at(s, c).is_exact_zero()) continue;
      t.add_column_multiple(c, s, -(t.at(s, c) * pinv));
    }
  }
  Quotient q;
  q.top = top;
  q.bottom = bottom;
  q.adapted = top.basis() * u;
  q.adapted_inv = q.adapted.inverse();
  std::vector<int> exps;
  for (std::size_t i = 0; i < m; ++i) {
    if (d[i] > 0) {
      q.components.push_back(i);
      exps.push_back(d[i]);
    }
  }
  q.module = FiniteModule(ring, std::move(exps));
  return q;
}

ModuleMap induced_map(const KMatrix& f, const Quotient& from, const Quotient& to) {
  const KMatrix n = to.adapted_inv * f * from.adapted;
  const std::size_t rows = to.components.size(), cols = from.components.size();
  std::vector<GrElem> m(rows * cols);
  for (std::size_t j = 0; j < rows; ++j) {
    const int e = to.module.exps()[j];
    for (std::size_t i = 0; i < cols; ++i) {
      const KElem& x = n.at(to.components[j], from.components[i]);
      try {
        m[j * cols + i] = to_ring(x, e);
      } catch (const DomainError&) {
        throw DomainError("induced_map: map does not send the source lattice into the target");
      }
    }
  }
  return ModuleMap(from.module, to.module, std::move(m));
}

int quotient_length(const Lattice& a, const Lattice& b) {
  return b.volume_exponent() - a.volume_exponent();
}

boost::multiprecision::cpp_int rel_dim(const Lattice& a, const Lattice& b, std::uint32_t n) {
  require_same_rank(a, b);
  const Lattice d = lat_intersect(a, b);
  const boost::multiprecision::cpp_int q = a.ring_ptr()->field().order();
  const auto orbits = [&](int length) {
    return (boost::multiprecision::pow(q, static_cast<unsigned>(length)) - 1) / n;
  };
  return orbits(quotient_length(a, d)) - orbits(quotient_length(b, d));
}

}  // namespace resforge
