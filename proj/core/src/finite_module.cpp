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

#include "resforge/finite_module.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>

#include "resforge/error.hpp"

namespace resforge {

FiniteModule::FiniteModule(std::shared_ptr<const RingCtx> ring, std::vector<int> exps)
    : ring_(std::move(ring)), exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e <= 0) throw DomainError("FiniteModule: exponents must be positive");
    if (e > ring_->precision()) {
      throw PrecisionError("FiniteModule: exponent " + std::to_string(e) +
                           " exceeds the ring precision");
    }
  }
}

int FiniteModule::length() const {
  int s = 0;
  for (int e : exps_) s += e;
  return s;
}

int FiniteModule::max_exp() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

std::uint64_t FiniteModule::size() const {
  const std::uint64_t q = ring_->field().order();
  std::uint64_t s = 1;
  for (int i = 0; i < length(); ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    s *= q;
  }
  return s;
}

void FiniteModule::require_enumerable(std::uint64_t bound) const {
  if (size() > bound) {
    throw BoundError("finite module of length " + std::to_string(length()) + " over F_" +
                     std::to_string(ring_->field().order()) +
                     " exceeds the enumeration bound " + std::to_string(bound));
  }
}

std::uint64_t FiniteModule::encode(const Coords& x) const {
  std::uint64_t index = 0;
  const std::uint32_t f = ring_->degree();
  for (std::size_t i = exps_.size(); i-- > 0;) {
    const std::uint64_t m = ring_->pow_p(exps_[i]);
    for (std::uint32_t j = f; j-- > 0;) index = index * m + x[i].c[j] % m;
  }
  return index;
}

FiniteModule::Coords FiniteModule::decode(std::uint64_t index) const {
  Coords x(exps_.size());
  const std::uint32_t f = ring_->degree();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::uint64_t m = ring_->pow_p(exps_[i]);
    for (std::uint32_t j = 0; j < f; ++j) {
      x[i].c[j] = index % m;
      index /= m;
    }
  }
  return x;
}

ModuleMap::ModuleMap(FiniteModule source, FiniteModule target, std::vector<GrElem> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.size() != source_.rank() * target_.rank()) {
    throw DomainError("ModuleMap: matrix shape does not match the modules");
  }
  const RingCtx& ring = source_.ring();
  for (std::size_t j = 0; j < target_.rank(); ++j) {
    const int ej = target_.exps()[j];
    for (std::size_t i = 0; i < source_.rank(); ++i) {
      const int ei = source_.exps()[i];
      auto& a = matrix_[j * source_.rank() + i];
      a = ring.reduce(a, ej);
      if (ej > ei && ring.valuation(a, ej) < ej - ei) {
        throw DomainError("ModuleMap: matrix does not induce a well-defined map");
      }
    }
  }
}

ModuleMap ModuleMap::identity(const FiniteModule& t) {
  std::vector<GrElem> m(t.rank() * t.rank());
  for (std::size_t i = 0; i < t.rank(); ++i) m[i * t.rank() + i] = t.ring().one();
  return ModuleMap(t, t, std::move(m));
}

FiniteModule::Coords ModuleMap::apply(const FiniteModule::Coords& x) const {
  const RingCtx& ring = source_.ring();
  FiniteModule::Coords y(target_.rank());
  for (std::size_t j = 0; j < target_.rank(); ++j) {
    const int ej = target_.exps()[j];
    GrElem acc = ring.zero();
    for (std::size_t i = 0; i < source_.rank(); ++i) {
      acc = ring.add(acc, ring.mul(at(j, i), x[i], ej), ej);
    }
    y[j] = acc;
  }
  return y;
}

std::uint64_t ModuleMap::apply_index(std::uint64_t index) const {
  return target_.encode(apply(source_.decode(index)));
}

std::vector<FieldElem> ModuleMap::graded_block(int level, std::size_t* dim) const {
  std::vector<std::size_t> comps;
  for (std::size_t i = 0; i < source_.rank(); ++i) {
    if (source_.exps()[i] > level) comps.push_back(i);
  }
  *dim = comps.size();
  std::vector<FieldElem> block;
  block.reserve(comps.size() * comps.size());
  for (std::size_t r : comps) {
    for (std::size_t c : comps) block.push_back(source_.ring().residue(at(r, c)));
  }
  return block;
}

bool ModuleMap::is_automorphism() const {
  if (source_.exps() != target_.exps()) return false;
  for (int level = 0; level < source_.max_exp(); ++level) {
    std::size_t dim = 0;
    auto block = graded_block(level, &dim);
    if (field_det(source_.ring().field(), std::move(block), dim) == FieldElem{0}) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.target() == g.source())) throw DomainError("compose: modules do not match");
  const RingCtx& ring = f.source().ring();
  const int prec = ring.precision();
  const std::size_t r = g.target().rank(), k = g.source().rank(), c = f.source().rank();
  std::vector<GrElem> m(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      GrElem acc = ring.zero();
      for (std::size_t l = 0; l < k; ++l) acc = ring.add(acc, ring.mul(g.at(i, l), f.at(l, j), prec), prec);
      m[i * c + j] = acc;
    }
  }
  return ModuleMap(f.source(), g.target(), std::move(m));
}

OrbitIndex::OrbitIndex(std::uint32_t n, const std::vector<std::uint64_t>& zeta_perm,
                       BasepointRule rule)
    : n_(n), zeta_(zeta_perm) {
  if (n_ == 0) throw DomainError("OrbitIndex: n must be positive");
  if (zeta_.empty() || zeta_[0] != 0) throw DomainError("OrbitIndex: zeta must fix the point");
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  orbit_.assign(zeta_.size(), kNone);
  exp_.assign(zeta_.size(), 0);
  std::vector<std::uint64_t> members(n_);
  for (std::uint64_t y = 1; y < zeta_.size(); ++y) {
    if (orbit_[y] != kNone) continue;
    std::uint64_t z = y;
    for (std::uint32_t k = 0; k < n_; ++k) {
      if (z >= zeta_.size() || (k > 0 && z == y)) {
        throw DomainError("OrbitIndex: mu_n does not act freely");
      }
      members[k] = z;
      z = zeta_[z];
    }
    if (z != y) throw DomainError("OrbitIndex: zeta^n is not the identity");
    std::uint32_t r = 0;
    if (rule == BasepointRule::kSecondLeast && n_ > 1) {
      // members[0] = y is the least; find the second least.
      r = 1;
      for (std::uint32_t k = 2; k < n_; ++k) {
        if (members[k] < members[r]) r = k;
      }
    }
    const auto id = static_cast<std::uint32_t>(reps_.size());
    for (std::uint32_t k = 0; k < n_; ++k) {
      orbit_[members[k]] = id;
      exp_[members[k]] = (k + n_ - r) % n_;
    }
    reps_.push_back(members[r]);
  }
}

std::vector<std::uint64_t> module_zeta_permutation(const FiniteModule& t, std::uint32_t n,
                                                   std::uint64_t bound) {
  t.require_enumerable(bound);
  const RingCtx& ring = t.ring();
  require_mu_n(ring.field(), n);
  const int e = std::max(t.max_exp(), 1);
  const GrElem omega = ring.teichmuller(mu_embed(ring.field(), MuScalar(n, 1)), e);
  std::vector<std::uint64_t> perm(t.size());
  for (std::uint64_t y = 0; y < perm.size(); ++y) {
    auto x = t.decode(y);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ring.mul(omega, x[i], t.exps()[i]);
    perm[y] = t.encode(x);
  }
  return perm;
}

std::shared_ptr<const OrbitIndex> OrbitIndex::of_module(const FiniteModule& t, std::uint32_t n,
                                                        BasepointRule rule,
                                                        std::uint64_t bound) {
  t.require_enumerable(bound);
  std::ostringstream key;
  key << t.ring().p() << ',' << t.ring().degree() << ',' << n << ','
      << static_cast<int>(rule);
  for (int e : t.exps()) key << ',' << e;
  thread_local std::map<std::string, std::shared_ptr<const OrbitIndex>> cache;
  auto it = cache.find(key.str());
  if (it != cache.end()) return it->second;
  auto index = std::make_shared<const OrbitIndex>(n, module_zeta_permutation(t, n, bound), rule);
  cache.emplace(key.str(), index);
  return index;
}

MuSet module_as_muset(const FiniteModule& t, std::uint32_t n, std::uint64_t bound) {
  return OrbitIndex::of_module(t, n, BasepointRule::kLeast, bound)->muset();
}

MuSetAut module_aut_as_musetaut(const ModuleMap& g, std::uint32_t n, BasepointRule rule,
                                std::uint64_t bound) {
  if (!g.is_automorphism()) throw DomainError("module automorphism expected: map is not bijective");
  const auto index = OrbitIndex::of_module(g.source(), n, rule, bound);
  std::vector<std::uint32_t> sigma(index->orbit_count()), mu(index->orbit_count());
  for (std::uint32_t i = 0; i < index->orbit_count(); ++i) {
    const std::uint64_t y = g.apply_index(index->rep(i));
    sigma[i] = index->orbit(y);
    mu[i] = index->exp(y);
  }
  return MuSetAut(index->muset(), std::move(sigma), std::move(mu));
}

}  // namespace resforge
