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

#include "resforge/muset.hpp"

#include "resforge/error.hpp"

namespace resforge {

MuSetAut::MuSetAut(MuSet set, std::vector<std::uint32_t> sigma, std::vector<std::uint32_t> mu)
    : set_(set), sigma_(std::move(sigma)), mu_(std::move(mu)) {
  if (set_.n == 0) throw DomainError("MuSetAut: n must be positive");
  if (sigma_.size() != set_.t || mu_.size() != set_.t) {
    throw DomainError("MuSetAut: sigma and mu must have one entry per orbit");
  }
  std::vector<bool> seen(set_.t, false);
  for (auto s : sigma_) {
    if (s >= set_.t || seen[s]) throw DomainError("MuSetAut: sigma is not a permutation");
    seen[s] = true;
  }
  for (auto& m : mu_) m %= set_.n;
}

MuSetAut MuSetAut::identity(MuSet set) {
  std::vector<std::uint32_t> sigma(set.t);
  for (std::uint32_t i = 0; i < set.t; ++i) sigma[i] = i;
  return MuSetAut(set, std::move(sigma), std::vector<std::uint32_t>(set.t, 0));
}

std::uint64_t MuSetAut::apply(std::uint64_t point) const {
  if (point == 0) return 0;
  const std::uint64_t i = (point - 1) / set_.n;
  const std::uint64_t e = (point - 1) % set_.n;
  return set_.encode(sigma_[i], static_cast<std::uint32_t>((e + mu_[i]) % set_.n));
}

MuSetAut aut_compose(const MuSetAut& f, const MuSetAut& g) {
  if (!(f.set() == g.set())) throw DomainError("aut_compose: automorphisms of different sets");
  const MuSet& s = f.set();
  std::vector<std::uint32_t> sigma(s.t), mu(s.t);
  for (std::uint32_t i = 0; i < s.t; ++i) {
    sigma[i] = f.sigma()[g.sigma()[i]];
    mu[i] = (g.mu()[i] + f.mu()[g.sigma()[i]]) % s.n;
  }
  return MuSetAut(s, std::move(sigma), std::move(mu));
}

MuSetAut aut_inverse(const MuSetAut& f) {
  const MuSet& s = f.set();
  std::vector<std::uint32_t> sigma(s.t), mu(s.t);
  for (std::uint32_t i = 0; i < s.t; ++i) {
    sigma[f.sigma()[i]] = i;
    mu[f.sigma()[i]] = (s.n - f.mu()[i]) % s.n;
  }
  return MuSetAut(s, std::move(sigma), std::move(mu));
}

MuScalar aut_delta(const MuSetAut& f) {
  std::int64_t sum = 0;
  for (auto m : f.mu()) sum += m;
  return MuScalar(f.set().n, sum);
}

int permutation_sign(const std::vector<std::uint64_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::pair<MuScalar, int> aut_abelianize(const MuSetAut& f) {
  return {aut_delta(f), permutation_sign({f.sigma().begin(), f.sigma().end()})};
}

MuSet muset_product(const MuSet& x, const MuSet& y) {
  if (x.n != y.n) throw DomainError("muset_product: different n");
  return MuSet{x.n, x.t + y.t + x.n * x.t * y.t};
}

MuSetAut aut_extend(const MuSetAut& f, const MuSet& y) {
  const MuSet& x = f.set();
  const MuSet prod = muset_product(x, y);
  const std::uint32_t n = x.n, t = x.t, u = y.t;
  std::vector<std::uint32_t> sigma(prod.t), mu(prod.t, 0);
  for (std::uint32_t i = 0; i < t; ++i) {
    sigma[i] = f.sigma()[i];
    mu[i] = f.mu()[i];
  }
  for (std::uint32_t j = 0; j < u; ++j) sigma[t + j] = t + j;
  // (x_i, zeta^k y_j) -> (zeta^mu_i x_s, zeta^k y_j) = zeta^mu_i (x_s, zeta^(k - mu_i) y_j).
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint32_t j = 0; j < u; ++j) {
      for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t src = t + u + (i * u + j) * n + k;
        const std::uint32_t kk = (k + n - f.mu()[i]) % n;
        sigma[src] = t + u + (f.sigma()[i] * u + j) * n + kk;
        mu[src] = f.mu()[i];
      }
    }
  }
  return MuSetAut(prod, std::move(sigma), std::move(mu));
}

std::vector<std::uint64_t> aut_to_permutation(const MuSetAut& f) {
  std::vector<std::uint64_t> perm(f.set().size());
  for (std::uint64_t x = 0; x < perm.size(); ++x) perm[x] = f.apply(x);
  return perm;
}

int perm_sign(const MuSetAut& f) { return permutation_sign(aut_to_permutation(f)); }

}  // namespace resforge
