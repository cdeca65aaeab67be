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

#include "resforge/galois_ring.hpp"

#include <string>

#include "resforge/error.hpp"

namespace resforge {

namespace {

__extension__ using u128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

}  // namespace

int RingCtx::max_precision(std::uint32_t p) {
  int n = 0;
  u128 acc = 1;
  while (acc * p < (u128{1} << 62)) {
    acc *= p;
    ++n;
  }
  return n;
}

RingCtx::RingCtx(std::shared_ptr<const FieldCtx> field, int precision)
    : field_(std::move(field)), precision_(precision) {
  pow_p_[0] = 1;
  for (int i = 1; i <= precision_; ++i) pow_p_[static_cast<std::size_t>(i)] = pow_p_[static_cast<std::size_t>(i - 1)] * field_->p();
  const auto& m = field_->modulus();
  for (std::size_t i = 0; i < m.size(); ++i) modulus_[i] = m[i];
}

std::shared_ptr<const RingCtx> RingCtx::make(std::shared_ptr<const FieldCtx> field,
                                             int precision) {
  if (field->degree() > kMaxRingDegree) {
    throw DomainError("RingCtx: extension degree above " + std::to_string(kMaxRingDegree));
  }
  const int cap = max_precision(field->p());
  if (precision <= 0) precision = cap;
  if (precision > cap) {
    throw PrecisionError("RingCtx: precision " + std::to_string(precision) +
                         " exceeds the 64-bit kernel limit " + std::to_string(cap));
  }
  return std::shared_ptr<const RingCtx>(new RingCtx(std::move(field), precision));
}

GrElem RingCtx::one() const {
  GrElem r;
  r.c[0] = 1;
  return r;
}

GrElem RingCtx::from_int(std::int64_t v, int e) const {
  const auto m = static_cast<std::int64_t>(pow_p(e));
  std::int64_t r = v % m;
  if (r < 0) r += m;
  GrElem out;
  out.c[0] = static_cast<std::uint64_t>(r);
  return out;
}

GrElem RingCtx::reduce(const GrElem& a, int e) const {
  const std::uint64_t m = pow_p(e);
  GrElem out;
  for (std::uint32_t i = 0; i < degree(); ++i) out.c[i] = a.c[i] % m;
  return out;
}

GrElem RingCtx::add(const GrElem& a, const GrElem& b, int e) const {
  const std::uint64_t m = pow_p(e);
  GrElem out;
  for (std::uint32_t i = 0; i < degree(); ++i) out.c[i] = (a.c[i] % m + b.c[i] % m) % m;
  return out;
}

GrElem RingCtx::neg(const GrElem& a, int e) const {
  const std::uint64_t m = pow_p(e);
  GrElem out;
  for (std::uint32_t i = 0; i < degree(); ++i) out.c[i] = (m - a.c[i] % m) % m;
  return out;
}

GrElem RingCtx::sub(const GrElem& a, const GrElem& b, int e) const { return add(a, neg(b, e), e); }

GrElem RingCtx::mul(const GrElem& a, const GrElem& b, int e) const {
  const std::uint64_t m = pow_p(e);
  const std::uint32_t f = degree();
  if (f == 1) {
    GrElem out;
    out.c[0] = mulmod(a.c[0] % m, b.c[0] % m, m);
    return out;
  }
  std::array<std::uint64_t, 2 * kMaxRingDegree> prod{};
  for (std::uint32_t i = 0; i < f; ++i) {
    if (a.c[i] % m == 0) continue;
    for (std::uint32_t j = 0; j < f; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a.c[i] % m, b.c[j] % m, m)) % m;
    }
  }
  // Reduce by the monic modulus: x^f = -sum_{i<f} P_i x^i.
  for (std::uint32_t k = 2 * f - 2; k >= f; --k) {
    const std::uint64_t top = prod[k];
    if (top != 0) {
      for (std::uint32_t i = 0; i < f; ++i) {
        const std::uint64_t s = mulmod(top, modulus_[i] % m, m);
        prod[k - f + i] = (prod[k - f + i] + m - s) % m;
      }
    }
    prod[k] = 0;
  }
  GrElem out;
  for (std::uint32_t i = 0; i < f; ++i) out.c[i] = prod[i];
  return out;
}

GrElem RingCtx::scale_int(const GrElem& a, std::uint64_t s, int e) const {
  const std::uint64_t m = pow_p(e);
  GrElem out;
  for (std::uint32_t i = 0; i < degree(); ++i) out.c[i] = mulmod(a.c[i] % m, s % m, m);
  return out;
}

GrElem RingCtx::pow(GrElem a, std::uint64_t k, int e) const {
  GrElem r = reduce(one(), e);
  for (; k > 0; k >>= 1) {
    if (k & 1) r = mul(r, a, e);
    a = mul(a, a, e);
  }
  return r;
}

GrElem RingCtx::inv(const GrElem& a, int e) const {
  if (!is_unit(a)) throw DomainError("Galois ring: inverse of a non-unit");
  // Start from the residue field inverse and double the precision each step.
  GrElem x = lift(field_->inv(residue(a)));
  int prec = 1;
  while (prec < e) {
    prec = std::min(2 * prec, e);
    const GrElem ax = mul(a, x, prec);
    const GrElem two_minus = sub(from_int(2, prec), ax, prec);
    x = mul(x, two_minus, prec);
  }
  return reduce(x, e);
}

bool RingCtx::is_zero(const GrElem& a, int e) const {
  const std::uint64_t m = pow_p(e);
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (a.c[i] % m != 0) return false;
  }
  return true;
}

int RingCtx::valuation(const GrElem& a, int e) const {
  int best = e;
  const std::uint32_t p = this->p();
  for (std::uint32_t i = 0; i < degree(); ++i) {
    std::uint64_t c = a.c[i] % pow_p(e);
    if (c == 0) continue;
    int v = 0;
    while (c % p == 0) {
      c /= p;
      ++v;
    }
    best = std::min(best, v);
  }
  return best;
}

GrElem RingCtx::shift_down(const GrElem& a, int k) const {
  GrElem out;
  const std::uint64_t d = pow_p(k);
  for (std::uint32_t i = 0; i < degree(); ++i) out.c[i] = a.c[i] / d;
  return out;
}

GrElem RingCtx::shift_up(const GrElem& a, int k, int e) const {
  if (k >= e) return zero();
  const std::uint64_t m = pow_p(e);
  GrElem out;
  for (std::uint32_t i = 0; i < degree(); ++i) out.c[i] = (a.c[i] % pow_p(e - k)) * pow_p(k) % m;
  return out;
}

FieldElem RingCtx::residue(const GrElem& a) const {
  std::array<std::uint32_t, kMaxRingDegree> coeffs{};
  for (std::uint32_t i = 0; i < degree(); ++i) coeffs[i] = static_cast<std::uint32_t>(a.c[i] % p());
  return field_->from_coeffs(std::span<const std::uint32_t>(coeffs.data(), degree()));
}

GrElem RingCtx::lift(FieldElem x) const {
  const auto coeffs = field_->coeffs(x);
  GrElem out;
  for (std::uint32_t i = 0; i < degree(); ++i) out.c[i] = coeffs[i];
  return out;
}

GrElem RingCtx::teichmuller(FieldElem x, int e) const {
  // y^(q^(e-1)) is the Teichmuller lift modulo p^e for any lift y of x.
  GrElem y = reduce(lift(x), e);
  for (int i = 1; i < e; ++i) y = pow(y, field_->order(), e);
  return y;
}

bool RingCtx::less(const GrElem& a, const GrElem& b, std::uint32_t degree) {
  for (std::uint32_t i = degree; i-- > 0;) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

}  // namespace resforge
