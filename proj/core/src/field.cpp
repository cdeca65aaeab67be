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

#include "resforge/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "resforge/error.hpp"

namespace resforge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

namespace {

// Dense polynomials over F_p, little-endian, no trailing zeros (zero is {}).
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over F_p; b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = c * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
  Poly out(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

bool irreducible_over_fp(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = poly_from_code(code, p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t e, std::uint64_t bound) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (out > bound / base) return bound + 1;
    out *= base;
  }
  return out;
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
  q_ = 1;
  for (std::uint32_t i = 0; i < f; ++i) q_ *= p;
}

std::shared_ptr<const FieldCtx> FieldCtx::make(std::uint32_t p, std::uint32_t f,
                                               std::uint64_t bound) {
  if (!is_prime(p)) throw DomainError("field_make: p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw DomainError("field_make: extension degree must be >= 1");
  if (checked_pow(p, f, bound) > bound) {
    throw BoundError("field_make: p^f exceeds the enumeration bound " + std::to_string(bound));
  }
  std::shared_ptr<FieldCtx> ctx(new FieldCtx(p, f));

  // Least monic irreducible modulus in code order.
  std::uint64_t tail_count = ctx->q_;
  for (std::uint64_t code = 0; code < tail_count; ++code) {
    Poly cand = poly_from_code(code, p, f);
    cand.push_back(1);
    if (irreducible_over_fp(cand, p)) {
      ctx->modulus_ = cand;
      break;
    }
  }

  const std::uint32_t group = ctx->q_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](FieldElem a, std::uint64_t e) {
    FieldElem r = ctx->one();
    for (; e > 0; e >>= 1) {
      if (e & 1) r = ctx->slow_mul(r, a);
      a = ctx->slow_mul(a, a);
    }
    return r;
  };
  if (ctx->q_ == 2) {
    ctx->generator_ = ctx->one();
  } else {
    for (std::uint32_t code = 1; code < ctx->q_; ++code) {
      FieldElem cand{code};
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(cand, group / r) == ctx->one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        ctx->generator_ = cand;
        break;
      }
    }
  }

  ctx->exp_.resize(group);
  ctx->log_.assign(ctx->q_, 0);
  FieldElem cur = ctx->one();
  for (std::uint32_t k = 0; k < group; ++k) {
    ctx->exp_[k] = cur.code;
    ctx->log_[cur.code] = k;
    cur = ctx->slow_mul(cur, ctx->generator_);
  }
  return ctx;
}

FieldElem FieldCtx::slow_mul(FieldElem a, FieldElem b) const {
  Poly pa = poly_from_code(a.code, p_, f_);
  Poly pb = poly_from_code(b.code, p_, f_);
  Poly prod(2 * f_, 0);
  for (std::uint32_t i = 0; i < f_; ++i) {
    for (std::uint32_t j = 0; j < f_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
    }
  }
  Poly rem = poly_rem(prod, modulus_, p_);
  rem.resize(f_, 0);
  return from_coeffs(rem);
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElem{static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t code = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    const std::uint32_t c = i < coeffs.size() ? coeffs[i] % p_ : 0;
    code += c * scale;
    scale *= p_;
  }
  return FieldElem{code};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElem x) const {
  return poly_from_code(x.code, p_, f_);
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  if (f_ == 1) return FieldElem{(a.code + b.code) % p_};
  std::uint32_t code = 0, scale = 1;
  std::uint32_t x = a.code, y = b.code;
  for (std::uint32_t i = 0; i < f_; ++i) {
    code += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElem{code};
}

FieldElem FieldCtx::neg(FieldElem a) const {
  if (f_ == 1) return FieldElem{(p_ - a.code) % p_};
  std::uint32_t code = 0, scale = 1;
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < f_; ++i) {
    code += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return FieldElem{code};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint32_t group = q_ - 1;
  return FieldElem{exp_[(log_[a.code] + log_[b.code]) % group]};
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.code == 0) throw DomainError("F_q: inverse of zero");
  const std::uint32_t group = q_ - 1;
  return FieldElem{exp_[(group - log_[a.code]) % group]};
}

FieldElem FieldCtx::pow(FieldElem a, std::int64_t e) const {
  if (a.code == 0) {
    if (e < 0) throw DomainError("F_q: negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t group = q_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a.code]) * (e % group)) % group;
  if (k < 0) k += group;
  return FieldElem{exp_[static_cast<std::size_t>(k)]};
}

std::uint32_t FieldCtx::log(FieldElem a) const {
  if (a.code == 0) throw DomainError("F_q: discrete log of zero");
  return log_[a.code];
}

std::string FieldCtx::to_string(FieldElem a) const {
  if (f_ == 1) return std::to_string(a.code);
  std::ostringstream os;
  os << '[';
  auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

FieldElem field_det(const FieldCtx& field, std::vector<FieldElem> m, std::size_t dim) {
  FieldElem det = field.one();
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && m[pivot * dim + col].code == 0) ++pivot;
    if (pivot == dim) return field.zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < dim; ++j) std::swap(m[pivot * dim + j], m[col * dim + j]);
      det = field.neg(det);
    }
    const FieldElem piv = m[col * dim + col];
    det = field.mul(det, piv);
    const FieldElem piv_inv = field.inv(piv);
    for (std::size_t r = col + 1; r < dim; ++r) {
      const FieldElem factor = field.mul(m[r * dim + col], piv_inv);
      if (factor.code == 0) continue;
      for (std::size_t j = col; j < dim; ++j) {
        m[r * dim + j] = field.sub(m[r * dim + j], field.mul(factor, m[col * dim + j]));
      }
    }
  }
  return det;
}

MuScalar::MuScalar(std::uint32_t n, std::int64_t exp) : n_(n) {
  if (n == 0) throw DomainError("mu_n: n must be positive");
  std::int64_t r = exp % static_cast<std::int64_t>(n);
  if (r < 0) r += n;
  exp_ = static_cast<std::uint32_t>(r);
}

MuScalar MuScalar::pow(std::int64_t k) const {
  const std::int64_t n = n_;
  return MuScalar(n_, (static_cast<std::int64_t>(exp_) * (k % n)) % n);
}

MuScalar operator*(MuScalar a, MuScalar b) {
  if (a.n_ != b.n_) throw DomainError("mu_n: mismatched n in product");
  return MuScalar(a.n_, static_cast<std::int64_t>(a.exp_) + b.exp_);
}

void require_mu_n(const FieldCtx& field, std::uint32_t n) {
  if (n == 0 || (field.order() - 1) % n != 0) {
    throw DomainError("n = " + std::to_string(n) + " does not divide q-1 = " +
                      std::to_string(field.order() - 1));
  }
}

FieldElem mu_embed(const FieldCtx& field, MuScalar s) {
  require_mu_n(field, s.n());
  const std::uint64_t step = (field.order() - 1) / s.n();
  return field.exp(step * s.exp());
}

MuScalar mu_dlog(const FieldCtx& field, FieldElem x, std::uint32_t n) {
  require_mu_n(field, n);
  if (x.code == 0 || field.pow(x, n) != field.one()) {
    throw DomainError("mu_dlog: " + field.to_string(x) + " is not an n-th root of unity");
  }
  const std::uint32_t step = (field.order() - 1) / n;
  return MuScalar(n, field.log(x) / step);
}

MuScalar power_residue_char(const FieldCtx& field, FieldElem x, std::uint32_t n) {
  require_mu_n(field, n);
  if (x.code == 0) throw DomainError("power_residue_char: argument is zero");
  return mu_dlog(field, field.pow(x, (field.order() - 1) / n), n);
}

int zolotarev_sign(const FieldCtx& field, FieldElem a) {
  if (a.code == 0) throw DomainError("zolotarev_sign: argument is zero");
  const std::uint32_t q = field.order();
  std::vector<char> seen(q, 0);
  std::uint32_t cycles = 0;
  for (std::uint32_t start = 0; start < q; ++start) {
    if (seen[start]) continue;
    ++cycles;
    FieldElem x{start};
    while (!seen[x.code]) {
      seen[x.code] = 1;
      x = field.mul(a, x);
    }
  }
  return ((q - cycles) % 2 == 0) ? 1 : -1;
}

MuScalar mu_minus_one(const FieldCtx& field, std::uint32_t n) {
  require_mu_n(field, n);
  if (n % 2 == 0) return MuScalar(n, n / 2);
  return power_residue_char(field, field.minus_one(), n);
}

// ---------------------------------------------------------------------------
// Tower F_{q^d}/F_q

namespace {

using TowerPoly = std::vector<FieldElem>;

void tower_trim(TowerPoly& a) {
  while (!a.empty() && a.back().code == 0) a.pop_back();
}

TowerPoly tower_rem(const FieldCtx& k, TowerPoly a, const TowerPoly& b) {
  tower_trim(a);
  const FieldElem lead_inv = k.inv(b.back());
  while (a.size() >= b.size()) {
    const FieldElem c = k.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
    }
    tower_trim(a);
  }
  return a;
}

TowerPoly tower_from_code(std::uint64_t code, std::uint32_t q, std::uint32_t len) {
  TowerPoly out(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = FieldElem{static_cast<std::uint32_t>(code % q)};
    code /= q;
  }
  return out;
}

bool tower_irreducible(const FieldCtx& k, const TowerPoly& f) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= k.order();
    for (std::uint64_t code = 0; code < count; ++code) {
      TowerPoly g = tower_from_code(code, k.order(), static_cast<std::uint32_t>(d));
      g.push_back(k.one());
      if (tower_rem(k, f, g).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldTower::FieldTower(std::shared_ptr<const FieldCtx> base, std::uint32_t d, std::uint64_t bound)
    : base_(std::move(base)), d_(d) {
  if (d < 1) throw DomainError("FieldTower: degree must be >= 1");
  order_ = checked_pow(base_->order(), d, bound);
  if (order_ > bound) throw BoundError("FieldTower: q^d exceeds the enumeration bound");
  const std::uint64_t count = order_;
  // Code order over (c_0, ..., c_{d-1}) with c_0 least significant equals
  // lexicographic order from the top coefficient down.
  for (std::uint64_t code = 0; code < count; ++code) {
    TowerPoly cand = tower_from_code(code, base_->order(), d);
    cand.push_back(base_->one());
    if (tower_irreducible(*base_, cand)) {
      modulus_ = cand;
      return;
    }
  }
  throw DomainError("FieldTower: no irreducible polynomial found");
}

FieldTower::Elem FieldTower::from_base(FieldElem a) const {
  Elem out(d_, base_->zero());
  out[0] = a;
  return out;
}

FieldTower::Elem FieldTower::generator_y() const {
  Elem out(d_, base_->zero());
  if (d_ == 1) {
    out[0] = base_->neg(modulus_[0]);
  } else {
    out[1] = base_->one();
  }
  return out;
}

FieldTower::Elem FieldTower::mul(const Elem& a, const Elem& b) const {
  TowerPoly prod(2 * d_, base_->zero());
  for (std::uint32_t i = 0; i < d_; ++i) {
    for (std::uint32_t j = 0; j < d_; ++j) {
      prod[i + j] = base_->add(prod[i + j], base_->mul(a[i], b[j]));
    }
  }
  TowerPoly rem = tower_rem(*base_, prod, modulus_);
  rem.resize(d_, base_->zero());
  return rem;
}

FieldTower::Elem FieldTower::pow(Elem a, std::uint64_t e) const {
  Elem r = from_base(base_->one());
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

bool FieldTower::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](FieldElem c) { return c.code == 0; });
}

std::vector<FieldTower::Elem> FieldTower::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  for (std::uint64_t code = 0; code < order_; ++code) {
    out.push_back(tower_from_code(code, base_->order(), d_));
  }
  return out;
}

FieldElem norm_check(const FieldTower& tower, const FieldTower::Elem& x) {
  const std::uint32_t d = tower.degree();
  std::vector<FieldElem> matrix(std::size_t{d} * d);
  // Column j holds the coordinates of x * y^j in the basis 1, y, ..., y^{d-1}.
  FieldTower::Elem basis = tower.from_base(tower.base().one());
  FieldTower::Elem y = tower.generator_y();
  for (std::uint32_t j = 0; j < d; ++j) {
    const FieldTower::Elem col = tower.mul(x, basis);
    for (std::uint32_t i = 0; i < d; ++i) matrix[std::size_t{i} * d + j] = col[i];
    basis = tower.mul(basis, y);
  }
  return field_det(tower.base(), std::move(matrix), d);
}

FieldElem norm_by_power(const FieldTower& tower, const FieldTower::Elem& x) {
  const std::uint64_t q = tower.base().order();
  const FieldTower::Elem r = tower.pow(x, (tower.order() - 1) / (q - 1));
  for (std::uint32_t i = 1; i < tower.degree(); ++i) {
    if (r[i].code != 0) throw DomainError("norm_by_power: result left the base field");
  }
  return r[0];
}

}  // namespace resforge
