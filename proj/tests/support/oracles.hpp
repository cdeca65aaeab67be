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

// Reference computations for tests. Each one is written independently of the
// library: plain integer arithmetic, brute-force enumeration and textbook
// formulas, so a shared bug cannot make both sides agree.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

/// Multiplicative order of a mod p by repeated multiplication.
inline std::uint64_t order_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t x = a % p, k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

inline std::uint64_t least_primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 2; g < p; ++g) {
    if (order_mod(g, p) == p - 1) return g;
  }
  return 1;
}

/// Euler's criterion: +1 or -1 for a nonzero residue mod an odd prime.
inline int euler_criterion(std::int64_t a, std::int64_t p) {
  const auto r = mod_pow(static_cast<std::uint64_t>(((a % p) + p) % p),
                         static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p));
  return r == 1 ? 1 : -1;
}

/// Sign of a permutation by counting inversions.
template <typename T>
int inversion_sign(const std::vector<T>& perm) {
  std::uint64_t inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inv;
    }
  }
  return inv % 2 == 0 ? 1 : -1;
}

/// Zolotarev's sign of x -> a x on Z/p, by inversion counting over 0..p-1.
inline int multiplication_sign(std::uint64_t a, std::uint64_t p) {
  std::vector<std::uint64_t> perm(p);
  for (std::uint64_t x = 0; x < p; ++x) perm[x] = a * x % p;
  return inversion_sign(perm);
}

/// The Teichmuller lift mod p^e of g^((p-1)/n), g the least primitive root.
inline std::uint64_t teichmuller_root(std::uint64_t p, int e, std::uint64_t n) {
  std::uint64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  std::uint64_t w = mod_pow(least_primitive_root(p), (p - 1) / n, p);
  // w^(p^(e-1)) is the unique root of unity of order dividing p-1 above w.
  for (int i = 1; i < e; ++i) w = mod_pow(w, p, pe);
  return w;
}

/// Orbits of x -> w x on Z/p^e minus 0, each orbit listed as its members
/// w^k r (k = 0..n-1) starting from its least element r; orbits sorted by r.
struct NaiveOrbits {
  std::uint64_t modulus;
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> coord;  // y -> (rep, k)
  std::vector<std::uint64_t> reps;
};

inline NaiveOrbits naive_orbits(std::uint64_t p, int e, std::uint64_t n) {
  NaiveOrbits o;
  o.modulus = 1;
  for (int i = 0; i < e; ++i) o.modulus *= p;
  const std::uint64_t w = teichmuller_root(p, e, n);
  for (std::uint64_t y = 1; y < o.modulus; ++y) {
    if (o.coord.count(y)) continue;
    o.reps.push_back(y);
    std::uint64_t z = y;
    for (std::uint64_t k = 0; k < n; ++k) {
      o.coord[z] = {y, k};
      z = z * w % o.modulus;
    }
  }
  return o;
}

/// Delta of x -> a x on Z/p^e as a mu_n-set: sum of the twists of the
/// representatives' images.
inline std::uint64_t naive_delta_mult(std::uint64_t a, std::uint64_t p, int e, std::uint64_t n) {
  const NaiveOrbits o = naive_orbits(p, e, n);
  std::uint64_t s = 0;
  for (auto r : o.reps) s += o.coord.at(a * r % o.modulus).second;
  return s % n;
}

/// Exponent k with x = g^((p-1)/n * k) mod p for an n-th root of unity x.
inline std::uint64_t root_exponent(std::uint64_t x, std::uint64_t p, std::uint64_t n) {
  const std::uint64_t z = mod_pow(least_primitive_root(p), (p - 1) / n, p);
  std::uint64_t y = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (y == x % p) return k;
    y = y * z % p;
  }
  return n;
}

/// (a^(p-1)/n) as an exponent of the canonical root, a nonzero mod p.
inline std::uint64_t power_residue_exponent(std::int64_t a, std::uint64_t p, std::uint64_t n) {
  const auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) +
                                              static_cast<std::int64_t>(p)) %
                                             static_cast<std::int64_t>(p));
  return root_exponent(mod_pow(r, (p - 1) / n, p), p, n);
}

/// Modular inverse for p prime.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

/// The direct symbol over Q_p for a = p^va ua, b = p^vb ub with ua, ub units
/// mod p, by the displayed formula with plain integers.
inline std::uint64_t direct_symbol_exponent(int va, std::uint64_t ua, int vb, std::uint64_t ub,
                                            std::uint64_t p, std::uint64_t n, bool with_sign) {
  // a^vb / b^va = p^(va vb - vb va) ua^vb ub^-va = ua^vb ub^-va.
  const auto pw = [&](std::uint64_t u, int e) {
    return e >= 0 ? mod_pow(u, static_cast<std::uint64_t>(e), p)
                  : mod_pow(inverse_mod(u, p), static_cast<std::uint64_t>(-e), p);
  };
  std::uint64_t t = pw(ua, vb) * pw(ub, -va) % p;
  if (with_sign && ((va * vb) % 2 != 0)) t = (p - t) % p;
  return power_residue_exponent(static_cast<std::int64_t>(t), p, n);
}


/// The scalar of 0 -> Z/p^a -> Z/p^(a+b) -> Z/p^b -> 0 with maps x -> p^b u x
/// and y -> v y, from the orbit coordinates: the twists of the images of the
/// representatives of X, plus the twists of the points off X lying over the
/// representatives of Z.
inline std::uint64_t naive_cyclic_sequence(std::uint64_t p, int a, int b, std::uint64_t u,
                                           std::uint64_t v, std::uint64_t n) {
  const NaiveOrbits ox = naive_orbits(p, a, n);
  const NaiveOrbits oy = naive_orbits(p, a + b, n);
  const NaiveOrbits oz = naive_orbits(p, b, n);
  std::uint64_t pb = 1;
  for (int i = 0; i < b; ++i) pb *= p;
  std::set<std::uint64_t> z_reps(oz.reps.begin(), oz.reps.end());
  std::uint64_t s = 0;
  for (auto r : ox.reps) s += oy.coord.at(pb * u % oy.modulus * r % oy.modulus).second;
  for (std::uint64_t y = 1; y < oy.modulus; ++y) {
    if (y % pb == 0) continue;
    if (z_reps.count(v * y % oz.modulus)) s += oy.coord.at(y).second;
  }
  return s % n;
}

}  // namespace oracle
