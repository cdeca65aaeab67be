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

#include "resforge/symbols.hpp"

#include <chrono>

#include "resforge/error.hpp"
#include "resforge/parse.hpp"

namespace resforge {

FieldElem tame_symbol(const KElem& a, const KElem& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("tame_symbol: arguments must be nonzero");
  const std::int64_t va = a.val(), vb = b.val();
  KElem t = a.pow(vb) * b.pow(-va);
  if ((va * vb) % 2 != 0) t = -t;
  return t.reduce_mod_pi();
}

MuScalar power_residue_symbol(const KElem& a, const KElem& b, std::uint32_t n) {
  const FieldCtx& field = a.ring().field();
  require_mu_n(field, n);
  return power_residue_char(field, tame_symbol(a, b), n);
}

bool steinberg_check(const KElem& a, std::uint32_t n) {
  const KElem one = KElem::from_int(a.ring_ptr(), 1);
  const KElem b = one - a;
  if (b.is_zero()) throw DomainError("steinberg_check: a = 1 at the working precision");
  return power_residue_symbol(a, b, n).is_identity();
}

MuScalar muset_symbol(const KElem& a, const KElem& b, std::uint32_t n, BasepointRule rule) {
  const auto& ring = a.ring_ptr();
  require_mu_n(ring->field(), n);
  const FieldElem u = tame_symbol(a, b);
  const FiniteModule k(ring, {1});
  const ModuleMap mult(k, k, {ring->lift(u)});
  return aut_delta(module_aut_as_musetaut(mult, n, rule));
}

SymbolReport crosscheck(const ExtCtx& ctx, const KElem& a, const KElem& b, Method method) {
  const auto start = std::chrono::steady_clock::now();
  SymbolReport r;
  r.p = ctx.ring->p();
  r.f = ctx.ring->degree();
  r.n = ctx.n;
  r.a = format_element(a);
  r.b = format_element(b);
  if (method == Method::kDirect || method == Method::kAll) {
    r.direct = power_residue_symbol(a, b, ctx.n);
  }
  if (method == Method::kMuset || method == Method::kAll) {
    r.muset = muset_symbol(a, b, ctx.n, ctx.rule);
  }
  if (method == Method::kExtension || method == Method::kAll) {
    r.extension = corrected_symbol(ctx, a, b);
  }
  std::optional<MuScalar> first;
  for (const auto* v : {&r.direct, &r.muset, &r.extension}) {
    if (!v->has_value()) continue;
    if (!first) first = **v;
    r.agree = r.agree && **v == *first;
  }
  r.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

nlohmann::json mu_to_json(const FieldCtx& field, const MuScalar& s) {
  return {{"exp", s.exp()}, {"residue", field.to_string(mu_embed(field, s))}};
}

nlohmann::json report_to_json(const FieldCtx& field, const SymbolReport& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["f"] = r.f;
  j["n"] = r.n;
  j["a"] = r.a;
  j["b"] = r.b;
  const auto put = [&](const char* key, const std::optional<MuScalar>& v) {
    j[key] = v ? mu_to_json(field, *v) : nlohmann::json(nullptr);
  };
  put("direct", r.direct);
  put("muset", r.muset);
  put("extension", r.extension);
  j["agree"] = r.agree;
  j["micros"] = r.micros;
  return j;
}

}  // namespace resforge
