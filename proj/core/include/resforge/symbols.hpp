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

// Power residue symbols by the direct formula, and the three-way comparison
// with the mu_n-set and central-extension computations.

#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "resforge/extension.hpp"

namespace resforge {

/// (-1)^(v(a)v(b)) a^v(b) / b^v(a) mod pi.
FieldElem tame_symbol(const KElem& a, const KElem& b);

/// The tame symbol raised to (q-1)/n.
MuScalar power_residue_symbol(const KElem& a, const KElem& b, std::uint32_t n);

/// (a, 1-a)_n == 1; a must differ from 1.
bool steinberg_check(const KElem& a, std::uint32_t n);

/// Delta of multiplication by the tame symbol on k = O/pi, as a mu_n-set.
MuScalar muset_symbol(const KElem& a, const KElem& b, std::uint32_t n,
                      BasepointRule rule = BasepointRule::kLeast);

enum class Method { kDirect, kMuset, kExtension, kAll };

struct SymbolReport {
  std::uint32_t p = 0;
  std::uint32_t f = 1;
  std::uint32_t n = 1;
  std::string a;
  std::string b;
  std::optional<MuScalar> direct;
  std::optional<MuScalar> muset;
  std::optional<MuScalar> extension;
  bool agree = true;
  std::int64_t micros = 0;
};

SymbolReport crosscheck(const ExtCtx& ctx, const KElem& a, const KElem& b,
                        Method method = Method::kAll);

/// {"exp": e, "residue": zeta^e in k}.
nlohmann::json mu_to_json(const FieldCtx& field, const MuScalar& s);
nlohmann::json report_to_json(const FieldCtx& field, const SymbolReport& r);

}  // namespace resforge
