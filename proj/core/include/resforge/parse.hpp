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

// Text forms of field elements, matrices and lattices.
//
// Element grammar:
//   element := ["-"] "pi" ["^" INT] ["*" term] | term
//   term    := INT | INT "/" INT | "[" INT ("," INT)* "]"
// A fraction's denominator must be prime to p. A bracketed list gives the
// coefficients of x^0, x^1, ... of an element of O = Z_p[x]/(P).

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "resforge/lattice.hpp"

namespace resforge {

KElem parse_element(std::string_view text, const std::shared_ptr<const RingCtx>& ring);
std::string format_element(const KElem& x);

/// A square matrix given as a JSON array of rows of element strings (plain
/// integers are accepted too).
KMatrix parse_matrix(const nlohmann::json& rows, const std::shared_ptr<const RingCtx>& ring);
nlohmann::json matrix_to_json(const KMatrix& a);

nlohmann::json lattice_to_json(const Lattice& a);
Lattice lattice_from_json(const nlohmann::json& rows, const std::shared_ptr<const RingCtx>& ring);

}  // namespace resforge
