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

// mu_n-lines with a chosen base point, determinant lines of finite
// O-modules, and the canonical isomorphisms between them evaluated as mu_n
// scalars on canonical base points.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resforge/finite_module.hpp"

namespace resforge {

struct MuLine {
  std::string label;
  std::uint32_t n = 1;
  friend bool operator==(const MuLine&, const MuLine&) = default;
};

/// zeta^exp * base of the line.
struct TorsorElem {
  MuLine line;
  MuScalar exp;
};

inline TorsorElem line_base(const MuLine& line) { return {line, MuScalar::identity(line.n)}; }

MuLine line_tensor(const MuLine& l, const MuLine& m);
/// Equivariant maps L -> mu_n; the base sends base(L) to 1.
MuLine line_dual(const MuLine& l);
TorsorElem tensor_elem(const TorsorElem& s, const TorsorElem& t);
/// Evaluates phi in L^v on s in L.
MuScalar duality_contract(const TorsorElem& s, const TorsorElem& phi);

/// det(T), based at the tensor of the canonical orbit representatives.
MuLine det_line(const FiniteModule& t, std::uint32_t n, const std::string& label);

enum class DetMethod {
  kFast,   // filtration p^i T / p^(i+1) T and F_q determinants
  kBrute,  // orbit enumeration
};

/// The scalar by which g acts on det(T).
MuScalar det_of_module_aut(const ModuleMap& g, std::uint32_t n,
                           DetMethod method = DetMethod::kFast,
                           BasepointRule rule = BasepointRule::kLeast,
                           std::uint64_t bound = kDefaultEnumBound);

/// c with (x) g(reps of S) = zeta^c (x) reps of T, for an isomorphism g: S -> T.
MuScalar det_iso_scalar(const ModuleMap& g, std::uint32_t n,
                        DetMethod method = DetMethod::kFast,
                        BasepointRule rule = BasepointRule::kLeast,
                        std::uint64_t bound = kDefaultEnumBound);

/// For an equivariant pointed surjection f: Y -> Z whose nonzero fibers have
/// size 1 mod n, the scalar c with base(Z) -> zeta^c base(Y) under
/// det(Z) = det(Y), each orbit L of Z matched with the tensor of the orbits
/// over it.
MuScalar fiber_iso(const OrbitIndex& y, const OrbitIndex& z, const std::vector<std::uint64_t>& f);

/// For an exact sequence 0 -> X -> Y -> Z -> 0 (maps iota, proj), the scalar
/// c with base(X) (x) base(Z) -> zeta^c base(Y). Computed as
/// det(Y) = det(X) (x) det(Y//X) followed by fiber_iso for Y//X -> Z.
MuScalar exact_seq_iso(const ModuleMap& iota, const ModuleMap& proj, std::uint32_t n,
                       BasepointRule rule = BasepointRule::kLeast,
                       std::uint64_t bound = kDefaultEnumBound);

}  // namespace resforge
