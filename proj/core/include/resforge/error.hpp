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

#pragma once

#include <stdexcept>
#include <string>

namespace resforge {

/// Invalid input to an operation: non-prime p, n not dividing q-1, a
/// non-bijective map, lattices that are not nested when they must be.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The p-adic working precision is not enough to decide a result exactly.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite object exceeds the configured enumeration bound.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed element, matrix or report text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace resforge
