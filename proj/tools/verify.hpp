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

// Property suites behind `resforge verify`.

#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resforge/finite_module.hpp"

namespace resforge::cli {

struct VerifyOptions {
  std::optional<std::uint32_t> p;
  std::uint32_t f = 1;
  std::uint64_t seed = 42;
  std::uint64_t bound = kDefaultEnumBound;
};

struct PropertyTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

class VerifyReport {
 public:
  explicit VerifyReport(std::string suite, std::uint64_t seed)
      : suite_(std::move(suite)), seed_(seed) {}

  /// Runs one check; BoundError counts as skipped, other exceptions as failures.
  void check(const std::string& property, const std::function<bool()>& body,
             const std::function<nlohmann::json()>& witness);
  void merge(const VerifyReport& other);

  bool passed() const;
  const std::vector<std::pair<std::string, PropertyTally>>& properties() const { return props_; }
  const std::optional<nlohmann::json>& counterexample() const { return counterexample_; }
  nlohmann::json to_json() const;

 private:
  PropertyTally& tally(const std::string& property);

  std::string suite_;
  std::uint64_t seed_;
  std::vector<std::pair<std::string, PropertyTally>> props_;
  std::optional<nlohmann::json> counterexample_;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options);

}  // namespace resforge::cli
