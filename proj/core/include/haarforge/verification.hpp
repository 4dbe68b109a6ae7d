// Copyright 2026 The haar-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "haarforge/stats.hpp"

namespace haarforge {

/// Seed of the fixed group elements Q0 used by the invariance checks.
inline constexpr std::uint64_t kInvarianceSeed = 0x51ED5EEDull;

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t streams = 1;
  double level = kDefaultLevel;
};

/// One sub-check of a criterion, e.g. a single KS comparison.
struct CheckLine {
  std::string label;
  bool pass = false;
  double statistic = 0.0;
  double critical = 0.0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::vector<CheckLine> checks;
};

inline constexpr int kCriterionCount = 12;

/// Runs acceptance criterion `id` (1..12). Deterministic in (seed, streams).
CriterionResult run_criterion(int id, const VerifyOptions& options);

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

/// "[PASS] 5 cross-sampler equivalence (3.2 s, 6 checks)".
std::string summary_line(const CriterionResult& r);

}  // namespace haarforge
