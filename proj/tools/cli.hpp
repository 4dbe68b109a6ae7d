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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "haarforge/matrix.hpp"
#include "haarforge/samplers.hpp"

namespace haarforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

enum class Format { json, csv };

struct RunConfig {
  std::string command;
  Group group = Group::so;
  std::size_t n = 4;
  /// Unset means euler for continuous groups and bubble for S_N.
  std::optional<Method> method;
  /// Unset means the command default (1 sample, 10^5 moment draws, 1000 spectra).
  std::optional<std::size_t> count;
  std::uint64_t seed = 1;
  std::size_t streams = 1;
  std::string out;
  Format format = Format::json;
  double level = 0.001;
  double p = 1.0;
  double q = 0.0;
  bool drop_unit = false;
};

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_volumes(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectra(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes a double with 17 significant digits.
std::string format_double(double v);

/// Inverse of the `sample` JSON writer for matrix groups.
std::vector<SquareMatrix> read_matrices_json(std::istream& in);
/// Inverse of the `sample` CSV writer; `complex` selects interleaved re/im.
std::vector<SquareMatrix> read_matrices_csv(std::istream& in, bool complex);

}  // namespace haarforge::cli
