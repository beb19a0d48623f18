// Copyright 2026 The planeloc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Problem input: a JSON document {"kind", "points", "weights"} or CSV rows
// "x,y[,weight]".

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planeloc/common.hpp"

namespace planeloc::cli {

enum class ProblemKind { kFermat, kChebyshev };

const char* ToString(ProblemKind kind);
/// "fermat" or "chebyshev"; nullopt otherwise.
std::optional<ProblemKind> ParseKind(std::string_view text);

struct ProblemFile {
  std::optional<ProblemKind> kind;
  std::vector<PlanarPoint> points;
  std::optional<std::vector<double>> weights;

  /// The weights, or all ones.
  std::vector<double> WeightsOrOnes() const;
};

/// Input that cannot be read, parsed or validated. The message names the
/// line or field at fault.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProblemFile ParseProblemJson(std::string_view text);
ProblemFile ParseProblemCsv(std::string_view text);

/// Reads `path`; CSV when the extension is .csv or the first non-blank
/// character is not '{'. The result is validated.
ProblemFile LoadProblem(const std::string& path);

/// Non-empty, finite, pairwise distinct points; weights matching in length
/// and positive.
void ValidateProblem(const ProblemFile& problem);

std::string ReadFile(const std::string& path);

}  // namespace planeloc::cli
