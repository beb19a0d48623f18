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

// The solve, certify and plot subcommands, written against streams so they
// can be driven from tests as well as from main().

#include <optional>
#include <ostream>
#include <string>

#include "cli/problem_io.hpp"
#include "planeloc/common.hpp"

namespace planeloc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUncertified = 2;

struct SolveFlags {
  std::optional<ProblemKind> kind;
  std::optional<double> tol;
  std::optional<int> max_iter;
  bool certificate_only = false;
  std::optional<std::string> svg_path;
  bool oracle = false;
};

struct CertifyFlags {
  std::optional<ProblemKind> kind;
  std::optional<double> tol;
  PlanarPoint candidate;
};

int RunSolve(const std::string& input_path, const SolveFlags& flags,
             std::ostream& out, std::ostream& err);

int RunCertify(const std::string& input_path, const CertifyFlags& flags,
               std::ostream& out, std::ostream& err);

int RunPlot(const std::string& input_path, const std::string& result_path,
            const std::string& svg_path, std::ostream& err);

/// Parses "x,y" into a point.
std::optional<PlanarPoint> ParsePointArgument(const std::string& text);

}  // namespace planeloc::cli
