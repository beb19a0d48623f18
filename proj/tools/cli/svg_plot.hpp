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

#include <string>

#include "cli/problem_io.hpp"
#include "cli/result_document.hpp"

namespace planeloc::cli {

/// SVG 1.1 drawing of a problem and its solution, in world units with the
/// y axis pointing up. Input points are square markers; a chebyshev result
/// adds its covering circle (the only <circle> element), a fermat point
/// result adds a ray from the solution to each input point, and a segment
/// result is drawn as a highlighted line.
std::string RenderSvg(const ProblemFile& problem, const ResultDocument& doc);

}  // namespace planeloc::cli
