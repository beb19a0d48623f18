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

// Brute-force minimizers of the distance-sum and max-distance objectives by
// grid search with successive refinement. Slow on purpose and independent of
// the certified solvers, for cross-checking them.

#include <span>
#include <vector>

#include "planeloc/common.hpp"
#include "planeloc/fermat.hpp"

namespace planeloc {

struct OracleSettings {
  /// Cells per side of each grid; the grid has resolution + 1 points per side.
  int resolution = 64;
  /// Each round recentres on the incumbent and halves the cell size.
  int rounds = 24;
  bool parallel = false;
};

struct OracleResult {
  /// Best of the last grid incumbent and a nested line-search polish.
  PlanarPoint w;
  double value = 0.0;
  /// Incumbent after the initial grid and after each refinement round.
  std::vector<PlanarPoint> incumbents;
  std::vector<double> values;
  /// Cell size used in each of those grids.
  std::vector<double> cell_sizes;
};

/// Minimizes sum alpha_i |z_i - w|. Throws kInvalidArgument on bad settings.
OracleResult OracleFt(const WeightedConfiguration& config,
                      const OracleSettings& settings = {});

/// Minimizes max alpha_i |z_i - w|. Throws kEmptyInput, kLengthMismatch,
/// kInvalidWeight, kInvalidArgument.
OracleResult OracleCheby(std::span<const PlanarPoint> points,
                         std::span<const double> weights,
                         const OracleSettings& settings = {});

}  // namespace planeloc
