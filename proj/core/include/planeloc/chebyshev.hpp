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

// Chebyshev centers (1-centers) of finite weighted point sets by candidate
// enumeration, and the tests for when the Fermat-Torricelli point and the
// Chebyshev center coincide.

#include <cstddef>
#include <span>
#include <vector>

#include "planeloc/bjorth.hpp"
#include "planeloc/common.hpp"

namespace planeloc {

struct ChebySolveResult {
  PlanarPoint center;
  /// max_i alpha_i |z_i - center|
  double radius = 0.0;
  /// Indices attaining the radius (within the classification band), increasing.
  std::vector<std::size_t> support;
  /// Convex coefficients aligned with `support` such that
  /// center = sum s_j z_{support[j]}.
  std::vector<double> hull_weights;
  /// LInf certificate; its convex_weights are the t coefficients.
  SupportFunctionalCertificate certificate;
};

/// 0 in the hull of the unit directions from w to the weighted-farthest
/// points. Throws kSinglePoint, kLengthMismatch, kEmptyInput.
SupportFunctionalCertificate ChebyCertificate(std::span<const PlanarPoint> points,
                                              std::span<const double> weights,
                                              PlanarPoint w);

/// Unit weights. Candidates: pair midpoints and circumcenters of
/// non-collinear triples. Throws kEmptyInput, kDuplicatePoints.
ChebySolveResult SolveChebyshev(std::span<const PlanarPoint> points);

/// Candidates: weighted pair points (alpha_i z_i + alpha_j z_j)/(alpha_i +
/// alpha_j) and intersections of Apollonius loci inside each triple's hull.
/// Equal weights take exactly the unweighted path.
ChebySolveResult SolveChebyshevWeighted(std::span<const PlanarPoint> points,
                                        std::span<const double> weights);

/// max_i alpha_i |z_i - w|. Throws kEmptyInput, kLengthMismatch.
double ChebyshevRadius(std::span<const PlanarPoint> points,
                       std::span<const double> weights, PlanarPoint w);

/// Does the (unit-weight) Fermat-Torricelli point of the triangle equal its
/// Chebyshev center? Throws kCollinearPoints, kDuplicatePoints.
bool FtChebyCoincide3(PlanarPoint z1, PlanarPoint z2, PlanarPoint z3);

/// All sides equal within cls * diameter.
bool IsEquilateral(PlanarPoint z1, PlanarPoint z2, PlanarPoint z3,
                   double cls = kEpsClass);

/// Same question for four points, answered by running both solvers.
/// Throws kDuplicatePoints.
bool FtChebyCoincide4(std::span<const PlanarPoint, 4> z);

/// The closed-form answer for four points. Convex position: at the diagonal
/// crossing w, the two ends of some diagonal are equidistant from w and at
/// least as far as the other two. Otherwise: the contained vertex is the
/// Chebyshev center of the other three. Throws kDuplicatePoints.
bool Coincide4Condition(std::span<const PlanarPoint, 4> z);

}  // namespace planeloc
