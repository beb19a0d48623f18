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

// Weighted Fermat-Torricelli points: closed-form three- and four-point
// solvers, a certified iterative solver for any n, and the operations that
// add, replace, merge or rescale points around a known optimum.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "planeloc/bjorth.hpp"
#include "planeloc/common.hpp"
#include "planeloc/geom.hpp"

namespace planeloc {

/// Pairwise distinct points with strictly positive weights.
class WeightedConfiguration {
 public:
  /// Throws kEmptyInput, kLengthMismatch, kInvalidWeight, kNonFinite,
  /// kDuplicatePoints.
  WeightedConfiguration(std::vector<PlanarPoint> points,
                        std::vector<double> weights);
  /// Unit weights.
  explicit WeightedConfiguration(std::vector<PlanarPoint> points);

  std::size_t size() const { return points_.size(); }
  std::span<const PlanarPoint> points() const { return points_; }
  std::span<const double> weights() const { return weights_; }
  PlanarPoint point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  double Diameter() const { return diameter_; }
  /// Diameter, or a unit-ish scale for a single point.
  double Scale() const { return scale_; }
  double TotalWeight() const { return total_weight_; }

  /// sum_i alpha_i |z_i - w|
  double Objective(PlanarPoint w) const;

  /// Index of the point within cls * Scale() of w, if any.
  std::optional<std::size_t> CoincidentIndex(PlanarPoint w,
                                             double cls = kEpsClass) const;

 private:
  std::vector<PlanarPoint> points_;
  std::vector<double> weights_;
  double diameter_ = 0.0;
  double scale_ = 1.0;
  double total_weight_ = 0.0;
};

/// Optimality of w for sum alpha_i |z_i - w|, as l1 orthogonality of
/// (alpha_i (z_i - w)) to (alpha_i). Entries with z_i at w contribute their
/// weight as slack.
struct FtCertificate {
  SupportFunctionalCertificate functional;
  /// The configuration point at w, if any, and the coefficient
  /// gamma = -residual_vector / alpha_{i0} that the functional takes there.
  std::optional<std::size_t> vertex;
  std::optional<PlanarPoint> gamma;

  bool pass() const { return functional.holds; }
  double residual() const { return functional.residual; }
  double slack() const { return functional.slack; }
};

/// Certificate check at w. `rel` scales the residual allowance by the total
/// weight.
FtCertificate CertifyFermat(const WeightedConfiguration& config, PlanarPoint w,
                            double rel = kEpsRel);

/// Same test on raw spans, tolerating repeated points; used to re-verify
/// perturbed configurations that need not be valid instances.
FtCertificate CertifyFermat(std::span<const PlanarPoint> points,
                            std::span<const double> weights, PlanarPoint w,
                            double rel = kEpsRel);

enum class FtCase {
  kDominantWeight,
  kSegmentOfSolutions,
  kVertexCase,
  kInteriorCase,
  kDiagonalIntersection,
  kHullVertex,
  kIterative,
};

const char* ToString(FtCase c);

struct FtCaseTag {
  FtCase kind = FtCase::kIterative;
  /// Vertex index for kDominantWeight, kVertexCase, kHullVertex, and for
  /// kIterative when the optimum is a configuration point.
  std::optional<std::size_t> index;
  /// kVertexCase: angle at the vertex from the ray to the lower remaining
  /// index to the ray to the higher one.
  /// kInteriorCase: angles at w from the ray to point 0 to the rays to points
  /// 1 (theta) and 2 (phi).
  std::optional<Angle> theta;
  std::optional<Angle> phi;
};

struct PointSolution {
  PlanarPoint w;
};

/// Every point of the closed segment is optimal.
struct SegmentSolution {
  PlanarPoint a;
  PlanarPoint b;
};

using FtSolution = std::variant<PointSolution, SegmentSolution>;

struct FtSolveResult {
  FtSolution solution;
  double objective = 0.0;
  FtCaseTag tag;
  FtCertificate certificate;
  int iterations = 0;

  /// The point solution, or the first endpoint of a segment.
  PlanarPoint Location() const;
};

/// Three distinct points, positive weights. Dispatches on the weight
/// triangle condition, then vertex angles, then builds the interior point from
/// two inscribed-angle circles. Throws kDuplicatePoints.
FtSolveResult SolveFt3Weighted(std::span<const PlanarPoint, 3> z,
                               std::span<const double, 3> weights);

/// Four distinct points, unit weights: the contained vertex of a non-convex
/// quadrilateral, else the diagonal crossing. Throws kDuplicatePoints.
FtSolveResult SolveFt4(std::span<const PlanarPoint, 4> z);

struct IterativeOptions {
  /// Residual target, relative to the total weight.
  double tol = kEpsRel;
  int max_iter = 10000;
};

/// Thrown when the iteration budget runs out before certification.
class MaxIterationsExceeded : public Error {
 public:
  MaxIterationsExceeded(PlanarPoint best, FtCertificate certificate)
      : Error(ErrorCode::kMaxIterationsExceeded,
              "iteration budget exhausted before certification"),
        best_(best),
        certificate_(std::move(certificate)) {}

  PlanarPoint best() const { return best_; }
  const FtCertificate& certificate() const { return certificate_; }

 private:
  PlanarPoint best_;
  FtCertificate certificate_;
};

/// Any n: vertex test at every point, then a Weiszfeld iteration from the
/// weighted centroid with vertex escape and safeguarded Newton steps, stopped
/// when the certificate residual is within options.tol * total weight.
FtSolveResult SolveFtN(const WeightedConfiguration& config,
                       const IterativeOptions& options = {});

/// Dispatches to the closed-form solvers where they apply (n = 3, or n = 4
/// with unit weights) and to SolveFtN otherwise.
FtSolveResult SolveFermat(const WeightedConfiguration& config,
                          const IterativeOptions& options = {});

/// Does w, an optimum of config lying off every point, stay optimal when
/// (z_new, weight_new) is added? True exactly when z_new = w.
/// Throws kCertificatePreconditionFailed.
bool AdditionPreserves(const WeightedConfiguration& config, PlanarPoint w,
                       PlanarPoint z_new, double weight_new);

/// Does w stay optimal when point `index` is moved to s? True exactly when s
/// is on the closed ray from w through the old point.
/// Throws kCertificatePreconditionFailed.
bool ReplacementPreserves(const WeightedConfiguration& config, PlanarPoint w,
                          std::size_t index, PlanarPoint s);

/// The predicate above evaluated geometrically (ray membership).
bool OnClosedRay(PlanarPoint w, PlanarPoint through, PlanarPoint s,
                 double cls = kEpsClass);

/// Is w optimal for the union of a and b? With w an optimum of a lying off a's
/// points, this agrees with w being optimal for b alone.
/// Throws kCertificatePreconditionFailed.
bool DecompositionEquivalence(const WeightedConfiguration& a, PlanarPoint w,
                              const WeightedConfiguration& b);

/// Moves each point along its ray from w: s_i = w + c_i (z_i - w), same
/// weights. All c_i must share a sign. Throws kMixedSigns,
/// kCertificatePreconditionFailed.
WeightedConfiguration ScaledConfiguration(const WeightedConfiguration& config,
                                          PlanarPoint w,
                                          std::span<const double> scales);

struct ExtensionImpossible {};
struct ExtensionUndetermined {};
struct ExtensionPoint {
  PlanarPoint z_new;
};

using ExtensionResult =
    std::variant<ExtensionImpossible, ExtensionUndetermined, ExtensionPoint>;

/// With the optimum w at configuration point i0: no new point of weight
/// weight_new > 2 alpha_{i0} can keep w optimal; for weight_new <= alpha_{i0}
/// one is constructed. The band in between is reported as undetermined.
/// Throws kVertexPreconditionFailed.
ExtensionResult ExtendAtVertex(const WeightedConfiguration& config,
                               PlanarPoint w, double weight_new);

}  // namespace planeloc
