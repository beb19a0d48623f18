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

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace planeloc {

/// A point of the plane, stored as a complex coordinate re + i*im.
using PlanarPoint = std::complex<double>;

/// Tolerance model. All absolute thresholds are one of these multiplied by a
/// scale taken from the instance (its diameter, a norm, a weight sum).
struct Tolerances {
  /// Relative tolerance on residuals and equalities.
  double rel = 1e-9;
  /// Band used for yes/no boundary decisions: collinearity, coincidence,
  /// unimodularity, hull boundary, max-modulus ties.
  double cls = 1e-7;
};

inline constexpr Tolerances kDefaultTolerances{};
inline constexpr double kEpsRel = kDefaultTolerances.rel;
inline constexpr double kEpsClass = kDefaultTolerances.cls;

enum class ErrorCode {
  kNonFinite,
  kCoincidentPoints,
  kCollinearPoints,
  kOverlappingSegments,
  kDuplicatePoints,
  kNotUnimodular,
  kZeroVector,
  kLengthMismatch,
  kNotOrthogonal,
  kWeightConditionViolated,
  kInvalidWeight,
  kEmptyInput,
  kSinglePoint,
  kMixedSigns,
  kCertificatePreconditionFailed,
  kVertexPreconditionFailed,
  kMaxIterationsExceeded,
  kInvalidArgument,
};

const char* ToString(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ToString(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline bool IsFinite(PlanarPoint p) {
  return std::isfinite(p.real()) && std::isfinite(p.imag());
}

/// Largest pairwise distance. Zero for fewer than two points.
double Diameter(std::span<const PlanarPoint> pts);

/// Diameter, or max(1, |p|) over the inputs when every point coincides, so
/// that relative bands never collapse to an exact comparison at scale zero.
double ToleranceScale(std::span<const PlanarPoint> pts);

}  // namespace planeloc
