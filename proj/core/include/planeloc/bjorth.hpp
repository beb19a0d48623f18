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

// Birkhoff-James orthogonality x _|_ y in the complex sequence spaces l1^n and
// linf^n, with witness functionals, and the structure of the vectors
// orthogonal to a weight vector in l1^3 and l1^4.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "planeloc/common.hpp"
#include "planeloc/geom.hpp"

namespace planeloc {

/// An n-tuple of complex coordinates; the norm is chosen by the caller.
class SeqVector {
 public:
  SeqVector() = default;
  SeqVector(std::initializer_list<PlanarPoint> entries);
  explicit SeqVector(std::vector<PlanarPoint> entries);

  std::size_t size() const { return entries_.size(); }
  PlanarPoint operator[](std::size_t i) const { return entries_[i]; }
  std::span<const PlanarPoint> entries() const { return entries_; }

  double NormL1() const;
  double NormLInf() const;

  SeqVector Scaled(PlanarPoint s) const;
  /// this + s * other
  SeqVector Plus(PlanarPoint s, const SeqVector& other) const;

 private:
  std::vector<PlanarPoint> entries_;
};

enum class NormSpace { kL1, kLInf };

/// A norm-one functional f(u) = sum d_i u_i with f(x) = ||x||, certifying
/// x _|_ y when f(y) = 0.
///
/// L1: d_i = conj(x_i)/|x_i| on nonzero entries (forced); on zero entries d_i
/// is free in the unit disc and absorbs the forced part. `residual` is
/// |sum over forced entries of d_i y_i| and `slack` is sum |y_i| over the zero
/// entries; the test holds when residual <= slack + tolerance.
///
/// LInf: f = sum_j t_j conj(x_j)/|x_j| u_j over the max-modulus set.
/// `convex_weights` has length n and vanishes off `support`; `residual` is
/// |sum t_j d_j y_j| and `slack` is zero.
struct SupportFunctionalCertificate {
  NormSpace space = NormSpace::kL1;
  std::vector<PlanarPoint> coefficients;
  std::vector<double> convex_weights;
  /// L1: indices of zero entries. LInf: max-modulus indices.
  std::vector<std::size_t> support;
  PlanarPoint residual_vector;
  double residual = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool holds = false;

  /// |sum d_i y_i| with the full coefficient vector.
  double Balance(const SeqVector& y) const;
};

/// L1 certificate with an explicit set of entries treated as zero. The
/// tolerance is absolute. Callers that know which entries vanish (the
/// solvers) use this directly.
SupportFunctionalCertificate L1Certificate(const SeqVector& x,
                                           const SeqVector& y,
                                           const std::vector<bool>& is_zero,
                                           double tolerance);

/// LInf certificate over an explicit max-modulus index set.
SupportFunctionalCertificate LInfCertificate(
    const SeqVector& x, const SeqVector& y,
    const std::vector<std::size_t>& max_set, double cls = kEpsClass);

/// x _|_ y in l1^n. Entries with |x_i| <= cls * ||x||_inf count as zero;
/// the residual tolerance is rel * ||y||_1. Throws kZeroVector,
/// kLengthMismatch.
std::optional<SupportFunctionalCertificate> IsBjOrthogonalL1(
    const SeqVector& x, const SeqVector& y,
    const Tolerances& tol = kDefaultTolerances);

/// x _|_ y in linf^n, tested as 0 in the hull of conj(x_j)/|x_j| y_j over the
/// max-modulus set. Throws kZeroVector, kLengthMismatch.
std::optional<SupportFunctionalCertificate> IsBjOrthogonalLInf(
    const SeqVector& x, const SeqVector& y,
    const Tolerances& tol = kDefaultTolerances);

/// Indices whose modulus is within cls * max of the max modulus.
std::vector<std::size_t> MaxModulusSet(const SeqVector& x,
                                       double cls = kEpsClass);

/// Number of max-modulus entries, i.e. k for a k-smooth point of linf^n.
/// Throws kZeroVector.
int SmoothnessOrderLInf(const SeqVector& x);

enum class OrthogonalityTag { kI, kII, kIII, kIV };

/// One of the parametric families of vectors orthogonal to a positive weight
/// vector: lambda * (t_1 mu, t_2 sigma, ...) placed on `slots`.
struct OrthogonalityType {
  OrthogonalityTag tag = OrthogonalityTag::kI;
  /// Sub-family letter, 'a', 'b', ... in the order the families are listed.
  char variant = 'a';
  /// Nonzero coordinates, increasing.
  std::vector<std::size_t> slots;
  /// Unit directions on the slots (mu, sigma, gamma, delta).
  std::vector<PlanarPoint> directions;
  /// Mixing coefficients on the slots, each in (0, 1], summing to one.
  std::vector<double> mixing;
  double scale = 0.0;  // lambda
  /// Angle from sigma to mu, and from gamma to mu, where defined.
  std::optional<Angle> theta;
  std::optional<Angle> phi;
};

/// Classifies c _|_ weights in l1^3. The weights must satisfy the strict
/// triangle condition. Throws kNotOrthogonal, kWeightConditionViolated.
OrthogonalityType ClassifyL1Orthogonal3(const SeqVector& c,
                                        std::span<const double, 3> weights);

/// Classifies c _|_ (1, 1, 1, 1) in l1^4. Throws kNotOrthogonal.
OrthogonalityType ClassifyL1Orthogonal4(const SeqVector& c);

/// Builds lambda * (mixing_k direction_k on slot_k) of length n.
SeqVector Instantiate(const OrthogonalityType& type, std::size_t n);

}  // namespace planeloc
