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

#include "planeloc/bjorth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace planeloc {

namespace {

void RequireCompatible(const SeqVector& x, const SeqVector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "lengths " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  }
  if (x.size() == 0 || x.NormLInf() == 0.0) {
    throw Error(ErrorCode::kZeroVector, "x must be nonzero");
  }
}

PlanarPoint UnitConj(PlanarPoint v) { return std::conj(v) / std::abs(v); }

// Nonzero slots of c, the l1 mass on them and their unit directions.
struct SlotDecomposition {
  std::vector<std::size_t> slots;
  std::vector<PlanarPoint> directions;
  std::vector<double> mixing;
  double scale = 0.0;
};

SlotDecomposition Decompose(const SeqVector& c, double cls) {
  SlotDecomposition out;
  const double zero = cls * c.NormLInf();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double m = std::abs(c[i]);
    if (m <= zero) continue;
    out.slots.push_back(i);
    out.directions.push_back(c[i] / m);
    out.mixing.push_back(m);
    out.scale += m;
  }
  for (double& t : out.mixing) t /= out.scale;
  return out;
}

OrthogonalityType FromDecomposition(OrthogonalityTag tag, char variant,
                                    SlotDecomposition d) {
  OrthogonalityType t;
  t.tag = tag;
  t.variant = variant;
  t.slots = std::move(d.slots);
  t.directions = std::move(d.directions);
  t.mixing = std::move(d.mixing);
  t.scale = d.scale;
  return t;
}

// Angle at the origin from ray 0->from to ray 0->to.
Angle AngleBetween(PlanarPoint from, PlanarPoint to) {
  return Angle(std::arg(to / from));
}

char PairVariant4(std::size_t i, std::size_t j) {
  // (1,2) (1,3) (1,4) (2,3) (2,4) (3,4) in one-based slot numbering.
  static constexpr char kTable[4][4] = {{0, 'a', 'b', 'c'},
                                        {0, 0, 'd', 'e'},
                                        {0, 0, 0, 'f'},
                                        {0, 0, 0, 0}};
  return kTable[i][j];
}

char TripleVariant4(std::size_t missing) {
  // Missing slot 4 -> a, 1 -> b, 2 -> c, 3 -> d.
  static constexpr char kTable[4] = {'b', 'c', 'd', 'a'};
  return kTable[missing];
}

}  // namespace

SeqVector::SeqVector(std::initializer_list<PlanarPoint> entries)
    : entries_(entries) {}

SeqVector::SeqVector(std::vector<PlanarPoint> entries)
    : entries_(std::move(entries)) {}

double SeqVector::NormL1() const {
  double s = 0.0;
  for (PlanarPoint v : entries_) s += std::abs(v);
  return s;
}

double SeqVector::NormLInf() const {
  double s = 0.0;
  for (PlanarPoint v : entries_) s = std::max(s, std::abs(v));
  return s;
}

SeqVector SeqVector::Scaled(PlanarPoint s) const {
  std::vector<PlanarPoint> out(entries_);
  for (PlanarPoint& v : out) v *= s;
  return SeqVector(std::move(out));
}

SeqVector SeqVector::Plus(PlanarPoint s, const SeqVector& other) const {
  std::vector<PlanarPoint> out(entries_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * other[i];
  return SeqVector(std::move(out));
}

double SupportFunctionalCertificate::Balance(const SeqVector& y) const {
  PlanarPoint s = 0.0;
  if (space == NormSpace::kL1) {
    for (std::size_t i = 0; i < y.size(); ++i) s += coefficients[i] * y[i];
  } else {
    for (std::size_t i = 0; i < y.size(); ++i)
      s += convex_weights[i] * coefficients[i] * y[i];
  }
  return std::abs(s);
}

SupportFunctionalCertificate L1Certificate(const SeqVector& x,
                                           const SeqVector& y,
                                           const std::vector<bool>& is_zero,
                                           double tolerance) {
  SupportFunctionalCertificate cert;
  cert.space = NormSpace::kL1;
  cert.tolerance = tolerance;
  cert.coefficients.assign(x.size(), PlanarPoint(0.0));

  PlanarPoint forced = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero[i]) {
      cert.support.push_back(i);
      cert.slack += std::abs(y[i]);
      continue;
    }
    cert.coefficients[i] = UnitConj(x[i]);
    forced += cert.coefficients[i] * y[i];
  }
  cert.residual_vector = forced;
  cert.residual = std::abs(forced);
  cert.holds = cert.residual <= cert.slack + tolerance;

  // Free coefficients on zero entries cancel as much of the forced part as
  // the unit disc allows: d_i = -R conj(y_i) / (|y_i| * slack).
  if (cert.slack > 0.0 && cert.residual > 0.0) {
    const double shrink = std::min(1.0, cert.residual / cert.slack);
    const PlanarPoint dir = -forced / cert.residual;
    for (std::size_t i : cert.support) {
      if (y[i] == 0.0) continue;
      cert.coefficients[i] = shrink * dir * UnitConj(y[i]);
    }
  }
  return cert;
}

SupportFunctionalCertificate LInfCertificate(
    const SeqVector& x, const SeqVector& y,
    const std::vector<std::size_t>& max_set, double cls) {
  SupportFunctionalCertificate cert;
  cert.space = NormSpace::kLInf;
  cert.coefficients.assign(x.size(), PlanarPoint(0.0));
  cert.support = max_set;

  std::vector<PlanarPoint> images;
  images.reserve(max_set.size());
  for (std::size_t i : max_set) {
    cert.coefficients[i] = UnitConj(x[i]);
    images.push_back(cert.coefficients[i] * y[i]);
  }
  double scale = Diameter(images);
  for (PlanarPoint p : images) scale = std::max(scale, std::abs(p));
  cert.tolerance = cls * scale;

  const auto t = ConvexHullMembership(PlanarPoint(0.0), images, cls);
  if (!t) {
    cert.residual = HullDistance(PlanarPoint(0.0), images);
    cert.holds = false;
    return cert;
  }
  cert.convex_weights.assign(x.size(), 0.0);
  PlanarPoint s = 0.0;
  for (std::size_t j = 0; j < max_set.size(); ++j) {
    cert.convex_weights[max_set[j]] = (*t)[j];
    s += (*t)[j] * images[j];
  }
  cert.residual_vector = s;
  cert.residual = std::abs(s);
  cert.holds = true;
  return cert;
}

std::optional<SupportFunctionalCertificate> IsBjOrthogonalL1(
    const SeqVector& x, const SeqVector& y, const Tolerances& tol) {
  RequireCompatible(x, y);
  const double zero = tol.cls * x.NormLInf();
  std::vector<bool> is_zero(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) is_zero[i] = std::abs(x[i]) <= zero;
  SupportFunctionalCertificate cert =
      L1Certificate(x, y, is_zero, tol.rel * y.NormL1());
  if (!cert.holds) return std::nullopt;
  return cert;
}

std::vector<std::size_t> MaxModulusSet(const SeqVector& x, double cls) {
  const double m = x.NormLInf();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i]) >= m - cls * m) out.push_back(i);
  return out;
}

std::optional<SupportFunctionalCertificate> IsBjOrthogonalLInf(
    const SeqVector& x, const SeqVector& y, const Tolerances& tol) {
  RequireCompatible(x, y);
  SupportFunctionalCertificate cert =
      LInfCertificate(x, y, MaxModulusSet(x, tol.cls), tol.cls);
  if (!cert.holds) return std::nullopt;
  return cert;
}

int SmoothnessOrderLInf(const SeqVector& x) {
  if (x.size() == 0 || x.NormLInf() == 0.0) {
    throw Error(ErrorCode::kZeroVector, "smoothness of the zero vector");
  }
  return static_cast<int>(MaxModulusSet(x).size());
}

OrthogonalityType ClassifyL1Orthogonal3(const SeqVector& c,
                                        std::span<const double, 3> weights) {
  if (c.size() != 3) {
    throw Error(ErrorCode::kLengthMismatch, "expected a vector of length 3");
  }
  const double total = weights[0] + weights[1] + weights[2];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(weights[i] > 0.0)) {
      throw Error(ErrorCode::kInvalidWeight, "weights must be positive");
    }
    if (weights[i] >= total - weights[i] - kEpsClass * total) {
      throw Error(ErrorCode::kWeightConditionViolated,
                  "weight " + std::to_string(i) +
                      " is not below the sum of the other two");
    }
  }
  const SeqVector alpha{weights[0], weights[1], weights[2]};
  const auto cert = IsBjOrthogonalL1(c, alpha);
  if (!cert) {
    throw Error(ErrorCode::kNotOrthogonal, "vector is not orthogonal to the weights");
  }

  SlotDecomposition d = Decompose(c, kEpsClass);
  const std::size_t k = d.slots.size();
  auto sq = [&](std::size_t i) { return weights[i] * weights[i]; };
  // Slack in cos() induced by the admitted residual of the l1 test.
  const double r = cert->residual + cert->tolerance;
  const double amax = std::max({weights[0], weights[1], weights[2]});
  auto cos_band = [&](std::size_t i, std::size_t j) {
    return kEpsClass + (2.0 * amax * r + r * r) / (2.0 * weights[i] * weights[j]);
  };

  if (k == 1) {
    const char variant = static_cast<char>('a' + d.slots[0]);
    return FromDecomposition(OrthogonalityTag::kI, variant, std::move(d));
  }
  if (k == 2) {
    const std::size_t i = d.slots[0];
    const std::size_t j = d.slots[1];
    const std::size_t m = 3 - i - j;
    const char variant = (i == 0 && j == 1) ? 'a' : (i == 1 && j == 2) ? 'b' : 'c';
    const Angle theta = AngleBetween(d.directions[1], d.directions[0]);
    const double bound = (sq(m) - sq(i) - sq(j)) / (2.0 * weights[i] * weights[j]);
    if (theta.cos() > bound + cos_band(i, j)) {
      throw Error(ErrorCode::kNotOrthogonal, "two-slot angle bound violated");
    }
    OrthogonalityType t =
        FromDecomposition(OrthogonalityTag::kII, variant, std::move(d));
    t.theta = theta;
    return t;
  }
  const Angle theta = AngleBetween(d.directions[1], d.directions[0]);
  const Angle phi = AngleBetween(d.directions[2], d.directions[0]);
  const double cos_theta = (sq(2) - sq(0) - sq(1)) / (2.0 * weights[0] * weights[1]);
  const double cos_phi = (sq(1) - sq(0) - sq(2)) / (2.0 * weights[0] * weights[2]);
  if (std::abs(theta.cos() - cos_theta) > cos_band(0, 1) ||
      std::abs(phi.cos() - cos_phi) > cos_band(0, 2)) {
    throw Error(ErrorCode::kNotOrthogonal, "three-slot angle equalities violated");
  }
  OrthogonalityType t = FromDecomposition(OrthogonalityTag::kIII, 'a', std::move(d));
  t.theta = theta;
  t.phi = phi;
  return t;
}

OrthogonalityType ClassifyL1Orthogonal4(const SeqVector& c) {
  if (c.size() != 4) {
    throw Error(ErrorCode::kLengthMismatch, "expected a vector of length 4");
  }
  const SeqVector ones{1.0, 1.0, 1.0, 1.0};
  const auto cert = IsBjOrthogonalL1(c, ones);
  if (!cert) {
    throw Error(ErrorCode::kNotOrthogonal, "vector is not orthogonal to (1,1,1,1)");
  }
  SlotDecomposition d = Decompose(c, kEpsClass);
  switch (d.slots.size()) {
    case 1: {
      const char variant = static_cast<char>('a' + d.slots[0]);
      return FromDecomposition(OrthogonalityTag::kI, variant, std::move(d));
    }
    case 2: {
      const char variant = PairVariant4(d.slots[0], d.slots[1]);
      const Angle theta = AngleBetween(d.directions[1], d.directions[0]);
      OrthogonalityType t =
          FromDecomposition(OrthogonalityTag::kII, variant, std::move(d));
      t.theta = theta;
      return t;
    }
    case 3: {
      if (!ConvexHullMembership(PlanarPoint(0.0), d.directions)) {
        throw Error(ErrorCode::kNotOrthogonal,
                    "origin outside the hull of the three directions");
      }
      const std::size_t missing = 6 - d.slots[0] - d.slots[1] - d.slots[2];
      return FromDecomposition(OrthogonalityTag::kIII, TripleVariant4(missing),
                               std::move(d));
    }
    default: {
      PlanarPoint sum = 0.0;
      for (PlanarPoint u : d.directions) sum += u;
      if (std::abs(sum) > kEpsClass + cert->residual + cert->tolerance) {
        throw Error(ErrorCode::kNotOrthogonal,
                    "four directions do not form a rectangle");
      }
      return FromDecomposition(OrthogonalityTag::kIV, 'a', std::move(d));
    }
  }
}

SeqVector Instantiate(const OrthogonalityType& type, std::size_t n) {
  std::vector<PlanarPoint> v(n, PlanarPoint(0.0));
  for (std::size_t k = 0; k < type.slots.size(); ++k) {
    v.at(type.slots[k]) = type.scale * type.mixing[k] * type.directions[k];
  }
  return SeqVector(std::move(v));
}

}  // namespace planeloc
