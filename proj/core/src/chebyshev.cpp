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

#include "planeloc/chebyshev.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "planeloc/fermat.hpp"
#include "planeloc/geom.hpp"

namespace planeloc {

namespace {

void RequireWeights(std::span<const PlanarPoint> points,
                    std::span<const double> weights) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "no points");
  if (points.size() != weights.size()) {
    throw Error(ErrorCode::kLengthMismatch, "one weight per point required");
  }
  for (double a : weights) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw Error(ErrorCode::kInvalidWeight, "weights must be positive and finite");
    }
  }
}

struct Candidate {
  PlanarPoint w;
  double radius;
};

ChebySolveResult Assemble(std::span<const PlanarPoint> points,
                          std::span<const double> weights, PlanarPoint w,
                          SupportFunctionalCertificate cert) {
  ChebySolveResult r;
  r.center = w;
  r.radius = ChebyshevRadius(points, weights, w);
  r.support = cert.support;
  if (cert.holds) {
    double total = 0.0;
    for (std::size_t i : r.support) {
      const double s = cert.convex_weights[i] * weights[i] * weights[i];
      r.hull_weights.push_back(s);
      total += s;
    }
    for (double& s : r.hull_weights) s /= total;
  }
  r.certificate = std::move(cert);
  return r;
}

ChebySolveResult Solve(std::span<const PlanarPoint> points,
                       std::span<const double> weights) {
  RequireWeights(points, weights);
  const std::size_t n = points.size();
  if (n == 1) {
    ChebySolveResult r;
    r.center = points[0];
    r.support = {0};
    r.hull_weights = {1.0};
    r.certificate.space = NormSpace::kLInf;
    r.certificate.coefficients = {PlanarPoint(0.0)};
    r.certificate.convex_weights = {1.0};
    r.certificate.support = {0};
    r.certificate.holds = true;
    return r;
  }
  RequireDistinct(points);

  std::vector<Candidate> candidates;
  auto add = [&](PlanarPoint w) {
    candidates.push_back({w, ChebyshevRadius(points, weights, w)});
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = weights[i], b = weights[j];
      if (a == b) add(0.5 * (points[i] + points[j]));
      else add((a * points[i] + b * points[j]) / (a + b));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::array<PlanarPoint, 3> tri{points[i], points[j], points[k]};
        if (Collinear(tri[0], tri[1], tri[2])) continue;
        if (weights[i] == weights[j] && weights[j] == weights[k]) {
          add(Circumcenter3(tri[0], tri[1], tri[2]));
          continue;
        }
        const Locus ij = ApolloniusLocus(tri[0], tri[1], weights[i], weights[j]);
        const Locus jk = ApolloniusLocus(tri[1], tri[2], weights[j], weights[k]);
        for (PlanarPoint p : Intersect(ij, jk)) {
          if (ConvexHullMembership(p, tri)) add(p);
        }
      }
    }
  }

  double best_radius = candidates.front().radius;
  for (const Candidate& c : candidates) best_radius = std::min(best_radius, c.radius);

  // Every candidate within the tie band sits at the (unique) center; the
  // reported one is the passing candidate with the smallest support.
  std::optional<ChebySolveResult> best;
  for (const Candidate& c : candidates) {
    if (c.radius > best_radius + kEpsRel * best_radius) continue;
    SupportFunctionalCertificate cert = ChebyCertificate(points, weights, c.w);
    if (!cert.holds) continue;
    if (!best || cert.support < best->support) {
      best = Assemble(points, weights, c.w, std::move(cert));
    }
  }
  if (best) return *best;

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.radius < b.radius;
                   });
  for (const Candidate& c : candidates) {
    SupportFunctionalCertificate cert = ChebyCertificate(points, weights, c.w);
    if (cert.holds) return Assemble(points, weights, c.w, std::move(cert));
  }
  const PlanarPoint w = candidates.front().w;
  return Assemble(points, weights, w, ChebyCertificate(points, weights, w));
}

}  // namespace

SupportFunctionalCertificate ChebyCertificate(std::span<const PlanarPoint> points,
                                              std::span<const double> weights,
                                              PlanarPoint w) {
  RequireWeights(points, weights);
  if (points.size() == 1) {
    throw Error(ErrorCode::kSinglePoint, "a single point is its own center");
  }
  std::vector<PlanarPoint> x(points.size());
  std::vector<PlanarPoint> y(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    x[i] = weights[i] * (points[i] - w);
    y[i] = weights[i];
  }
  SeqVector xs(std::move(x));
  if (xs.NormLInf() == 0.0) {
    throw Error(ErrorCode::kZeroVector, "all points coincide with w");
  }
  return LInfCertificate(xs, SeqVector(std::move(y)), MaxModulusSet(xs));
}

ChebySolveResult SolveChebyshev(std::span<const PlanarPoint> points) {
  const std::vector<double> ones(points.size(), 1.0);
  return Solve(points, ones);
}

ChebySolveResult SolveChebyshevWeighted(std::span<const PlanarPoint> points,
                                        std::span<const double> weights) {
  return Solve(points, weights);
}

double ChebyshevRadius(std::span<const PlanarPoint> points,
                       std::span<const double> weights, PlanarPoint w) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "no points");
  if (points.size() != weights.size()) {
    throw Error(ErrorCode::kLengthMismatch, "one weight per point required");
  }
  double r = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    r = std::max(r, weights[i] * std::abs(points[i] - w));
  return r;
}

bool IsEquilateral(PlanarPoint z1, PlanarPoint z2, PlanarPoint z3, double cls) {
  const double a = std::abs(z1 - z2), b = std::abs(z2 - z3), c = std::abs(z3 - z1);
  const double d = std::max({a, b, c});
  return d - std::min({a, b, c}) <= cls * d;
}

bool FtChebyCoincide3(PlanarPoint z1, PlanarPoint z2, PlanarPoint z3) {
  const std::array<PlanarPoint, 3> z{z1, z2, z3};
  RequireDistinct(z);
  if (Collinear(z1, z2, z3)) {
    throw Error(ErrorCode::kCollinearPoints, "triangle is degenerate");
  }
  const std::array<double, 3> ones{1.0, 1.0, 1.0};
  const PlanarPoint ft = SolveFt3Weighted(z, ones).Location();
  const PlanarPoint center = SolveChebyshev(z).center;
  return std::abs(ft - center) <= kEpsClass * Diameter(z);
}

bool FtChebyCoincide4(std::span<const PlanarPoint, 4> z) {
  RequireDistinct(z);
  const PlanarPoint ft = SolveFt4(z).Location();
  const PlanarPoint center = SolveChebyshev(z).center;
  return std::abs(ft - center) <= kEpsClass * Diameter(z);
}

bool Coincide4Condition(std::span<const PlanarPoint, 4> z) {
  RequireDistinct(z);
  const double band = kEpsClass * Diameter(z);
  const QuadrilateralShape shape = ClassifyQuadrilateral(z);
  if (const auto* nc = std::get_if<NonConvex>(&shape)) {
    std::array<PlanarPoint, 3> rest;
    std::size_t m = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != nc->contained) rest[m++] = z[i];
    return std::abs(SolveChebyshev(rest).center - z[nc->contained]) <= band;
  }
  const auto& d = std::get<ConvexOrder>(shape).diagonals;
  const auto w = SegmentIntersection(z[d[0][0]], z[d[0][1]], z[d[1][0]], z[d[1][1]]);
  if (!w) return false;
  for (std::size_t k = 0; k < 2; ++k) {
    const double di = std::abs(z[d[k][0]] - *w);
    const double dj = std::abs(z[d[k][1]] - *w);
    const double others = std::max(std::abs(z[d[1 - k][0]] - *w),
                                   std::abs(z[d[1 - k][1]] - *w));
    if (std::abs(di - dj) <= band && std::min(di, dj) >= others - band) return true;
  }
  return false;
}

}  // namespace planeloc
