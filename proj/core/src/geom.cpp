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

#include "planeloc/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <numbers>
#include <numeric>

namespace planeloc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double Cross(PlanarPoint a, PlanarPoint b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double Dot(PlanarPoint a, PlanarPoint b) {
  return a.real() * b.real() + a.imag() * b.imag();
}

double Diameter3(PlanarPoint a, PlanarPoint b, PlanarPoint c) {
  return std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)});
}

// Closest point of [a, b] to p, as the parameter along a->b in [0, 1].
double ClosestParameter(PlanarPoint p, PlanarPoint a, PlanarPoint b) {
  const PlanarPoint ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return 0.0;
  return std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
}

}  // namespace

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kCoincidentPoints: return "CoincidentPoints";
    case ErrorCode::kCollinearPoints: return "CollinearPoints";
    case ErrorCode::kOverlappingSegments: return "OverlappingSegments";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotOrthogonal: return "NotOrthogonal";
    case ErrorCode::kWeightConditionViolated: return "WeightConditionViolated";
    case ErrorCode::kInvalidWeight: return "InvalidWeight";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kSinglePoint: return "SinglePoint";
    case ErrorCode::kMixedSigns: return "MixedSigns";
    case ErrorCode::kCertificatePreconditionFailed:
      return "CertificatePreconditionFailed";
    case ErrorCode::kVertexPreconditionFailed:
      return "VertexPreconditionFailed";
    case ErrorCode::kMaxIterationsExceeded: return "MaxIterationsExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

double Diameter(std::span<const PlanarPoint> pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, std::abs(pts[i] - pts[j]));
  return d;
}

double ToleranceScale(std::span<const PlanarPoint> pts) {
  const double d = Diameter(pts);
  if (d > 0.0) return d;
  double m = 1.0;
  for (PlanarPoint p : pts) m = std::max(m, std::abs(p));
  return m;
}

Angle::Angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  radians_ = r;
}

double Angle::cos() const { return std::cos(radians_); }

Angle DirectedAngle(PlanarPoint u, PlanarPoint v, PlanarPoint w) {
  const PlanarPoint pts[] = {u, v, w};
  const double tol = kEpsClass * ToleranceScale(pts);
  if (std::abs(u - v) <= tol || std::abs(u - w) <= tol) {
    throw Error(ErrorCode::kCoincidentPoints,
                "directed angle needs u distinct from v and w");
  }
  return Angle(std::arg((w - u) / (v - u)));
}

double Orientation(PlanarPoint a, PlanarPoint b, PlanarPoint c) {
  return Cross(b - a, c - a);
}

bool Collinear(PlanarPoint a, PlanarPoint b, PlanarPoint c, double cls) {
  const double d = Diameter3(a, b, c);
  return std::abs(Orientation(a, b, c)) <= cls * d * d;
}

bool OnSegment(PlanarPoint p, PlanarPoint a, PlanarPoint b, double cls) {
  const double scale = Diameter3(p, a, b);
  const double t = ClosestParameter(p, a, b);
  return std::abs(p - (a + t * (b - a))) <= cls * scale;
}

std::vector<std::size_t> ConvexHullIndices(std::span<const PlanarPoint> pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a].real() != pts[b].real()) return pts[a].real() < pts[b].real();
    if (pts[a].imag() != pts[b].imag()) return pts[a].imag() < pts[b].imag();
    return a < b;
  });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t a, std::size_t b) {
                          return pts[a] == pts[b];
                        }),
            idx.end());
  if (idx.size() < 3) return idx;

  // Andrew's monotone chain.
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && Orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0)
      --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) {
    while (k >= lower &&
           Orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[*it]) <= 0)
      --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

std::optional<std::vector<double>> ConvexHullMembership(
    PlanarPoint p, std::span<const PlanarPoint> pts, double cls) {
  if (pts.empty()) {
    throw Error(ErrorCode::kEmptyInput, "hull membership needs points");
  }
  double scale = Diameter(pts);
  for (PlanarPoint q : pts) scale = std::max(scale, std::abs(p - q));
  const double tol = cls * scale;

  std::vector<double> t(pts.size(), 0.0);
  const std::vector<std::size_t> hull = ConvexHullIndices(pts);

  auto on_edge = [&](std::size_t a, std::size_t b) -> bool {
    const double s = ClosestParameter(p, pts[a], pts[b]);
    if (std::abs(p - (pts[a] + s * (pts[b] - pts[a]))) > tol) return false;
    std::fill(t.begin(), t.end(), 0.0);
    t[a] += 1.0 - s;
    t[b] += s;
    return true;
  };

  if (hull.size() == 1) {
    if (std::abs(p - pts[hull[0]]) > tol) return std::nullopt;
    t[hull[0]] = 1.0;
    return t;
  }
  if (hull.size() == 2) {
    if (on_edge(hull[0], hull[1])) return t;
    return std::nullopt;
  }

  const std::size_t m = hull.size();
  bool inside = true;
  for (std::size_t e = 0; e < m && inside; ++e) {
    inside = Orientation(pts[hull[e]], pts[hull[(e + 1) % m]], p) >= 0.0;
  }
  if (inside) {
    // Fan triangulation from hull[0].
    const PlanarPoint a = pts[hull[0]];
    for (std::size_t k = 1; k + 1 < m; ++k) {
      const PlanarPoint b = pts[hull[k]];
      const PlanarPoint c = pts[hull[k + 1]];
      const double area = Orientation(a, b, c);
      double la = Orientation(p, b, c) / area;
      double lb = Orientation(a, p, c) / area;
      double lc = Orientation(a, b, p) / area;
      if (std::min({la, lb, lc}) < -1e-12) continue;
      la = std::max(la, 0.0);
      lb = std::max(lb, 0.0);
      lc = std::max(lc, 0.0);
      const double sum = la + lb + lc;
      std::fill(t.begin(), t.end(), 0.0);
      t[hull[0]] = la / sum;
      t[hull[k]] = lb / sum;
      t[hull[k + 1]] = lc / sum;
      return t;
    }
  }

  // Outside (or lost to rounding): accept within the band of the boundary.
  std::size_t best_edge = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < m; ++e) {
    const PlanarPoint a = pts[hull[e]];
    const PlanarPoint b = pts[hull[(e + 1) % m]];
    const double d = std::abs(p - (a + ClosestParameter(p, a, b) * (b - a)));
    if (d < best) {
      best = d;
      best_edge = e;
    }
  }
  if (on_edge(hull[best_edge], hull[(best_edge + 1) % m])) return t;
  return std::nullopt;
}

double HullDistance(PlanarPoint p, std::span<const PlanarPoint> pts) {
  if (pts.empty()) {
    throw Error(ErrorCode::kEmptyInput, "hull distance needs points");
  }
  const std::vector<std::size_t> hull = ConvexHullIndices(pts);
  const std::size_t m = hull.size();
  if (m == 1) return std::abs(p - pts[hull[0]]);
  if (m >= 3) {
    bool inside = true;
    for (std::size_t e = 0; e < m && inside; ++e)
      inside = Orientation(pts[hull[e]], pts[hull[(e + 1) % m]], p) >= 0.0;
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < (m == 2 ? 1 : m); ++e) {
    const PlanarPoint a = pts[hull[e]];
    const PlanarPoint b = pts[hull[(e + 1) % m]];
    best = std::min(best, std::abs(p - (a + ClosestParameter(p, a, b) * (b - a))));
  }
  return best;
}

PlanarPoint Circumcenter3(PlanarPoint a, PlanarPoint b, PlanarPoint c) {
  if (Collinear(a, b, c)) {
    throw Error(ErrorCode::kCollinearPoints, "circumcenter of collinear points");
  }
  const PlanarPoint ab = b - a;
  const PlanarPoint ac = c - a;
  const double d = 2.0 * Cross(ab, ac);
  const double ab2 = std::norm(ab);
  const double ac2 = std::norm(ac);
  const double ux = (ac.imag() * ab2 - ab.imag() * ac2) / d;
  const double uy = (ab.real() * ac2 - ac.real() * ab2) / d;
  return a + PlanarPoint(ux, uy);
}

std::optional<PlanarPoint> SegmentIntersection(PlanarPoint a, PlanarPoint b,
                                               PlanarPoint c, PlanarPoint d) {
  const PlanarPoint pts[] = {a, b, c, d};
  const double scale = ToleranceScale(pts);
  const double tol = kEpsClass * scale;
  if (std::abs(a - b) <= tol || std::abs(c - d) <= tol) {
    throw Error(ErrorCode::kCoincidentPoints, "degenerate segment");
  }
  const PlanarPoint r = b - a;
  const PlanarPoint s = d - c;
  const double denom = Cross(r, s);

  if (std::abs(denom) <= kEpsClass * std::abs(r) * std::abs(s)) {
    // Parallel. Disjoint unless on one line.
    if (std::abs(Cross(r, c - a)) / std::abs(r) > tol) return std::nullopt;
    const double len2 = std::norm(r);
    const double t0 = Dot(c - a, r) / len2;
    const double t1 = Dot(d - a, r) / len2;
    const double lo = std::max(0.0, std::min(t0, t1));
    const double hi = std::min(1.0, std::max(t0, t1));
    const double band = tol / std::abs(r);
    if (hi < lo - band) return std::nullopt;
    if (hi - lo > band) {
      throw Error(ErrorCode::kOverlappingSegments,
                  "collinear segments share more than one point");
    }
    return a + 0.5 * (lo + hi) * r;
  }

  const double t = Cross(c - a, s) / denom;
  const double u = Cross(c - a, r) / denom;
  const double band_t = tol / std::abs(r);
  const double band_u = tol / std::abs(s);
  if (t < -band_t || t > 1.0 + band_t || u < -band_u || u > 1.0 + band_u) {
    return std::nullopt;
  }
  return a + t * r;
}

void RequireDistinct(std::span<const PlanarPoint> pts, double cls) {
  const double tol = cls * ToleranceScale(pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!IsFinite(pts[i])) {
      throw Error(ErrorCode::kNonFinite,
                  "point " + std::to_string(i) + " is not finite");
    }
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (std::abs(pts[i] - pts[j]) <= tol) {
        throw Error(ErrorCode::kDuplicatePoints,
                    "points " + std::to_string(i) + " and " +
                        std::to_string(j) + " coincide");
      }
    }
  }
}

QuadrilateralShape ClassifyQuadrilateral(std::span<const PlanarPoint, 4> z) {
  RequireDistinct(z);
  for (std::size_t l = 0; l < 4; ++l) {
    std::array<PlanarPoint, 3> others;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != l) others[k++] = z[i];
    if (ConvexHullMembership(z[l], others)) return NonConvex{l};
  }
  const std::vector<std::size_t> hull = ConvexHullIndices(z);
  if (hull.size() != 4) {
    throw Error(ErrorCode::kCollinearPoints,
                "four points neither convex nor containing a vertex");
  }
  ConvexOrder order;
  std::copy(hull.begin(), hull.end(), order.cyclic.begin());
  order.diagonals = {{{hull[0], hull[2]}, {hull[1], hull[3]}}};
  return order;
}

Locus ApolloniusLocus(PlanarPoint zi, PlanarPoint zj, double weight_i,
                      double weight_j) {
  if (!(weight_i > 0.0) || !(weight_j > 0.0)) {
    throw Error(ErrorCode::kInvalidWeight, "weights must be positive");
  }
  const PlanarPoint pts[] = {zi, zj};
  if (std::abs(zi - zj) <= kEpsClass * ToleranceScale(pts)) {
    throw Error(ErrorCode::kCoincidentPoints, "Apollonius locus of one point");
  }
  if (std::abs(weight_i - weight_j) <= kEpsClass * std::max(weight_i, weight_j)) {
    const PlanarPoint dir = PlanarPoint(0.0, 1.0) * (zj - zi) / std::abs(zj - zi);
    return Line{0.5 * (zi + zj), dir};
  }
  const double a = weight_i * weight_i;
  const double b = weight_j * weight_j;
  return Circle{(a * zi - b * zj) / (a - b),
                weight_i * weight_j * std::abs(zi - zj) / std::abs(a - b)};
}

std::vector<PlanarPoint> Intersect(const Circle& a, const Circle& b,
                                   double cls) {
  const PlanarPoint delta = b.center - a.center;
  const double d = std::abs(delta);
  const double tol = cls * std::max({a.radius, b.radius, d});
  if (d <= tol) return {};  // concentric
  if (d > a.radius + b.radius + tol) return {};
  if (d < std::abs(a.radius - b.radius) - tol) return {};
  const double along = (a.radius * a.radius - b.radius * b.radius + d * d) / (2.0 * d);
  const double h2 = a.radius * a.radius - along * along;
  const PlanarPoint ex = delta / d;
  const PlanarPoint foot = a.center + along * ex;
  if (h2 <= tol * tol) return {foot};
  const double h = std::sqrt(h2);
  const PlanarPoint ey = PlanarPoint(0.0, 1.0) * ex;
  return {foot + h * ey, foot - h * ey};
}

std::vector<PlanarPoint> Intersect(const Line& a, const Line& b, double cls) {
  const double denom = Cross(a.direction, b.direction);
  if (std::abs(denom) <= cls) return {};
  const double t = Cross(b.point - a.point, b.direction) / denom;
  return {a.point + t * a.direction};
}

std::vector<PlanarPoint> Intersect(const Line& a, const Circle& b, double cls) {
  const double along = Dot(b.center - a.point, a.direction);
  const PlanarPoint foot = a.point + along * a.direction;
  const double dist = std::abs(b.center - foot);
  const double tol = cls * std::max(b.radius, dist);
  const double h2 = b.radius * b.radius - dist * dist;
  if (dist > b.radius + tol) return {};
  if (h2 <= tol * tol) return {foot};
  const double h = std::sqrt(h2);
  return {foot + h * a.direction, foot - h * a.direction};
}

std::vector<PlanarPoint> Intersect(const Locus& a, const Locus& b, double cls) {
  auto on_locus = [cls](const Locus& l, PlanarPoint p) -> bool {
    if (const auto* c = std::get_if<Circle>(&l)) {
      return std::abs(std::abs(p - c->center) - c->radius) <=
             cls * std::max(c->radius, 1.0);
    }
    if (const auto* ln = std::get_if<Line>(&l)) {
      return std::abs(Cross(ln->direction, p - ln->point)) <=
             cls * std::max(std::abs(p - ln->point), 1.0);
    }
    if (const auto* d = std::get_if<DegenerateLocus>(&l)) {
      return std::abs(p - d->point) <= cls * std::max(std::abs(p), 1.0);
    }
    return false;
  };
  if (std::holds_alternative<EmptyLocus>(a) ||
      std::holds_alternative<EmptyLocus>(b)) {
    return {};
  }
  if (const auto* d = std::get_if<DegenerateLocus>(&a)) {
    return on_locus(b, d->point) ? std::vector<PlanarPoint>{d->point}
                                 : std::vector<PlanarPoint>{};
  }
  if (std::holds_alternative<DegenerateLocus>(b)) return Intersect(b, a, cls);

  const auto* ca = std::get_if<Circle>(&a);
  const auto* cb = std::get_if<Circle>(&b);
  const auto* la = std::get_if<Line>(&a);
  const auto* lb = std::get_if<Line>(&b);
  if (ca && cb) return Intersect(*ca, *cb, cls);
  if (la && lb) return Intersect(*la, *lb, cls);
  if (la && cb) return Intersect(*la, *cb, cls);
  return Intersect(*lb, *ca, cls);
}

UnimodularTripleClass ClassifyUnimodularTriple(PlanarPoint z1, PlanarPoint z2,
                                               PlanarPoint z3) {
  for (PlanarPoint z : {z1, z2, z3}) {
    if (!IsFinite(z) || std::abs(std::abs(z) - 1.0) > kEpsClass) {
      throw Error(ErrorCode::kNotUnimodular, "entry off the unit circle");
    }
  }
  if (std::abs(z1 - z2) <= kEpsClass || std::abs(z1 - z3) <= kEpsClass ||
      std::abs(z2 - z3) <= kEpsClass) {
    throw Error(ErrorCode::kDuplicatePoints, "unit triple entries coincide");
  }
  const double s = std::abs(z1 + z2 + z3);
  if (std::abs(s - 1.0) <= kEpsClass) return UnimodularTripleClass::kSumOne;
  return s < 1.0 ? UnimodularTripleClass::kSumBelowOne
                 : UnimodularTripleClass::kSumAboveOne;
}

}  // namespace planeloc
