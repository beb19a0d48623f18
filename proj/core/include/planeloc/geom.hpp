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

// Planar primitives shared by the solvers: directed angles, hull membership,
// circumcircles, segment crossings, Apollonius loci and the unit-triple test.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "planeloc/common.hpp"

namespace planeloc {

/// An angle normalized into [0, 2*pi).
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);

  double radians() const { return radians_; }
  double cos() const;

  /// 2*pi - this, normalized (so the reverse of zero is zero).
  Angle Reversed() const { return Angle(-radians_); }

 private:
  double radians_ = 0.0;
};

struct Circle {
  PlanarPoint center;
  double radius = 0.0;
};

struct Line {
  PlanarPoint point;
  PlanarPoint direction;  // unit length
};

struct DegenerateLocus {
  PlanarPoint point;
};

struct EmptyLocus {};

using Locus = std::variant<Circle, Line, DegenerateLocus, EmptyLocus>;

/// Rotation, in the positive sense, carrying ray u->v onto ray u->w; the
/// returned theta satisfies (u - w) = lambda (u - v) e^{i theta}, lambda > 0.
/// Throws kCoincidentPoints when u == v or u == w.
Angle DirectedAngle(PlanarPoint u, PlanarPoint v, PlanarPoint w);

/// Signed doubled area of (a, b, c); positive when counter-clockwise.
double Orientation(PlanarPoint a, PlanarPoint b, PlanarPoint c);

/// True when a, b, c lie on one line within the classification band
/// (|orientation| <= cls * diam^2).
bool Collinear(PlanarPoint a, PlanarPoint b, PlanarPoint c,
               double cls = kEpsClass);

/// True when p lies on the closed segment [a, b] within the band.
bool OnSegment(PlanarPoint p, PlanarPoint a, PlanarPoint b,
               double cls = kEpsClass);

/// Indices of the convex hull vertices in counter-clockwise order, starting
/// from the lexicographically smallest (re, im) point. Points on hull edges
/// are dropped.
std::vector<std::size_t> ConvexHullIndices(std::span<const PlanarPoint> pts);

/// Convex coefficients t (t_i >= 0, sum 1, p = sum t_i pts_i) when p lies in
/// the closed convex hull of pts; nullopt otherwise. The boundary band is
/// cls * scale where scale is the diameter of pts together with p.
std::optional<std::vector<double>> ConvexHullMembership(
    PlanarPoint p, std::span<const PlanarPoint> pts, double cls = kEpsClass);

/// Euclidean distance from p to the closed convex hull of pts (zero inside).
double HullDistance(PlanarPoint p, std::span<const PlanarPoint> pts);

/// Circumcenter of a non-degenerate triangle. Throws kCollinearPoints.
PlanarPoint Circumcenter3(PlanarPoint a, PlanarPoint b, PlanarPoint c);

/// The single crossing point of closed segments [a,b] and [c,d]; nullopt when
/// they are disjoint. Throws kOverlappingSegments when they are collinear and
/// share more than one point, kCoincidentPoints when a == b or c == d.
std::optional<PlanarPoint> SegmentIntersection(PlanarPoint a, PlanarPoint b,
                                               PlanarPoint c, PlanarPoint d);

struct ConvexOrder {
  /// Hull order (counter-clockwise) as indices into the input.
  std::array<std::size_t, 4> cyclic;
  /// The two diagonals, each a pair of opposite vertices.
  std::array<std::array<std::size_t, 2>, 2> diagonals;
};

struct NonConvex {
  /// Index of the vertex lying in the hull of the other three.
  std::size_t contained;
};

using QuadrilateralShape = std::variant<ConvexOrder, NonConvex>;

/// Convex position test for four points. A collinear triple is reported as
/// NonConvex with its middle point. Throws kDuplicatePoints.
QuadrilateralShape ClassifyQuadrilateral(std::span<const PlanarPoint, 4> z);

/// The locus {w : wi |zi - w| = wj |zj - w|}: a Line (perpendicular bisector)
/// when the weights agree, a Circle otherwise. Throws kCoincidentPoints.
Locus ApolloniusLocus(PlanarPoint zi, PlanarPoint zj, double weight_i,
                      double weight_j);

/// Intersection points of two circles, 0, 1 (tangent, within the band) or 2.
std::vector<PlanarPoint> Intersect(const Circle& a, const Circle& b,
                                   double cls = kEpsClass);
std::vector<PlanarPoint> Intersect(const Line& a, const Line& b,
                                   double cls = kEpsClass);
std::vector<PlanarPoint> Intersect(const Line& a, const Circle& b,
                                   double cls = kEpsClass);
std::vector<PlanarPoint> Intersect(const Locus& a, const Locus& b,
                                   double cls = kEpsClass);

enum class UnimodularTripleClass {
  kSumOne,       // some pair lies on a line through the origin
  kSumBelowOne,  // origin inside the triangle
  kSumAboveOne,
};

/// Classifies three distinct unit complex numbers by |z1 + z2 + z3| against 1.
/// Throws kNotUnimodular, kDuplicatePoints.
UnimodularTripleClass ClassifyUnimodularTriple(PlanarPoint z1, PlanarPoint z2,
                                               PlanarPoint z3);

/// Throws kDuplicatePoints when two inputs are within cls * diameter.
void RequireDistinct(std::span<const PlanarPoint> pts, double cls = kEpsClass);

}  // namespace planeloc
