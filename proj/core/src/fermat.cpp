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

#include "planeloc/fermat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace planeloc {

namespace {

double Cross(PlanarPoint a, PlanarPoint b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double Dot(PlanarPoint a, PlanarPoint b) {
  return a.real() * b.real() + a.imag() * b.imag();
}

double WeightedDistanceSum(std::span<const PlanarPoint> points,
                           std::span<const double> weights, PlanarPoint w) {
  double s = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    s += weights[i] * std::abs(points[i] - w);
  return s;
}

FtSolveResult MakeResult(const WeightedConfiguration& config, FtSolution sol,
                         PlanarPoint certify_at, FtCaseTag tag) {
  FtSolveResult r;
  r.solution = sol;
  r.objective = config.Objective(certify_at);
  r.tag = tag;
  r.certificate = CertifyFermat(config, certify_at);
  return r;
}

void RequirePositiveWeights(std::span<const double> weights) {
  for (double a : weights) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw Error(ErrorCode::kInvalidWeight, "weights must be positive and finite");
    }
  }
}

// Center of the circle through a and b from whose arc on the side of `side`
// the chord [a, b] is seen under the angle psi in (0, pi).
PlanarPoint InscribedArcCenter(PlanarPoint a, PlanarPoint b, PlanarPoint side,
                               double psi) {
  const PlanarPoint chord = b - a;
  PlanarPoint normal = PlanarPoint(0.0, 1.0) * chord / std::abs(chord);
  if (Orientation(a, b, side) < 0.0) normal = -normal;
  const double half = 0.5 * std::abs(chord);
  return 0.5 * (a + b) + normal * (half * std::cos(psi) / std::sin(psi));
}

void RequireInteriorOptimum(const WeightedConfiguration& config, PlanarPoint w,
                            const char* what) {
  if (config.CoincidentIndex(w)) {
    throw Error(ErrorCode::kCertificatePreconditionFailed,
                std::string(what) + ": w must differ from every point");
  }
  if (!CertifyFermat(config, w).pass()) {
    throw Error(ErrorCode::kCertificatePreconditionFailed,
                std::string(what) + ": w is not certified optimal");
  }
}

}  // namespace

WeightedConfiguration::WeightedConfiguration(std::vector<PlanarPoint> points,
                                             std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) {
    throw Error(ErrorCode::kEmptyInput, "configuration needs at least one point");
  }
  if (points_.size() != weights_.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(points_.size()) + " points but " +
                    std::to_string(weights_.size()) + " weights");
  }
  RequirePositiveWeights(weights_);
  RequireDistinct(points_);
  diameter_ = planeloc::Diameter(points_);
  scale_ = ToleranceScale(points_);
  total_weight_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

WeightedConfiguration::WeightedConfiguration(std::vector<PlanarPoint> points)
    : WeightedConfiguration(points, std::vector<double>(points.size(), 1.0)) {}

double WeightedConfiguration::Objective(PlanarPoint w) const {
  return WeightedDistanceSum(points_, weights_, w);
}

std::optional<std::size_t> WeightedConfiguration::CoincidentIndex(
    PlanarPoint w, double cls) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (std::abs(points_[i] - w) <= cls * scale_) return i;
  return std::nullopt;
}

const char* ToString(FtCase c) {
  switch (c) {
    case FtCase::kDominantWeight: return "DominantWeight";
    case FtCase::kSegmentOfSolutions: return "SegmentOfSolutions";
    case FtCase::kVertexCase: return "VertexCase";
    case FtCase::kInteriorCase: return "InteriorCase";
    case FtCase::kDiagonalIntersection: return "DiagonalIntersection";
    case FtCase::kHullVertex: return "HullVertex";
    case FtCase::kIterative: return "Iterative";
  }
  return "Unknown";
}

PlanarPoint FtSolveResult::Location() const {
  if (const auto* p = std::get_if<PointSolution>(&solution)) return p->w;
  return std::get<SegmentSolution>(solution).a;
}

FtCertificate CertifyFermat(std::span<const PlanarPoint> points,
                            std::span<const double> weights, PlanarPoint w,
                            double rel) {
  const double band = kEpsClass * ToleranceScale(points);
  std::vector<PlanarPoint> x(points.size());
  std::vector<PlanarPoint> y(points.size());
  std::vector<bool> is_zero(points.size());
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    x[i] = weights[i] * (points[i] - w);
    y[i] = weights[i];
    is_zero[i] = std::abs(points[i] - w) <= band;
    total += weights[i];
  }
  FtCertificate cert;
  cert.functional =
      L1Certificate(SeqVector(std::move(x)), SeqVector(std::move(y)), is_zero,
                    rel * total);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_zero[i]) continue;
    cert.vertex = i;
    cert.gamma = -cert.functional.residual_vector / weights[i];
    break;
  }
  return cert;
}

FtCertificate CertifyFermat(const WeightedConfiguration& config, PlanarPoint w,
                            double rel) {
  return CertifyFermat(config.points(), config.weights(), w, rel);
}

FtSolveResult SolveFt3Weighted(std::span<const PlanarPoint, 3> z,
                               std::span<const double, 3> weights) {
  const WeightedConfiguration config({z.begin(), z.end()},
                                     {weights.begin(), weights.end()});
  const double band = kEpsClass * config.TotalWeight();
  auto others = [](std::size_t i) {
    return std::array<std::size_t, 2>{i == 0 ? 1u : 0u, i == 2 ? 1u : 2u};
  };

  // A weight at least the sum of the other two pins the optimum to its point.
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [j, k] = others(i);
    if (weights[i] > weights[j] + weights[k] + band) {
      return MakeResult(config, PointSolution{z[i]}, z[i],
                        {FtCase::kDominantWeight, i, {}, {}});
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [j, k] = others(i);
    if (std::abs(weights[i] - (weights[j] + weights[k])) > band) continue;
    std::optional<PlanarPoint> far_end;
    if (OnSegment(z[j], z[i], z[k])) far_end = z[j];
    else if (OnSegment(z[k], z[i], z[j])) far_end = z[k];
    if (!far_end) {
      return MakeResult(config, PointSolution{z[i]}, z[i],
                        {FtCase::kDominantWeight, i, {}, {}});
    }
    FtSolveResult r = MakeResult(config, SegmentSolution{z[i], *far_end},
                                 0.5 * (z[i] + *far_end),
                                 {FtCase::kSegmentOfSolutions, i, {}, {}});
    return r;
  }

  // Triangle weights: a vertex whose angle is wide enough is the optimum.
  std::optional<std::size_t> best_vertex;
  double best_margin = -std::numeric_limits<double>::infinity();
  std::array<Angle, 3> vertex_angle;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [j, k] = others(i);
    vertex_angle[i] = DirectedAngle(z[i], z[j], z[k]);
    const double threshold =
        (weights[i] * weights[i] - weights[j] * weights[j] -
         weights[k] * weights[k]) /
        (2.0 * weights[j] * weights[k]);
    const double margin = threshold - vertex_angle[i].cos();
    if (margin >= 0.0 && margin > best_margin) {
      best_margin = margin;
      best_vertex = i;
    }
  }
  if (best_vertex) {
    const std::size_t i = *best_vertex;
    FtSolveResult r = MakeResult(config, PointSolution{z[i]}, z[i],
                                 {FtCase::kVertexCase, i, vertex_angle[i], {}});
    if (r.certificate.pass()) return r;
  }

  // Interior point: the second intersection of the two circles through the
  // pivot z_p from which [z_p, z_q] and [z_p, z_r] subtend the force-balance
  // angles. Pivoting on the vertex whose angle is furthest below its
  // threshold keeps the circles well apart.
  std::array<std::size_t, 3> pivots{0, 1, 2};
  std::array<double, 3> slack_at{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [j, k] = others(i);
    slack_at[i] = vertex_angle[i].cos() -
                  (weights[i] * weights[i] - weights[j] * weights[j] -
                   weights[k] * weights[k]) /
                      (2.0 * weights[j] * weights[k]);
  }
  std::stable_sort(pivots.begin(), pivots.end(), [&](std::size_t a, std::size_t b) {
    return slack_at[a] > slack_at[b];
  });
  for (std::size_t p : pivots) {
    const auto [q, r] = others(p);
    const double ap = weights[p], aq = weights[q], ar = weights[r];
    const double psi_q = std::acos(
        std::clamp((ar * ar - ap * ap - aq * aq) / (2.0 * ap * aq), -1.0, 1.0));
    const double psi_r = std::acos(
        std::clamp((aq * aq - ap * ap - ar * ar) / (2.0 * ap * ar), -1.0, 1.0));
    const PlanarPoint c1 = InscribedArcCenter(z[p], z[q], z[r], psi_q);
    const PlanarPoint c2 = InscribedArcCenter(z[p], z[r], z[q], psi_r);
    const PlanarPoint axis = c2 - c1;
    if (!(std::abs(axis) > kEpsClass * config.Scale())) continue;
    const PlanarPoint e = axis / std::abs(axis);
    const PlanarPoint w = c1 + e * e * std::conj(z[p] - c1);
    if (!IsFinite(w) || config.CoincidentIndex(w)) continue;
    FtSolveResult res =
        MakeResult(config, PointSolution{w}, w,
                   {FtCase::kInteriorCase, std::nullopt,
                    DirectedAngle(w, z[0], z[1]), DirectedAngle(w, z[0], z[2])});
    if (res.certificate.pass()) return res;
  }

  // Near-tangent circles or a boundary vertex lost to rounding.
  for (std::size_t i = 0; i < 3; ++i) {
    if (CertifyFermat(config, z[i]).pass()) {
      return MakeResult(config, PointSolution{z[i]}, z[i],
                        {FtCase::kVertexCase, i, vertex_angle[i], {}});
    }
  }
  return SolveFtN(config);
}

FtSolveResult SolveFt4(std::span<const PlanarPoint, 4> z) {
  const WeightedConfiguration config({z.begin(), z.end()});
  const QuadrilateralShape shape = ClassifyQuadrilateral(z);
  if (const auto* nc = std::get_if<NonConvex>(&shape)) {
    const PlanarPoint w = z[nc->contained];
    FtSolveResult r = MakeResult(config, PointSolution{w}, w,
                                 {FtCase::kHullVertex, nc->contained, {}, {}});
    if (r.certificate.pass()) return r;
  } else {
    const auto& order = std::get<ConvexOrder>(shape);
    const auto& d = order.diagonals;
    const auto w = SegmentIntersection(z[d[0][0]], z[d[0][1]], z[d[1][0]],
                                       z[d[1][1]]);
    if (w) {
      FtSolveResult r = MakeResult(config, PointSolution{*w}, *w,
                                   {FtCase::kDiagonalIntersection, {}, {}, {}});
      if (r.certificate.pass()) return r;
    }
  }
  return SolveFtN(config);
}

FtSolveResult SolveFtN(const WeightedConfiguration& config,
                       const IterativeOptions& options) {
  if (!(options.tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const std::size_t n = config.size();
  const auto pts = config.points();
  const auto wts = config.weights();

  auto finish = [&](PlanarPoint w, FtCertificate cert, int iters) {
    FtSolveResult r;
    r.solution = PointSolution{w};
    r.objective = config.Objective(w);
    r.tag.kind = FtCase::kIterative;
    r.tag.index = cert.vertex;
    r.certificate = std::move(cert);
    r.iterations = iters;
    return r;
  };

  // A point is optimal iff the pull of the others does not exceed its weight.
  {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n; ++i) {
      if (!CertifyFermat(config, pts[i], options.tol).pass()) continue;
      if (!best || config.Objective(pts[i]) < config.Objective(pts[*best])) best = i;
    }
    if (best) return finish(pts[*best], CertifyFermat(config, pts[*best], options.tol), 0);
  }

  PlanarPoint w = 0.0;
  for (std::size_t i = 0; i < n; ++i) w += wts[i] * pts[i];
  w /= config.TotalWeight();

  // Near the optimum the objective stops resolving progress (it moves with
  // the square of the residual), so iterates are ranked by certificate excess.
  auto excess = [](const FtCertificate& c) { return c.residual() - c.slack(); };
  PlanarPoint best_w = w;
  double best_excess = excess(CertifyFermat(config, w, options.tol));

  for (int iter = 1; iter <= options.max_iter; ++iter) {
    FtCertificate cert = CertifyFermat(config, w, options.tol);
    if (cert.pass()) return finish(w, std::move(cert), iter - 1);
    const double f = config.Objective(w);

    if (cert.vertex) {
      // Step off a non-optimal vertex along the steepest descent direction.
      const std::size_t v = *cert.vertex;
      const PlanarPoint pull = cert.functional.residual_vector;
      const PlanarPoint dir = std::conj(pull) / std::abs(pull);
      double curvature = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != v) curvature += wts[j] / std::abs(pts[j] - pts[v]);
      double step = (std::abs(pull) - wts[v]) / curvature;
      const double f_vertex = config.Objective(pts[v]);
      PlanarPoint next = pts[v] + step * dir;
      for (int halving = 0; halving < 60 && config.Objective(next) >= f_vertex;
           ++halving) {
        step *= 0.5;
        next = pts[v] + step * dir;
      }
      w = next;
    } else {
      // Weiszfeld update, plus a Newton step kept only if it does better.
      PlanarPoint num = 0.0;
      double den = 0.0;
      double hxx = 0.0, hxy = 0.0, hyy = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const PlanarPoint diff = pts[j] - w;
        const double d = std::abs(diff);
        const double c = wts[j] / d;
        num += c * pts[j];
        den += c;
        const PlanarPoint u = diff / d;
        hxx += c * (1.0 - u.real() * u.real());
        hxy -= c * u.real() * u.imag();
        hyy += c * (1.0 - u.imag() * u.imag());
      }
      std::vector<PlanarPoint> candidates{num / den};
      const PlanarPoint descent = std::conj(cert.functional.residual_vector);
      const double det = hxx * hyy - hxy * hxy;
      if (det > 1e-14 * (hxx + hyy) * (hxx + hyy)) {
        const PlanarPoint newton((hyy * descent.real() - hxy * descent.imag()) / det,
                                 (hxx * descent.imag() - hxy * descent.real()) / det);
        if (IsFinite(w + newton)) candidates.push_back(w + newton);
      }
      // Prefer a strict objective decrease; otherwise a smaller excess.
      std::optional<PlanarPoint> next;
      double f_next = f;
      for (PlanarPoint c : candidates) {
        const double fc = config.Objective(c);
        if (fc < f_next) {
          next = c;
          f_next = fc;
        }
      }
      if (!next) {
        double e_next = excess(cert);
        for (PlanarPoint c : candidates) {
          const double fc = config.Objective(c);
          if (fc > f + 4 * std::numeric_limits<double>::epsilon() * f) continue;
          const double ec = excess(CertifyFermat(config, c, options.tol));
          if (ec < e_next) {
            next = c;
            e_next = ec;
          }
        }
      }
      if (!next || *next == w) break;  // no representable progress
      w = *next;
    }
    const double e = excess(CertifyFermat(config, w, options.tol));
    if (e < best_excess) {
      best_excess = e;
      best_w = w;
    }
  }
  FtCertificate cert = CertifyFermat(config, best_w, options.tol);
  if (cert.pass()) return finish(best_w, std::move(cert), options.max_iter);
  throw MaxIterationsExceeded(best_w, std::move(cert));
}

FtSolveResult SolveFermat(const WeightedConfiguration& config,
                          const IterativeOptions& options) {
  const auto pts = config.points();
  const auto wts = config.weights();
  if (config.size() == 3) {
    return SolveFt3Weighted(std::span<const PlanarPoint, 3>(pts.data(), 3),
                            std::span<const double, 3>(wts.data(), 3));
  }
  const bool equal_weights =
      std::all_of(wts.begin(), wts.end(), [&](double a) { return a == wts[0]; });
  if (config.size() == 4 && equal_weights) {
    FtSolveResult r = SolveFt4(std::span<const PlanarPoint, 4>(pts.data(), 4));
    r.objective = config.Objective(r.Location());
    r.certificate = CertifyFermat(config, r.Location());
    return r;
  }
  return SolveFtN(config, options);
}

bool AdditionPreserves(const WeightedConfiguration& config, PlanarPoint w,
                       PlanarPoint z_new, double weight_new) {
  RequireInteriorOptimum(config, w, "addition");
  if (!(weight_new > 0.0)) {
    throw Error(ErrorCode::kInvalidWeight, "new weight must be positive");
  }
  std::vector<PlanarPoint> pts(config.points().begin(), config.points().end());
  std::vector<double> wts(config.weights().begin(), config.weights().end());
  pts.push_back(z_new);
  wts.push_back(weight_new);
  return CertifyFermat(pts, wts, w).pass();
}

bool OnClosedRay(PlanarPoint w, PlanarPoint through, PlanarPoint s, double cls) {
  const PlanarPoint d = through - w;
  const PlanarPoint v = s - w;
  const double scale = std::max(std::abs(d), std::abs(v));
  if (std::abs(v) <= cls * scale) return true;
  return std::abs(Cross(d, v)) <= cls * std::abs(d) * std::abs(v) &&
         Dot(d, v) >= 0.0;
}

bool ReplacementPreserves(const WeightedConfiguration& config, PlanarPoint w,
                          std::size_t index, PlanarPoint s) {
  RequireInteriorOptimum(config, w, "replacement");
  if (index >= config.size()) {
    throw Error(ErrorCode::kInvalidArgument, "replacement index out of range");
  }
  std::vector<PlanarPoint> pts(config.points().begin(), config.points().end());
  pts[index] = s;
  return CertifyFermat(pts, config.weights(), w).pass();
}

bool DecompositionEquivalence(const WeightedConfiguration& a, PlanarPoint w,
                              const WeightedConfiguration& b) {
  RequireInteriorOptimum(a, w, "decomposition");
  std::vector<PlanarPoint> pts(a.points().begin(), a.points().end());
  std::vector<double> wts(a.weights().begin(), a.weights().end());
  pts.insert(pts.end(), b.points().begin(), b.points().end());
  wts.insert(wts.end(), b.weights().begin(), b.weights().end());
  return CertifyFermat(pts, wts, w).pass();
}

WeightedConfiguration ScaledConfiguration(const WeightedConfiguration& config,
                                          PlanarPoint w,
                                          std::span<const double> scales) {
  if (scales.size() != config.size()) {
    throw Error(ErrorCode::kLengthMismatch, "one scale per point required");
  }
  const bool all_positive =
      std::all_of(scales.begin(), scales.end(), [](double c) { return c > 0.0; });
  const bool all_negative =
      std::all_of(scales.begin(), scales.end(), [](double c) { return c < 0.0; });
  if (!all_positive && !all_negative) {
    throw Error(ErrorCode::kMixedSigns, "scales must be all positive or all negative");
  }
  RequireInteriorOptimum(config, w, "scaling");
  std::vector<PlanarPoint> pts(config.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    pts[i] = w + scales[i] * (config.point(i) - w);
  return WeightedConfiguration(std::move(pts),
                               {config.weights().begin(), config.weights().end()});
}

ExtensionResult ExtendAtVertex(const WeightedConfiguration& config,
                               PlanarPoint w, double weight_new) {
  const auto vertex = config.CoincidentIndex(w);
  const FtCertificate cert = CertifyFermat(config, w);
  if (!vertex || !cert.pass() || !cert.gamma) {
    throw Error(ErrorCode::kVertexPreconditionFailed,
                "w must be a certified optimum at a configuration point");
  }
  if (!(weight_new > 0.0)) {
    throw Error(ErrorCode::kInvalidWeight, "new weight must be positive");
  }
  const double a0 = config.weight(*vertex);
  if (weight_new > 2.0 * a0) return ExtensionImpossible{};
  if (weight_new > a0) return ExtensionUndetermined{};

  // Find delta with |delta| <= 1 and |delta - gamma| = weight_new / a0; the new
  // point then lies in direction conj(gamma - delta) from w.
  const PlanarPoint gamma = *cert.gamma;
  const double ratio = weight_new / a0;
  const double g = std::abs(gamma);
  const PlanarPoint towards_origin =
      g > 1e-15 ? -gamma / g : PlanarPoint(-1.0, 0.0);

  std::vector<PlanarPoint> pts(config.points().begin(), config.points().end());
  std::vector<double> wts(config.weights().begin(), config.weights().end());
  pts.push_back(0.0);
  wts.push_back(weight_new);

  const PlanarPoint base = config.point(*vertex);
  for (int turn = 0; turn < 64; ++turn) {
    // Rotations 0, +t, -t, +2t, ... of the offset away from gamma.
    const double psi = ((turn + 1) / 2) * (std::numbers::pi / 32.0) *
                       (turn % 2 == 0 ? 1.0 : -1.0);
    const PlanarPoint delta = gamma + ratio * towards_origin * std::polar(1.0, psi);
    if (std::abs(delta) > 1.0 + 1e-12) continue;
    const PlanarPoint dir = std::conj(gamma - delta) / std::abs(gamma - delta);
    for (double reach : {1.0, 0.5, 2.0}) {
      const PlanarPoint z_new = base + reach * config.Scale() * dir;
      pts.back() = z_new;
      bool collides = false;
      for (std::size_t i = 0; i < config.size(); ++i)
        collides |= std::abs(config.point(i) - z_new) <= kEpsClass * config.Scale();
      if (collides) continue;
      if (CertifyFermat(pts, wts, w).pass()) return ExtensionPoint{z_new};
    }
  }
  return ExtensionUndetermined{};
}

}  // namespace planeloc
