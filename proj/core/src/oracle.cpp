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

#include "planeloc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace planeloc {

namespace {

struct Best {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

// Strictly smaller value wins; equal values keep the smaller index, so the
// reduction does not depend on how rows are split between threads.
Best Better(const Best& a, const Best& b) {
  if (b.value < a.value || (b.value == a.value && b.index < a.index)) return b;
  return a;
}

void CheckSettings(const OracleSettings& s) {
  if (s.resolution < 8 || s.resolution % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "oracle resolution must be even and at least 8");
  }
  if (s.rounds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "oracle needs at least one round");
  }
}

// Golden-section search for a convex function on [lo, hi]. Convexity alone
// makes it exact, so creases that hide descent from a grid do not matter.
template <typename F>
std::pair<double, double> GoldenSection(double lo, double hi, F&& f) {
  constexpr double kInv = 0.6180339887498949;
  constexpr int kSteps = 100;
  double a = hi - kInv * (hi - lo), b = lo + kInv * (hi - lo);
  double fa = f(a), fb = f(b);
  for (int step = 0; step < kSteps; ++step) {
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - kInv * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + kInv * (hi - lo);
      fb = f(b);
    }
  }
  return fa <= fb ? std::pair{a, fa} : std::pair{b, fb};
}

OracleResult Minimize(std::span<const PlanarPoint> points,
                      const std::function<double(PlanarPoint)>& f,
                      const OracleSettings& settings) {
  CheckSettings(settings);
  double lo_x = points[0].real(), hi_x = lo_x;
  double lo_y = points[0].imag(), hi_y = lo_y;
  for (PlanarPoint p : points) {
    lo_x = std::min(lo_x, p.real());
    hi_x = std::max(hi_x, p.real());
    lo_y = std::min(lo_y, p.imag());
    hi_y = std::max(hi_y, p.imag());
  }
  double side = 1.5 * std::max(hi_x - lo_x, hi_y - lo_y);
  if (side == 0.0) side = 1.0;

  const int res = settings.resolution;
  const std::size_t per_side = static_cast<std::size_t>(res) + 1;
  PlanarPoint center(0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y));
  double cell = side / res;

  auto at = [&](std::size_t idx) {
    const double i = static_cast<double>(idx % per_side) - res / 2;
    const double j = static_cast<double>(idx / per_side) - res / 2;
    return center + PlanarPoint(i * cell, j * cell);
  };
  auto scan_rows = [&](std::size_t row_begin, std::size_t row_end) {
    Best best;
    for (std::size_t idx = row_begin * per_side; idx < row_end * per_side; ++idx)
      best = Better(best, Best{f(at(idx)), idx});
    return best;
  };

  OracleResult out;
  for (int round = 0; round <= settings.rounds; ++round) {
    Best best;
    if (settings.parallel) {
      const std::size_t workers =
          std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
      std::vector<Best> partial(workers);
      std::vector<std::thread> threads;
      for (std::size_t t = 0; t < workers; ++t) {
        const std::size_t b = per_side * t / workers;
        const std::size_t e = per_side * (t + 1) / workers;
        threads.emplace_back([&, t, b, e] { partial[t] = scan_rows(b, e); });
      }
      for (auto& th : threads) th.join();
      for (const Best& p : partial) best = Better(best, p);
    } else {
      best = scan_rows(0, per_side);
    }
    const PlanarPoint incumbent = at(best.index);
    out.incumbents.push_back(incumbent);
    out.values.push_back(best.value);
    out.cell_sizes.push_back(cell);
    center = incumbent;
    cell *= 0.5;
  }
  out.w = out.incumbents.back();
  out.value = out.values.back();

  // Nested line searches over the first grid's box: x -> min_y f(x, y) is
  // convex, so both levels are unimodal.
  const PlanarPoint origin(0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y));
  const double half = 0.5 * side;
  double best_y = 0.0;
  auto inner = [&](double x) {
    const auto [y, v] = GoldenSection(origin.imag() - half, origin.imag() + half,
                                      [&](double t) { return f(PlanarPoint(x, t)); });
    best_y = y;
    return v;
  };
  const auto [x, v] = GoldenSection(origin.real() - half, origin.real() + half, inner);
  inner(x);
  if (v < out.value) {
    out.w = PlanarPoint(x, best_y);
    out.value = v;
  }
  return out;
}

}  // namespace

OracleResult OracleFt(const WeightedConfiguration& config,
                      const OracleSettings& settings) {
  return Minimize(config.points(),
                  [&](PlanarPoint w) { return config.Objective(w); }, settings);
}

OracleResult OracleCheby(std::span<const PlanarPoint> points,
                         std::span<const double> weights,
                         const OracleSettings& settings) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "no points");
  if (points.size() != weights.size()) {
    throw Error(ErrorCode::kLengthMismatch, "one weight per point required");
  }
  for (double a : weights) {
    if (!(a > 0.0)) throw Error(ErrorCode::kInvalidWeight, "weights must be positive");
  }
  return Minimize(
      points,
      [&](PlanarPoint w) {
        double r = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i)
          r = std::max(r, weights[i] * std::abs(points[i] - w));
        return r;
      },
      settings);
}

}  // namespace planeloc
