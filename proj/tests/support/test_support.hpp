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

// Seeded generators and small independent reference computations shared by
// the unit, property and acceptance tests.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace planeloc::testkit {

using Point = std::complex<double>;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  std::size_t Index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Coin() { return Index(2) == 1; }

  Point InSquare() { return {Uniform(0, 1), Uniform(0, 1)}; }
  Point InBox(double half) { return {Uniform(-half, half), Uniform(-half, half)}; }
  Point Unit() { return std::polar(1.0, Uniform(0, 2 * std::numbers::pi)); }

  /// n points in the unit square, pairwise at least `gap` apart.
  std::vector<Point> Points(std::size_t n, double gap = 1e-3) {
    std::vector<Point> out;
    while (out.size() < n) {
      const Point p = InSquare();
      if (std::all_of(out.begin(), out.end(),
                      [&](Point q) { return std::abs(p - q) >= gap; })) {
        out.push_back(p);
      }
    }
    return out;
  }

  std::vector<double> Weights(std::size_t n, double lo = 0.5, double hi = 2.0) {
    std::vector<double> out(n);
    for (double& a : out) a = Uniform(lo, hi);
    return out;
  }

  /// Positive numbers summing to one.
  std::vector<double> Simplex(std::size_t n) {
    std::vector<double> out(n);
    double s = 0.0;
    for (double& t : out) s += (t = Uniform(0.05, 1.0));
    for (double& t : out) t /= s;
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double Cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

/// Circumcenter from the two perpendicular-bisector equations, by Cramer.
inline std::optional<Point> ReferenceCircumcenter(Point a, Point b, Point c) {
  // 2 (b - a) . w = |b|^2 - |a|^2, same for c.
  const double a11 = 2 * (b.real() - a.real()), a12 = 2 * (b.imag() - a.imag());
  const double a21 = 2 * (c.real() - a.real()), a22 = 2 * (c.imag() - a.imag());
  const double r1 = std::norm(b) - std::norm(a), r2 = std::norm(c) - std::norm(a);
  const double det = a11 * a22 - a12 * a21;
  if (det == 0.0) return std::nullopt;
  return Point((r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det);
}

/// Is p inside the closed triangle abc (either orientation)?
inline bool InTriangle(Point p, Point a, Point b, Point c, double eps = 0.0) {
  const double d1 = Cross(b - a, p - a), d2 = Cross(c - b, p - b), d3 = Cross(a - c, p - c);
  const bool neg = d1 < -eps || d2 < -eps || d3 < -eps;
  const bool pos = d1 > eps || d2 > eps || d3 > eps;
  return !(neg && pos);
}

inline double DistanceSum(const std::vector<Point>& z, const std::vector<double>& a, Point w) {
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += a[i] * std::abs(z[i] - w);
  return s;
}

inline double MaxWeighted(const std::vector<Point>& z, const std::vector<double>& a, Point w) {
  double r = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) r = std::max(r, a[i] * std::abs(z[i] - w));
  return r;
}

/// |sum_{z_i != w} a_i conj(z_i - w)/|z_i - w||, the unbalanced pull at w,
/// with points within `band` of w skipped; also returns their weight.
inline std::pair<double, double> Pull(const std::vector<Point>& z,
                                      const std::vector<double>& a, Point w,
                                      double band) {
  Point s = 0.0;
  double slack = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double d = std::abs(z[i] - w);
    if (d <= band) slack += a[i];
    else s += a[i] * std::conj(z[i] - w) / d;
  }
  return {std::abs(s), slack};
}

inline double Diam(const std::vector<Point>& z) {
  double d = 0.0;
  for (Point a : z)
    for (Point b : z) d = std::max(d, std::abs(a - b));
  return d;
}

inline double DistanceToSegment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / std::norm(ab), 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

/// Minimal XML well-formedness check: balanced tags, quoted attributes, one
/// root element. Enough to catch a broken writer.
inline bool WellFormedXml(std::string_view doc, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  std::vector<std::string> stack;
  int roots = 0;
  std::size_t i = 0;
  while (i < doc.size()) {
    if (doc[i] != '<') {
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(doc[i]))) {
        return fail("text outside the root element");
      }
      ++i;
      continue;
    }
    const std::size_t close = doc.find('>', i);
    if (close == std::string_view::npos) return fail("unterminated tag");
    std::string_view tag = doc.substr(i + 1, close - i - 1);
    i = close + 1;
    if (tag.starts_with("?") || tag.starts_with("!")) continue;
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return fail("unbalanced quotes");
    if (tag.starts_with("/")) {
      const std::string name(tag.substr(1));
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.ends_with("/");
    const std::string name(tag.substr(0, tag.find_first_of(" \t\n/")));
    if (name.empty()) return fail("empty tag name");
    if (stack.empty()) ++roots;
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  if (roots != 1) return fail("expected one root element");
  return true;
}

inline int CountElements(std::string_view doc, std::string_view name) {
  int n = 0;
  const std::string open = "<" + std::string(name);
  for (std::size_t pos = doc.find(open); pos != std::string_view::npos;
       pos = doc.find(open, pos + 1)) {
    const char next = doc[pos + open.size()];
    if (next == ' ' || next == '>' || next == '/') ++n;
  }
  return n;
}

/// Value of attribute `attr` on the first `name` element.
inline std::optional<std::string> Attribute(std::string_view doc, std::string_view name,
                                            std::string_view attr) {
  const std::size_t start = doc.find("<" + std::string(name) + " ");
  if (start == std::string_view::npos) return std::nullopt;
  const std::size_t end = doc.find('>', start);
  const std::string_view tag = doc.substr(start, end - start);
  const std::string key = " " + std::string(attr) + "=\"";
  const std::size_t k = tag.find(key);
  if (k == std::string_view::npos) return std::nullopt;
  const std::size_t v = k + key.size();
  return std::string(tag.substr(v, tag.find('"', v) - v));
}

}  // namespace planeloc::testkit
