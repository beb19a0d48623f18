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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/test_support.hpp"

namespace {

using namespace planeloc;
using planeloc::testkit::Gen;

constexpr double kPi = std::numbers::pi;
const PlanarPoint I(0.0, 1.0);

PlanarPoint E(double t) { return std::polar(1.0, t); }

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// ||x + s y|| >= ||x|| for s on a polar grid of the disc |s| <= 2||x||/||y||.
bool MinimumAtZero(const SeqVector& x, const SeqVector& y, NormSpace space) {
  auto norm = [&](const SeqVector& v) {
    return space == NormSpace::kL1 ? v.NormL1() : v.NormLInf();
  };
  const double nx = norm(x), ny = norm(y);
  const double reach = 2.0 * nx / ny;
  for (int ring = 1; ring <= 8; ++ring) {
    for (int k = 0; k < 8; ++k) {
      const PlanarPoint s = std::polar(reach * ring / 8.0, 2 * kPi * k / 8.0);
      if (norm(x.Plus(s, y)) < nx - kEpsRel * nx) return false;
    }
  }
  return true;
}

// Unit directions for the two-slot family in l1^3: angle between them obeys
// cos <= (a_m^2 - a_i^2 - a_j^2) / (2 a_i a_j).
double PairBound(const std::array<double, 3>& a, std::size_t i, std::size_t j) {
  const std::size_t m = 3 - i - j;
  return (a[m] * a[m] - a[i] * a[i] - a[j] * a[j]) / (2 * a[i] * a[j]);
}

std::array<double, 3> TriangleWeights(Gen& g) {
  for (;;) {
    std::array<double, 3> a{g.Uniform(0.5, 2), g.Uniform(0.5, 2), g.Uniform(0.5, 2)};
    const double s = a[0] + a[1] + a[2];
    if (std::all_of(a.begin(), a.end(), [&](double x) { return x < s - x - 1e-3 * s; })) {
      return a;
    }
  }
}

}  // namespace

TEST(SeqVector, Norms) {
  const SeqVector v{3.0, -4.0 * I, 1.0 + I};
  EXPECT_DOUBLE_EQ(v.NormL1(), 7.0 + std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(v.NormLInf(), 4.0);
  EXPECT_EQ(v.Plus(2.0, v)[0], 9.0);
}

TEST(L1Orthogonality, Examples) {
  const SeqVector ones{1.0, 1.0, 1.0};
  const auto c = IsBjOrthogonalL1(SeqVector{1.0, -1.0, 0.0}, ones);
  ASSERT_TRUE(c);
  EXPECT_NEAR(std::abs(c->coefficients[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c->coefficients[1] + 1.0), 0.0, 1e-15);
  EXPECT_LE(std::abs(c->coefficients[2]), 1.0);
  EXPECT_NEAR(c->Balance(ones), 0.0, 1e-15);

  EXPECT_FALSE(IsBjOrthogonalL1(SeqVector{1.0, 1.0, 1.0}, ones));

  Gen g(3);
  for (int k = 0; k < 100; ++k) {
    const SeqVector x{g.Uniform(0.1, 5), g.Uniform(0.1, 5) * E(2 * kPi / 3),
                      g.Uniform(0.1, 5) * E(4 * kPi / 3)};
    EXPECT_TRUE(IsBjOrthogonalL1(x, ones));
  }
}

TEST(L1Orthogonality, CertificateIsASupportingFunctional) {
  Gen g(5);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t n = 2 + g.Index(5);
    std::vector<PlanarPoint> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = g.Coin() && g.Coin() ? 0.0 : g.InBox(2);
      ys[i] = g.InBox(2);
    }
    if (std::all_of(xs.begin(), xs.end(), [](PlanarPoint p) { return p == 0.0; })) continue;
    const SeqVector x(xs), y(ys);
    const auto cert = IsBjOrthogonalL1(x, y);
    if (!cert) continue;
    PlanarPoint fx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_LE(std::abs(cert->coefficients[i]), 1.0 + 1e-12);
      fx += cert->coefficients[i] * x[i];
    }
    EXPECT_NEAR(fx.real(), x.NormL1(), 1e-12 * x.NormL1());
    EXPECT_NEAR(fx.imag(), 0.0, 1e-12 * x.NormL1());
    EXPECT_LE(cert->Balance(y), cert->tolerance + 1e-15);
    EXPECT_TRUE(MinimumAtZero(x, y, NormSpace::kL1));
  }
}

TEST(L1Orthogonality, Errors) {
  EXPECT_EQ(CodeOf([] { IsBjOrthogonalL1(SeqVector{0.0, 0.0}, SeqVector{1.0, 1.0}); }),
            ErrorCode::kZeroVector);
  EXPECT_EQ(CodeOf([] { IsBjOrthogonalL1(SeqVector{1.0}, SeqVector{1.0, 1.0}); }),
            ErrorCode::kLengthMismatch);
}

TEST(LInfOrthogonality, Examples) {
  const SeqVector ones3{1.0, 1.0, 1.0};
  const auto a = IsBjOrthogonalLInf(SeqVector{1.0, -1.0, 0.5}, ones3);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->support, (std::vector<std::size_t>{0, 1}));
  EXPECT_NEAR(a->convex_weights[0], 0.5, 1e-12);
  EXPECT_NEAR(a->convex_weights[1], 0.5, 1e-12);
  EXPECT_EQ(a->convex_weights[2], 0.0);

  EXPECT_FALSE(IsBjOrthogonalLInf(SeqVector{1.0, 0.5, 0.5}, ones3));

  const SeqVector x{2.0, 2.0 * E(2 * kPi / 3), 2.0 * E(4 * kPi / 3), 1.0};
  const auto b = IsBjOrthogonalLInf(x, SeqVector{1.0, 1.0, 1.0, 1.0});
  ASSERT_TRUE(b);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(b->convex_weights[i], 1.0 / 3, 1e-12);
  EXPECT_EQ(b->convex_weights[3], 0.0);
}

TEST(LInfOrthogonality, ConvexWeightsCancel) {
  Gen g(7);
  int hits = 0;
  for (int k = 0; k < 3000; ++k) {
    const std::size_t n = 2 + g.Index(6);
    std::vector<PlanarPoint> xs(n), ys(n);
    const double top = g.Uniform(0.5, 2);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = (g.Coin() ? top : g.Uniform(0.0, top * 0.9)) * g.Unit();
      ys[i] = g.Coin() ? PlanarPoint(1.0) : g.InBox(2);
    }
    const SeqVector x(xs), y(ys);
    const auto cert = IsBjOrthogonalLInf(x, y);
    if (!cert) continue;
    ++hits;
    double sum = 0.0;
    PlanarPoint balance = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = cert->convex_weights[i];
      EXPECT_GE(t, 0.0);
      sum += t;
      if (t > 0.0) {
        EXPECT_NEAR(std::abs(x[i]), x.NormLInf(), kEpsClass * x.NormLInf());
        balance += t * std::conj(x[i]) / std::abs(x[i]) * y[i];
      }
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_LT(std::abs(balance), 1e-7 * y.NormLInf());
    EXPECT_TRUE(MinimumAtZero(x, y, NormSpace::kLInf));
  }
  EXPECT_GT(hits, 100);
}

TEST(LInfOrthogonality, ScalingDoesNotChangeTheAnswer) {
  Gen g(9);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t n = 2 + g.Index(4);
    std::vector<PlanarPoint> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = g.InBox(2);
      ys[i] = g.InBox(2);
    }
    if (k % 3 == 0) xs[1] = -xs[0] * E(g.Uniform(-1e-3, 1e-3));
    const SeqVector x(xs), y(ys);
    const PlanarPoint lambda = g.Unit() * g.Uniform(0.1, 10);
    const PlanarPoint mu = g.Unit() * g.Uniform(0.1, 10);
    EXPECT_EQ(IsBjOrthogonalL1(x, y).has_value(),
              IsBjOrthogonalL1(x.Scaled(lambda), y.Scaled(mu)).has_value());
    EXPECT_EQ(IsBjOrthogonalLInf(x, y).has_value(),
              IsBjOrthogonalLInf(x.Scaled(lambda), y.Scaled(mu)).has_value());
  }
}

TEST(Smoothness, Order) {
  EXPECT_EQ(SmoothnessOrderLInf(SeqVector{3.0, 1.0, 2.0}), 1);
  EXPECT_EQ(SmoothnessOrderLInf(SeqVector{1.0, -1.0, I}), 3);
  EXPECT_EQ(SmoothnessOrderLInf(SeqVector{2.0, 2.0 * E(kPi / 7), 1.999999999}), 3);
  EXPECT_EQ(SmoothnessOrderLInf(SeqVector{2.0, 2.0 * E(kPi / 7), 1.99}), 2);
  EXPECT_EQ(CodeOf([] { SmoothnessOrderLInf(SeqVector{0.0, 0.0}); }), ErrorCode::kZeroVector);

  Gen g(13);
  for (int k = 0; k < 1000; ++k) {
    std::vector<PlanarPoint> xs(4);
    for (auto& v : xs) v = g.InBox(1);
    const SeqVector x(xs);
    int top = 0;
    for (PlanarPoint v : xs) top += std::abs(v) == x.NormLInf();
    EXPECT_EQ(SmoothnessOrderLInf(x) == 1, top == 1);
  }
}

TEST(Classify3, Examples) {
  const std::array<double, 3> unit{1.0, 1.0, 1.0};
  const auto t1 = ClassifyL1Orthogonal3(SeqVector{E(0.7), 0.0, 0.0}, unit);
  EXPECT_EQ(t1.tag, OrthogonalityTag::kI);
  EXPECT_EQ(t1.variant, 'a');

  const auto t2 = ClassifyL1Orthogonal3(SeqVector{0.4, 0.6 * E(2 * kPi / 3), 0.0}, unit);
  EXPECT_EQ(t2.tag, OrthogonalityTag::kII);
  EXPECT_EQ(t2.variant, 'a');
  ASSERT_TRUE(t2.theta);
  EXPECT_LE(t2.theta->cos(), -0.5 + 1e-12);

  const auto t3 = ClassifyL1Orthogonal3(
      SeqVector{1.0 / 3, E(2 * kPi / 3) / 3.0, E(4 * kPi / 3) / 3.0}, unit);
  EXPECT_EQ(t3.tag, OrthogonalityTag::kIII);
  ASSERT_TRUE(t3.theta && t3.phi);
  EXPECT_NEAR(t3.theta->cos(), -0.5, 1e-12);
  EXPECT_NEAR(t3.phi->cos(), -0.5, 1e-12);
  const double a = t3.theta->radians(), b = t3.phi->radians();
  EXPECT_NEAR(std::min(a, b), 2 * kPi / 3, 1e-12);
  EXPECT_NEAR(std::max(a, b), 4 * kPi / 3, 1e-12);
}

TEST(Classify3, Errors) {
  const std::array<double, 3> unit{1.0, 1.0, 1.0};
  EXPECT_EQ(CodeOf([&] { ClassifyL1Orthogonal3(SeqVector{1.0, 1.0, 0.0}, unit); }),
            ErrorCode::kNotOrthogonal);
  const std::array<double, 3> heavy{1.0, 1.0, 3.0};
  EXPECT_EQ(CodeOf([&] { ClassifyL1Orthogonal3(SeqVector{1.0, 0.0, 0.0}, heavy); }),
            ErrorCode::kWeightConditionViolated);
}

TEST(Classify3, ParametricFamiliesRoundTrip) {
  Gen g(17);
  for (int k = 0; k < 3000; ++k) {
    const auto a = TriangleWeights(g);
    const double lambda = g.Uniform(0.1, 10);
    const SeqVector alpha{a[0], a[1], a[2]};
    std::vector<PlanarPoint> c(3, 0.0);
    OrthogonalityTag expected;
    switch (k % 3) {
      case 0: {
        c[g.Index(3)] = lambda * g.Unit();
        expected = OrthogonalityTag::kI;
        break;
      }
      case 1: {
        std::size_t i = g.Index(3), j = (i + 1 + g.Index(2)) % 3;
        if (i > j) std::swap(i, j);
        const double bound = PairBound(a, i, j);
        const double theta = std::acos(g.Uniform(-1.0, bound)) * (g.Coin() ? 1 : -1);
        const PlanarPoint mu = g.Unit();
        const double t = g.Uniform(0.05, 0.95);
        c[i] = lambda * t * mu;
        c[j] = lambda * (1 - t) * mu * E(theta);
        expected = OrthogonalityTag::kII;
        break;
      }
      default: {
        const double theta = std::acos(PairBound(a, 0, 1)) * (g.Coin() ? 1 : -1);
        const PlanarPoint mu = g.Unit(), sigma = mu * E(theta);
        const PlanarPoint gamma = -(a[0] * mu + a[1] * sigma) / a[2];
        const auto t = g.Simplex(3);
        c = {lambda * t[0] * mu, lambda * t[1] * sigma, lambda * t[2] * gamma};
        expected = OrthogonalityTag::kIII;
      }
    }
    const SeqVector cv(c);
    ASSERT_TRUE(IsBjOrthogonalL1(cv, alpha));
    const auto type = ClassifyL1Orthogonal3(cv, a);
    EXPECT_EQ(type.tag, expected);
    // Instantiating the recovered type rebuilds the vector.
    const SeqVector back = Instantiate(type, 3);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(std::abs(back[i] - cv[i]), 1e-9 * lambda);
  }
}

TEST(Classify4, Examples) {
  const auto t1 = ClassifyL1Orthogonal4(SeqVector{0.0, 0.0, E(1.0), 0.0});
  EXPECT_EQ(t1.tag, OrthogonalityTag::kI);
  EXPECT_EQ(t1.variant, 'c');

  const auto t2 = ClassifyL1Orthogonal4(SeqVector{0.3, -0.7, 0.0, 0.0});
  EXPECT_EQ(t2.tag, OrthogonalityTag::kII);
  EXPECT_EQ(t2.variant, 'a');
  ASSERT_EQ(t2.directions.size(), 2u);
  EXPECT_LT(std::abs(t2.directions[0] + t2.directions[1]), 1e-15);

  const auto t4 = ClassifyL1Orthogonal4(SeqVector{0.25, 0.25 * I, -0.25, -0.25 * I});
  EXPECT_EQ(t4.tag, OrthogonalityTag::kIV);
  PlanarPoint sum = 0.0;
  for (PlanarPoint u : t4.directions) sum += u;
  EXPECT_LT(std::abs(sum), 1e-15);
}

TEST(Classify4, ThreeSlotsNeedTheOriginInTheirHull) {
  // Directions 1, i, e^{i 3pi/4}: origin outside their hull.
  EXPECT_EQ(CodeOf([] { ClassifyL1Orthogonal4(SeqVector{1.0, I, E(3 * kPi / 4), 0.0}); }),
            ErrorCode::kNotOrthogonal);
  const auto t = ClassifyL1Orthogonal4(
      SeqVector{0.0, 1.0, E(2 * kPi / 3), E(4 * kPi / 3)});
  EXPECT_EQ(t.tag, OrthogonalityTag::kIII);
}

TEST(Classify4, RectangleIffDirectionsSumToZero) {
  Gen g(19);
  for (int k = 0; k < 3000; ++k) {
    const PlanarPoint mu = g.Unit(), sigma = g.Unit();
    std::array<PlanarPoint, 4> dirs{mu, sigma, -mu, -sigma};
    if (k % 2) dirs[3] = g.Unit();
    std::shuffle(dirs.begin(), dirs.end(), g.engine());
    const auto t = g.Simplex(4);
    const SeqVector c{t[0] * dirs[0], t[1] * dirs[1], t[2] * dirs[2], t[3] * dirs[3]};
    PlanarPoint sum = dirs[0] + dirs[1] + dirs[2] + dirs[3];
    bool accepted = true;
    try {
      EXPECT_EQ(ClassifyL1Orthogonal4(c).tag, OrthogonalityTag::kIV);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotOrthogonal);
      accepted = false;
    }
    EXPECT_EQ(accepted, std::abs(sum) < 1e-9) << std::abs(sum);
  }
}
