#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "benfordxy/numerics.hpp"
#include "oracles.hpp"

namespace nm = bxy::numerics;
using std::numbers::pi;

TEST(Integrate, HalfAngleSine) {
  EXPECT_NEAR(nm::integrate([](double p) { return std::sin(p / 2); }, 0.0, pi, 256), 2.0, 1e-10);
}

TEST(Integrate, ConstantIsExact) {
  EXPECT_NEAR(nm::integrate([](double) { return 1.0; }, 0.0, pi, 16), pi, 1e-12);
}

TEST(Integrate, CosineCancels) {
  EXPECT_NEAR(nm::integrate([](double p) { return std::cos(p); }, 0.0, pi, 64), 0.0, 1e-12);
}

TEST(Integrate, SmallNodeCountsUseOnePanel) {
  // Two Gauss points integrate cubics exactly.
  EXPECT_NEAR(nm::integrate([](double x) { return x * x * x - x; }, 0.0, 2.0, 2), 2.0, 1e-13);
}

TEST(Integrate, RejectsBadArguments) {
  EXPECT_THROW(nm::integrate([](double) { return 1.0; }, 0.0, 1.0, 1), bxy::DomainError);
  EXPECT_THROW(nm::integrate([](double) { return 1.0; }, 1.0, 0.0, 16), bxy::DomainError);
}

TEST(Integrate, NonFiniteValueNamesAbscissa) {
  try {
    nm::integrate([](double x) { return x > 0.5 ? std::numeric_limits<double>::infinity() : 0.0; }, 0.0, 1.0, 16);
    FAIL() << "expected DomainError";
  } catch (const bxy::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("at x = 0.5"), std::string::npos) << e.what();
  }
}

TEST(Integrate, ErrorShrinksWhenNodesDouble) {
  // Magnetization integrand just below the critical field.
  auto f = [](double p) {
    const double d = std::cos(p) - 0.99;
    const double s = 0.5 * std::sin(p);
    return d / std::sqrt(s * s + d * d);
  };
  const double exact = nm::integrate_graded(f, 0.0, pi / 2, 32, 40) + nm::integrate_graded(
                                                                         [&](double p) { return f(pi - p); }, 0.0,
                                                                         pi / 2, 32, 40);
  double previous = std::numeric_limits<double>::infinity();
  for (int nodes = 16; nodes <= 2048; nodes *= 2) {
    const double err = std::abs(nm::integrate(f, 0.0, pi, nodes) - exact);
    EXPECT_LE(err, previous + 1e-14) << nodes;
    previous = err;
  }
  EXPECT_LT(previous, 1e-10);
}

TEST(IntegrateGraded, MatchesGridTable) {
  auto f = [](double x) { return std::sqrt(x) * std::exp(-x); };
  const auto grid = nm::graded_grid(0.0, 2.0, 16, 10);
  double s = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) s += grid.weights[i] * f(grid.nodes[i]);
  EXPECT_NEAR(s, nm::integrate_graded(f, 0.0, 2.0, 16, 10), 1e-15);
  EXPECT_EQ(grid.nodes.size(), 16u * 11u);
}

TEST(IntegrateGraded, ResolvesEndpointSingularity) {
  // integral of 1/sqrt(x) over [0, 1] = 2
  EXPECT_NEAR(nm::integrate_graded([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 16, 60), 2.0, 1e-8);
}

TEST(GaussLegendre, WeightsSumToTwo) {
  for (int n : {1, 2, 3, 7, 16, 33, 64}) {
    const auto& r = nm::gauss_legendre(n);
    double s = 0.0;
    for (double w : r.weights) s += w;
    EXPECT_NEAR(s, 2.0, 1e-14) << n;
    EXPECT_EQ(r.nodes.size(), static_cast<std::size_t>(n));
  }
  EXPECT_THROW(nm::gauss_legendre(0), bxy::DomainError);
  EXPECT_THROW(nm::gauss_legendre(65), bxy::DomainError);
}

TEST(Polyfit, ExactLine) {
  std::vector<nm::Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({double(i), 2.0 * i + 1.0});
  const auto f = nm::polyfit(pts, 1);
  ASSERT_EQ(f.coefficients.size(), 2u);
  EXPECT_NEAR(f.coefficients[0], 1.0, 1e-12);
  EXPECT_NEAR(f.coefficients[1], 2.0, 1e-12);
  EXPECT_NEAR(f.rms_residual, 0.0, 1e-12);
}

TEST(Polyfit, ExactCubic) {
  std::vector<nm::Point> pts;
  for (int i = -5; i <= 5; ++i) pts.push_back({0.3 * i, std::pow(0.3 * i, 3)});
  const auto f = nm::polyfit(pts, 3);
  const double expected[] = {0, 0, 0, 1};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(f.coefficients[k], expected[k], 1e-10) << k;
}

TEST(Polyfit, NoisyCubicMatchesNormalEquationsOracle) {
  std::vector<double> x, y;
  std::vector<nm::Point> pts;
  for (int i = 0; i < 50; ++i) {
    const double xi = -1.0 + 4.0 * i / 49.0;
    const double yi = xi * xi * xi - 3 * xi * xi + 2 + 1e-3 * std::sin(37.0 * i);
    x.push_back(xi);
    y.push_back(yi);
    pts.push_back({xi, yi});
  }
  const auto f = nm::polyfit(pts, 3);
  const auto ref = oracle::normal_equations_fit(x, y, 3);
  const double truth[] = {2, 0, -3, 1};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(f.coefficients[k], static_cast<double>(ref[k]), 1e-9) << k;
    EXPECT_NEAR(f.coefficients[k], truth[k], 1e-2) << k;
  }
  EXPECT_GT(f.rms_residual, 0.0);
  EXPECT_LT(f.rms_residual, 1e-3);
  ASSERT_EQ(f.standard_errors.size(), 4u);
}

TEST(Polyfit, NarrowWindowCubicStaysAccurate) {
  // Cubic fits on a 0.1-wide window far from the origin, as in transition
  // location; the monomial basis is badly conditioned there.
  std::vector<double> x, y;
  std::vector<nm::Point> pts;
  for (int i = 0; i <= 50; ++i) {
    const double xi = 0.93 + 0.002 * i;
    const double t = xi - 0.98;
    const double yi = 5.9 + 0.4 * t - 30 * t * t * t + 1e-4 * std::cos(11.0 * i);
    x.push_back(xi);
    y.push_back(yi);
    pts.push_back({xi, yi});
  }
  const auto f = nm::polyfit(pts, 3);
  const auto ref = oracle::normal_equations_fit(x, y, 3);
  for (double xi : x) {
    long double r = 0;
    for (int k = 3; k >= 0; --k) r = r * xi + ref[k];
    EXPECT_NEAR(f(xi), static_cast<double>(r), 1e-9);
  }
  // Inflection of the fitted cubic close to 0.98.
  EXPECT_NEAR(-f.coefficients[2] / (3 * f.coefficients[3]), 0.98, 1e-3);
}

TEST(Polyfit, DerivativeOfCubic) {
  nm::PolyFit p{{1, 2, 3, 4}, 3, 0.0, {}};
  EXPECT_DOUBLE_EQ(p(2.0), 1 + 4 + 12 + 32);
  EXPECT_DOUBLE_EQ(p.derivative(2.0, 1), 2 + 12 + 48);
  EXPECT_DOUBLE_EQ(p.derivative(2.0, 2), 6 + 48);
  EXPECT_DOUBLE_EQ(p.derivative(2.0, 3), 24);
  EXPECT_DOUBLE_EQ(p.derivative(2.0, 4), 0);
}

TEST(Polyfit, SingularInputs) {
  std::vector<nm::Point> same_x{{1, 1}, {1, 2}, {1, 3}};
  EXPECT_THROW(nm::polyfit(same_x, 1), bxy::SingularFitError);
  std::vector<nm::Point> too_few{{0, 0}, {1, 1}};
  EXPECT_THROW(nm::polyfit(too_few, 2), bxy::SingularFitError);
}

TEST(Linfit, TwoPointLine) {
  std::vector<nm::Point> pts{{0, 0}, {1, 1}};
  const auto l = nm::linfit(pts);
  EXPECT_NEAR(l.slope, 1.0, 1e-15);
  EXPECT_NEAR(l.intercept, 0.0, 1e-15);
}

TEST(Linfit, ProportionalData) {
  std::vector<nm::Point> pts{{1, -2}, {2, -4}, {3, -6}};
  const auto l = nm::linfit(pts);
  EXPECT_NEAR(l.slope, -2.0, 1e-12);
  EXPECT_NEAR(l.intercept, 0.0, 1e-12);
  EXPECT_NEAR(l.rms_residual, 0.0, 1e-12);
}

TEST(Linfit, SyntheticPowerLaw) {
  std::vector<nm::Point> pts;
  for (int n : {14, 20, 24, 30, 34, 40}) pts.push_back({std::log(n), std::log(0.5) - 2 * std::log(n)});
  const auto l = nm::linfit(pts);
  EXPECT_NEAR(l.slope, -2.0, 1e-9);
  EXPECT_NEAR(l.intercept, std::log(0.5), 1e-9);
}

TEST(Linfit, IdenticalAbscissaeAreSingular) {
  std::vector<nm::Point> pts{{2, 1}, {2, 3}};
  EXPECT_THROW(nm::linfit(pts), bxy::SingularFitError);
}
