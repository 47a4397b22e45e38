#include <gtest/gtest.h>

#include <cmath>

#include "benfordxy/criticality.hpp"
#include "benfordxy/error.hpp"

using namespace bxy;

namespace {

ScanResult synthetic(double lo, double hi, double step, const std::function<double(double)>& f) {
  ScanResult r;
  r.config.lambda = {lo, hi, step};
  for (std::size_t i = 0; i < r.config.lambda.size(); ++i) {
    const double x = r.config.lambda.at(i);
    r.points.push_back({x, f(x)});
  }
  return r;
}

std::vector<TransitionEstimate> power_law(double alpha, double k) {
  std::vector<TransitionEstimate> out;
  for (int n : {14, 20, 24, 30, 34, 40}) {
    TransitionEstimate e;
    e.n_sites = n;
    e.lambda_c_n = 1.0 + k * std::pow(n, alpha);
    out.push_back(e);
  }
  return out;
}

} // namespace

TEST(LocateTransition, CubicInflection) {
  const auto r = synthetic(0.9, 1.06, 0.002, [](double x) {
    const double t = x - 0.98;
    return -(t * t * t) + 0.01 * t + 3.0;
  });
  const auto e = locate_transition(r, {0.93, 1.03}, Signature::DerivativeMax);
  EXPECT_NEAR(e.lambda_c_n, 0.98, 1e-10);
  EXPECT_EQ(e.signature, Signature::DerivativeMax);
  EXPECT_TRUE(e.range.contains(e.lambda_c_n));
}

TEST(LocateTransition, SlopeMinimumOfRisingCubic) {
  const auto r = synthetic(0.9, 1.06, 0.002, [](double x) {
    const double t = x - 0.98;
    return t * t * t - 0.01 * t;
  });
  EXPECT_NEAR(locate_transition(r, {0.93, 1.03}, Signature::DerivativeMin).lambda_c_n, 0.98, 1e-10);
  // Its slope has a minimum there, not a maximum.
  EXPECT_THROW(locate_transition(r, {0.93, 1.03}, Signature::DerivativeMax), NoTransitionError);
}

TEST(LocateTransition, InflectionEqualsSecondDerivativeRoot) {
  const auto r = synthetic(0.8, 1.2, 0.002, [](double x) { return std::tanh(40 * (x - 1.013)) + 0.3 * x; });
  const auto e = locate_transition(r, {0.96, 1.06}, Signature::DerivativeMax);
  const auto& c = e.fit.coefficients;
  EXPECT_NEAR(e.lambda_c_n, -c[2] / (3 * c[3]), 1e-14);
  EXPECT_NEAR(e.fit.derivative(e.lambda_c_n, 2), 0.0, 1e-8);
}

TEST(LocateTransition, ParabolaMinimum) {
  const auto r = synthetic(0.9, 1.1, 0.002, [](double x) { return (x - 1.01) * (x - 1.01); });
  EXPECT_NEAR(locate_transition(r, {0.95, 1.06}, Signature::Minimum).lambda_c_n, 1.01, 0.002);
}

TEST(LocateTransition, NeedsEightPoints) {
  const auto r = synthetic(0.9, 1.1, 0.01, [](double x) { return x * x * x; });
  EXPECT_THROW(locate_transition(r, {0.99, 1.05}, Signature::DerivativeMax), NoTransitionError);
}

TEST(LocateTransition, FeatureOutsideRange) {
  const auto r = synthetic(0.8, 1.2, 0.002, [](double x) {
    const double t = x - 1.15;
    return -(t * t * t) + 0.01 * t;
  });
  EXPECT_THROW(locate_transition(r, {0.9, 1.0}, Signature::DerivativeMax), NoTransitionError);
  EXPECT_THROW(locate_transition(r, {0.9, 1.0}, Signature::Minimum), NoTransitionError);
}

TEST(LocateTransition, ShiftEquivariance) {
  auto f = [](double x) { return std::tanh(30 * (x - 0.985)) + 0.2 * (x - 0.985) * (x - 0.985); };
  const auto base = synthetic(0.8, 1.2, 0.002, f);
  const double shift = 0.125; // exact in binary, so the grids shift exactly
  const auto moved = synthetic(0.8 + shift, 1.2 + shift, 0.002, [&](double x) { return f(x - shift); });
  const auto a = locate_transition_auto(base, Signature::DerivativeMax);
  const auto b = locate_transition_auto(moved, Signature::DerivativeMax);
  EXPECT_NEAR(b.lambda_c_n - a.lambda_c_n, shift, 1e-9);
}

TEST(LocateTransitionAuto, IgnoresClippedEdges) {
  // Large spurious slope at the last points, as clipped windows produce.
  auto r = synthetic(0.8, 1.2, 0.002, [](double x) { return std::tanh(25 * (x - 0.97)); });
  r.points.back().delta -= 5.0;
  r.points[r.points.size() - 2].delta -= 3.0;
  EXPECT_EQ(detect_derivative_signature(r), Signature::DerivativeMax);
  EXPECT_NEAR(locate_transition_auto(r, Signature::DerivativeMax).lambda_c_n, 0.97, 2e-3);
}

TEST(LocateTransitionAuto, DetectsFallingCurve) {
  const auto r = synthetic(0.8, 1.2, 0.002, [](double x) { return -std::tanh(25 * (x - 1.02)); });
  EXPECT_EQ(detect_derivative_signature(r), Signature::DerivativeMin);
  EXPECT_NEAR(locate_transition_auto(r, Signature::DerivativeMin).lambda_c_n, 1.02, 2e-3);
}

TEST(LocateTransitionAuto, NarrowScan) {
  const auto r = synthetic(0.9, 0.95, 0.002, [](double x) { return x; });
  EXPECT_THROW(locate_transition_auto(r, Signature::DerivativeMax), NoTransitionError);
}

TEST(DefaultSignature, PerDistribution) {
  EXPECT_EQ(default_signature(ReferenceDistribution::benford()), Signature::DerivativeMax);
  EXPECT_EQ(default_signature(ReferenceDistribution::poisson(1)), Signature::DerivativeMax);
  EXPECT_EQ(default_signature(ReferenceDistribution::uniform()), Signature::Minimum);
  EXPECT_EQ(default_signature(ReferenceDistribution::poisson(10)), std::nullopt);
}

TEST(ScalingExponent, ExactPowerLaw) {
  const auto fit = scaling_exponent(power_law(-2.0, -0.5));
  EXPECT_NEAR(fit.exponent, -2.0, 1e-9);
  EXPECT_NEAR(fit.prefactor, -0.5, 1e-9);
  EXPECT_NEAR(fit.line.intercept, std::log(0.5), 1e-9);
  EXPECT_EQ(fit.exponent, fit.line.slope);
  EXPECT_EQ(fit.pairs.size(), 6u);
}

TEST(ScalingExponent, OtherExponents) {
  for (double a : {-1.0, -2.0, -3.0}) {
    const auto fit = scaling_exponent(power_law(a, -0.8));
    EXPECT_NEAR(fit.exponent, a, 1e-9);
    EXPECT_NEAR(fit.prefactor, -0.8, 1e-9);
  }
}

TEST(ScalingExponent, MixedSideListsOffenders) {
  auto est = power_law(-2.0, -0.5);
  est[2].lambda_c_n = 1.0005;
  est[4].lambda_c_n = 1.0;
  try {
    scaling_exponent(est);
    FAIL() << "expected MixedSideError";
  } catch (const MixedSideError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("N=24"), std::string::npos) << msg;
    EXPECT_NE(msg.find("N=34"), std::string::npos) << msg;
    EXPECT_EQ(msg.find("N=14"), std::string::npos) << msg;
  }
}

TEST(ScalingExponent, Preconditions) {
  auto est = power_law(-2.0, -0.5);
  est.resize(2);
  EXPECT_THROW(scaling_exponent(est), NoTransitionError);
  est = power_law(-2.0, -0.5);
  est[1].n_sites = est[0].n_sites;
  EXPECT_THROW(scaling_exponent(est), DomainError);
}

TEST(Crossover, TwoTemperaturesAreInsufficient) {
  auto c = CrossoverConfig::defaults(CrossoverQuantity::DMzDT);
  c.t_grid = {1e-4, 2e-4};
  try {
    crossover_lines(c);
    FAIL() << "expected InsufficientRidgeError";
  } catch (const InsufficientRidgeError& e) {
    EXPECT_NE(std::string(e.what()).find("left"), std::string::npos) << e.what();
  }
}

TEST(Crossover, TemperatureDerivativeRidge) {
  auto c = CrossoverConfig::defaults(CrossoverQuantity::DMzDT);
  const auto lines = crossover_lines(c);
  EXPECT_LT(lines.left.slope, 0.0);
  EXPECT_GT(lines.right.slope, 0.0);
  EXPECT_TRUE(lines.omitted.empty());
  EXPECT_EQ(lines.ridge_points.size(), 2 * c.t_grid.size());
  // Maxima are positive on the left, minima negative on the right.
  for (const auto& p : lines.ridge_points) {
    if (p.branch == Branch::Left) {
      EXPECT_LT(p.lambda, 1.0);
      EXPECT_GT(p.value, 0.0);
    } else {
      EXPECT_GT(p.lambda, 1.0);
      EXPECT_LT(p.value, 0.0);
    }
  }
  // Both lines reach T = 0 at the critical field.
  EXPECT_LT(std::abs(-lines.left.intercept / lines.left.slope - 1.0), 1e-3);
  EXPECT_LT(std::abs(-lines.right.intercept / lines.right.slope - 1.0), 1e-3);
}

TEST(Crossover, EdgeExtremaAreOmitted) {
  auto c = CrossoverConfig::defaults(CrossoverQuantity::DMzDT);
  // The ridge sits near |lambda - 1| ~ 1.7 T; a grid ending at 1 T misses it.
  c.u_max = 1.0;
  c.u_min = 0.25;
  c.t_grid = {1e-4, 2e-4, 3e-4};
  EXPECT_THROW(crossover_lines(c), InsufficientRidgeError);
}

TEST(CrossoverConfig, Validation) {
  auto c = CrossoverConfig::defaults(CrossoverQuantity::BVP);
  EXPECT_EQ(c.left, Extremum::Min);
  EXPECT_EQ(c.right, Extremum::Max);
  c.t_grid = {};
  EXPECT_THROW(c.validate(), ConfigError);
  c = CrossoverConfig::defaults(CrossoverQuantity::BVP);
  c.t_grid.push_back(-1.0);
  EXPECT_THROW(c.validate(), ConfigError);
  c = CrossoverConfig::defaults(CrossoverQuantity::BVP);
  c.u_max = c.u_min;
  EXPECT_THROW(c.validate(), ConfigError);
}
