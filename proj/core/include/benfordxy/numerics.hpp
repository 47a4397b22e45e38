#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <sstream>
#include <vector>

#include "benfordxy/error.hpp"

namespace bxy::numerics {

/// Abscissae and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr int kPanelOrder = 16;
inline constexpr int kMaxRuleOrder = 64;

/// Cached Gauss-Legendre rule, 1 <= order <= kMaxRuleOrder.
const GaussRule& gauss_legendre(int order);

namespace detail {

[[noreturn]] void throw_non_finite(double abscissa, double value);

template <class F>
double panel(F& f, const GaussRule& rule, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = mid + half * rule.nodes[i];
    const double y = f(x);
    if (!std::isfinite(y)) throw_non_finite(x, y);
    sum += rule.weights[i] * y;
  }
  return half * sum;
}

} // namespace detail

/// Composite Gauss-Legendre quadrature of f over [a, b].
///
/// Fewer than 16 nodes use a single panel of that order; otherwise the
/// interval is cut into nodes/16 equal panels of the 16-point rule. No
/// endpoint is ever evaluated.
template <class F>
double integrate(F&& f, double a, double b, int nodes = 256) {
  if (nodes < 2) throw DomainError("integrate: nodes must be >= 2");
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a == b) return 0.0;
  const int order = nodes < kPanelOrder ? nodes : kPanelOrder;
  const int panels = nodes < kPanelOrder ? 1 : nodes / kPanelOrder;
  const GaussRule& rule = gauss_legendre(order);
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double hi = (p + 1 == panels) ? b : lo + width;
    sum += detail::panel(f, rule, lo, hi);
  }
  return sum;
}

/// Gauss-Legendre quadrature on panels that halve in width toward `a`.
///
/// Panel k covers [a + w/2^(k+1), a + w/2^k] for k < levels, where w = b - a,
/// and a last panel covers [a, a + w/2^levels]. Resolves integrands whose
/// structure collapses onto the left endpoint.
template <class F>
double integrate_graded(F&& f, double a, double b, int order, int levels) {
  if (order < 1 || order > kMaxRuleOrder) throw DomainError("integrate_graded: bad order");
  if (levels < 0) throw DomainError("integrate_graded: levels must be >= 0");
  if (!(a <= b)) throw DomainError("integrate_graded: requires a <= b");
  if (a == b) return 0.0;
  const GaussRule& rule = gauss_legendre(order);
  const double width = b - a;
  double sum = 0.0;
  double hi = b;
  for (int k = 0; k < levels; ++k) {
    const double lo = a + std::ldexp(width, -(k + 1));
    sum += detail::panel(f, rule, lo, hi);
    hi = lo;
  }
  sum += detail::panel(f, rule, a, hi);
  return sum;
}

/// Flattened node/weight table of a composite rule, for callers that evaluate
/// the same quadrature many times.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights of integrate_graded(f, a, b, order, levels).
QuadratureGrid graded_grid(double a, double b, int order, int levels);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Least-squares polynomial, coefficients ordered constant-first.
struct PolyFit {
  std::vector<double> coefficients;
  int degree = 0;
  double rms_residual = 0.0;
  /// One-sigma standard error of each coefficient, estimated from the
  /// residual variance. Empty when the fit has no spare degrees of freedom.
  std::vector<double> standard_errors;

  double operator()(double x) const;
  /// k-th derivative evaluated at x.
  double derivative(double x, int k = 1) const;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  double slope_error = 0.0;
  double intercept_error = 0.0;

  double operator()(double x) const { return intercept + slope * x; }
};

/// Householder-QR least squares of a degree-`degree` polynomial.
/// Throws SingularFitError when the design matrix is rank deficient.
PolyFit polyfit(std::span<const Point> points, int degree);

/// Ordinary least-squares line; same numbers as polyfit(points, 1).
LineFit linfit(std::span<const Point> points);

} // namespace bxy::numerics
