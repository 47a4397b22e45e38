#include "benfordxy/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <numbers>

namespace bxy::numerics {

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess; n >= 2.
GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

} // namespace

const GaussRule& gauss_legendre(int order) {
  static const std::array<GaussRule, kMaxRuleOrder + 1> rules = [] {
    std::array<GaussRule, kMaxRuleOrder + 1> out;
    out[1] = GaussRule{{0.0}, {2.0}};
    for (int n = 2; n <= kMaxRuleOrder; ++n) out[n] = compute_rule(n);
    return out;
  }();
  if (order < 1 || order > kMaxRuleOrder) {
    throw DomainError("gauss_legendre: order out of range");
  }
  return rules[order];
}

QuadratureGrid graded_grid(double a, double b, int order, int levels) {
  if (order < 1 || order > kMaxRuleOrder) throw DomainError("graded_grid: bad order");
  if (levels < 0) throw DomainError("graded_grid: levels must be >= 0");
  if (!(a < b)) throw DomainError("graded_grid: requires a < b");
  const GaussRule& rule = gauss_legendre(order);
  QuadratureGrid grid;
  grid.nodes.reserve(static_cast<std::size_t>(order) * (levels + 1));
  grid.weights.reserve(grid.nodes.capacity());
  auto add_panel = [&](double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      grid.nodes.push_back(mid + half * rule.nodes[i]);
      grid.weights.push_back(half * rule.weights[i]);
    }
  };
  const double width = b - a;
  double hi = b;
  for (int k = 0; k < levels; ++k) {
    const double lo = a + std::ldexp(width, -(k + 1));
    add_panel(lo, hi);
    hi = lo;
  }
  add_panel(a, hi);
  return grid;
}

namespace detail {

void throw_non_finite(double abscissa, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "integrand is not finite (" << value << ") at x = " << abscissa;
  throw DomainError(os.str());
}

} // namespace detail

double PolyFit::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double PolyFit::derivative(double x, int k) const {
  double acc = 0.0;
  for (int i = static_cast<int>(coefficients.size()) - 1; i >= k; --i) {
    double factor = 1.0;
    for (int j = 0; j < k; ++j) factor *= (i - j);
    acc = acc * x + factor * coefficients[i];
  }
  return acc;
}

PolyFit polyfit(std::span<const Point> points, int degree) {
  if (degree < 0) throw DomainError("polyfit: negative degree");
  const auto m = static_cast<Eigen::Index>(points.size());
  const Eigen::Index cols = degree + 1;
  if (m <= degree) throw SingularFitError("polyfit: need more points than the degree");

  // Fit in the centred, scaled variable t = (x - c)/s and expand back to
  // monomials in x; keeps the design well conditioned on narrow windows.
  double lo = points.front().x;
  double hi = points.front().x;
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("polyfit: non-finite point");
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
  }
  const double c = 0.5 * (lo + hi);
  const double s = hi > lo ? 0.5 * (hi - lo) : 1.0;

  Eigen::MatrixXd design(m, cols);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double t = (points[i].x - c) / s;
    double v = 1.0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      design(i, j) = v;
      v *= t;
    }
    rhs(i) = points[i].y;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-12);
  if (qr.rank() < cols) throw SingularFitError("polyfit: design matrix is rank deficient");
  const Eigen::VectorXd beta = qr.solve(rhs);
  const Eigen::VectorXd resid = rhs - design * beta;
  const double sse = resid.squaredNorm();

  // Covariance of beta: sigma^2 (R^T R)^{-1}, mapped through the same linear
  // change of basis as the coefficients below.
  Eigen::MatrixXd cov_t = Eigen::MatrixXd::Zero(cols, cols);
  const bool has_dof = m > cols;
  if (has_dof) {
    const double sigma2 = sse / static_cast<double>(m - cols);
    const Eigen::MatrixXd gram = design.transpose() * design;
    cov_t = sigma2 * gram.ldlt().solve(Eigen::MatrixXd::Identity(cols, cols));
  }

  // x^j coefficient: sum_k beta_k * C(k, j) * (-c)^(k-j) / s^k
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(cols, cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    double binom = 1.0;
    for (Eigen::Index j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * static_cast<double>(k - j + 1) / static_cast<double>(j);
      basis(j, k) = binom * std::pow(-c, static_cast<double>(k - j)) / std::pow(s, static_cast<double>(k));
    }
  }
  const Eigen::VectorXd coef = basis * beta;

  PolyFit fit;
  fit.degree = degree;
  fit.coefficients.assign(coef.data(), coef.data() + cols);
  fit.rms_residual = std::sqrt(sse / static_cast<double>(m));
  if (has_dof) {
    const Eigen::MatrixXd cov = basis * cov_t * basis.transpose();
    fit.standard_errors.resize(cols);
    for (Eigen::Index j = 0; j < cols; ++j) fit.standard_errors[j] = std::sqrt(std::max(0.0, cov(j, j)));
  }
  return fit;
}

LineFit linfit(std::span<const Point> points) {
  if (points.size() < 2) throw SingularFitError("linfit: need at least two points");
  const PolyFit p = polyfit(points, 1);
  LineFit line;
  line.intercept = p.coefficients[0];
  line.slope = p.coefficients[1];
  line.rms_residual = p.rms_residual;
  if (!p.standard_errors.empty()) {
    line.intercept_error = p.standard_errors[0];
    line.slope_error = p.standard_errors[1];
  }
  return line;
}

} // namespace bxy::numerics
