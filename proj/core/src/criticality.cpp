#include "benfordxy/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <set>
#include <sstream>

#include "benfordxy/error.hpp"
#include "benfordxy/parallel.hpp"

namespace bxy {

namespace {

constexpr double kRangeTolerance = 1e-12;
constexpr double kLambdaC = 1.0;

std::string format_range(const FitRange& r) {
  std::ostringstream os;
  os << "[" << r.lo << ", " << r.hi << "]";
  return os.str();
}

} // namespace

std::string_view to_string(Signature signature) {
  switch (signature) {
  case Signature::DerivativeMax:
    return "derivative-max";
  case Signature::DerivativeMin:
    return "derivative-min";
  case Signature::Minimum:
    return "minimum";
  }
  return "unknown";
}

std::string_view to_string(CrossoverQuantity quantity) {
  return quantity == CrossoverQuantity::DMzDT ? "dmzdt" : "bvp";
}

std::string_view to_string(Branch branch) { return branch == Branch::Left ? "left" : "right"; }

// ---------------------------------------------------------------------------
// Transition location
// ---------------------------------------------------------------------------

TransitionEstimate locate_transition(const ScanResult& result, FitRange range, Signature signature,
                                     int n_sites) {
  std::vector<numerics::Point> pts;
  for (const auto& p : result.points) {
    if (range.contains(p.lambda_mid)) pts.push_back({p.lambda_mid, p.delta});
  }
  if (pts.size() < 8) {
    throw NoTransitionError("fewer than 8 scan points in fit range " + format_range(range));
  }
  TransitionEstimate est;
  est.n_sites = n_sites;
  est.signature = signature;
  est.range = range;
  est.fit = numerics::polyfit(pts, 3);
  const auto& c = est.fit.coefficients; // c0 + c1 x + c2 x^2 + c3 x^3

  switch (signature) {
  case Signature::DerivativeMax:
  case Signature::DerivativeMin: {
    // f'' = 6 c3 x + 2 c2 vanishes at -c2 / (3 c3); it is a maximum of f'
    // when c3 < 0 and a minimum when c3 > 0.
    const bool want_max = signature == Signature::DerivativeMax;
    if (c[3] == 0.0 || (want_max ? c[3] > 0.0 : c[3] < 0.0)) {
      throw NoTransitionError("fitted cubic has no slope " + std::string(want_max ? "maximum" : "minimum") +
                              " in " + format_range(range));
    }
    const double x = -c[2] / (3.0 * c[3]);
    if (!range.contains(x)) {
      throw NoTransitionError("slope extremum of fitted cubic lies outside " + format_range(range));
    }
    est.lambda_c_n = x;
    break;
  }
  case Signature::Minimum: {
    // Roots of f' = 3 c3 x^2 + 2 c2 x + c1 with f'' > 0.
    const double a = 3.0 * c[3];
    const double b = 2.0 * c[2];
    const double cc = c[1];
    std::vector<double> roots;
    if (a == 0.0) {
      if (b != 0.0) roots.push_back(-cc / b);
    } else {
      const double disc = b * b - 4.0 * a * cc;
      if (disc >= 0.0) {
        const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
        if (q != 0.0) roots.push_back(cc / q);
        roots.push_back(q / a);
      }
    }
    double best = std::numeric_limits<double>::quiet_NaN();
    double best_value = std::numeric_limits<double>::infinity();
    for (double x : roots) {
      if (!range.contains(x) || est.fit.derivative(x, 2) <= 0.0) continue;
      const double v = est.fit(x);
      if (v < best_value) {
        best_value = v;
        best = x;
      }
    }
    if (std::isnan(best)) {
      throw NoTransitionError("fitted cubic has no interior minimum in " + format_range(range));
    }
    est.lambda_c_n = best;
    break;
  }
  }
  return est;
}

std::vector<double> smoothed_slope(const ScanResult& result, double smoothing) {
  const auto& pts = result.points;
  std::vector<double> slope(pts.size(), 0.0);
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double x0 = pts[i].lambda_mid;
    while (pts[lo].lambda_mid < x0 - smoothing - kRangeTolerance) ++lo;
    while (hi < pts.size() && pts[hi].lambda_mid <= x0 + smoothing + kRangeTolerance) ++hi;
    const std::size_t n = hi - lo;
    if (n < 2) continue;
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
      mx += pts[j].lambda_mid;
      my += pts[j].delta;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
      const double dx = pts[j].lambda_mid - mx;
      sxy += dx * (pts[j].delta - my);
      sxx += dx * dx;
    }
    slope[i] = sxx > 0.0 ? sxy / sxx : 0.0;
  }
  return slope;
}

namespace {

// Centres whose fit range lies inside the scanned interval.
bool admissible_centre(const ScanResult& result, double x, double half_width) {
  return x >= result.config.lambda.start + half_width - 1e-9 &&
         x <= result.config.lambda.stop - half_width + 1e-9;
}

} // namespace

std::optional<Signature> default_signature(const ReferenceDistribution& dist) {
  switch (dist.kind) {
  case DistributionKind::Benford:
    return Signature::DerivativeMax;
  case DistributionKind::Uniform:
    return Signature::Minimum;
  case DistributionKind::Poisson:
    if (dist.kappa == 1.0) return Signature::DerivativeMax;
    return std::nullopt;
  }
  return std::nullopt;
}

Signature detect_derivative_signature(const ScanResult& result, const AutoFitOptions& options) {
  const std::vector<double> slope = smoothed_slope(result, options.smoothing);
  double steepest = 0.0;
  bool found = false;
  for (std::size_t i = 0; i < slope.size(); ++i) {
    if (!admissible_centre(result, result.points[i].lambda_mid, options.half_width)) continue;
    if (!found || std::abs(slope[i]) > std::abs(steepest)) steepest = slope[i];
    found = true;
  }
  if (!found) throw NoTransitionError("scan range is narrower than the fit window");
  return steepest >= 0.0 ? Signature::DerivativeMax : Signature::DerivativeMin;
}

TransitionEstimate locate_transition_auto(const ScanResult& result, Signature signature, int n_sites,
                                          const AutoFitOptions& options) {
  if (result.points.empty()) throw NoTransitionError("empty scan");
  const double hw = options.half_width;

  // Initial centre: steepest change of the right sign, or the lowest point,
  // among centres whose full fit range fits inside the scanned range.
  const std::vector<double> slope = smoothed_slope(result, options.smoothing);
  std::size_t best = result.points.size();
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const double x = result.points[i].lambda_mid;
    if (!admissible_centre(result, x, hw)) continue;
    if (best == result.points.size()) {
      best = i;
      continue;
    }
    switch (signature) {
    case Signature::DerivativeMax:
      if (slope[i] > slope[best]) best = i;
      break;
    case Signature::DerivativeMin:
      if (slope[i] < slope[best]) best = i;
      break;
    case Signature::Minimum:
      if (result.points[i].delta < result.points[best].delta) best = i;
      break;
    }
  }
  if (best == result.points.size()) {
    throw NoTransitionError("scan range is narrower than the fit window");
  }

  double centre = result.points[best].lambda_mid;
  auto fit_at = [&](double c) {
    return locate_transition(result, {c - hw - kRangeTolerance, c + hw + kRangeTolerance}, signature,
                             n_sites);
  };
  TransitionEstimate est = fit_at(centre);
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (int it = 2; it <= options.max_iterations; ++it) {
    const double next = est.lambda_c_n;
    if (std::abs(next - centre) < 1e-10) break;
    // Noisy curves can bounce between two centres; settle between them.
    const bool cycling = std::abs(next - previous) < 1e-10;
    previous = centre;
    centre = cycling ? 0.5 * (centre + next) : next;
    // A re-centred fit that loses the feature keeps the last good estimate.
    try {
      est = fit_at(centre);
    } catch (const NoTransitionError&) {
      break;
    }
    est.iterations = it;
    if (cycling) break;
  }
  return est;
}

// ---------------------------------------------------------------------------
// Finite-size scaling
// ---------------------------------------------------------------------------

ScalingFit scaling_exponent(const std::vector<TransitionEstimate>& estimates, double lambda_c) {
  if (estimates.size() < 3) throw NoTransitionError("scaling fit needs at least three chain lengths");
  std::set<int> sizes;
  std::vector<std::string> offenders;
  for (const auto& e : estimates) {
    if (e.n_sites <= 0) throw DomainError("scaling fit needs finite chain lengths");
    if (!sizes.insert(e.n_sites).second) {
      throw DomainError("duplicate chain length " + std::to_string(e.n_sites));
    }
    if (!(e.lambda_c_n < lambda_c)) {
      std::ostringstream os;
      os.precision(10);
      os << "N=" << e.n_sites << " (" << e.lambda_c_n << ")";
      offenders.push_back(os.str());
    }
  }
  if (!offenders.empty()) {
    std::string msg = "pseudo-critical points at or above lambda_c:";
    for (const auto& o : offenders) msg += " " + o;
    throw MixedSideError(msg);
  }

  ScalingFit fit;
  std::vector<numerics::Point> pts;
  for (const auto& e : estimates) {
    pts.push_back({std::log(static_cast<double>(e.n_sites)), std::log(lambda_c - e.lambda_c_n)});
    fit.pairs.emplace_back(e.n_sites, e.lambda_c_n);
  }
  fit.line = numerics::linfit(pts);
  fit.exponent = fit.line.slope;
  fit.prefactor = -std::exp(fit.line.intercept);
  return fit;
}

// ---------------------------------------------------------------------------
// Crossover lines
// ---------------------------------------------------------------------------

CrossoverConfig CrossoverConfig::defaults(CrossoverQuantity quantity) {
  CrossoverConfig c;
  c.quantity = quantity;
  c.t_grid = {1e-5, 2e-5, 5e-5, 1e-4, 2e-4, 3e-4, 4e-4, 5e-4};
  if (quantity == CrossoverQuantity::BVP) {
    c.left = Extremum::Min;
    c.right = Extremum::Max;
  }
  return c;
}

void CrossoverConfig::validate() const {
  if (!std::isfinite(gamma) || gamma == 0.0) throw ConfigError("gamma must be finite and non-zero");
  if (t_grid.empty()) throw ConfigError("temperature list is empty");
  for (double t : t_grid) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("temperatures must be > 0");
  }
  if (!(u_min > 0.0) || !(u_max > u_min) || !(u_step > 0.0)) {
    throw ConfigError("crossover grid requires 0 < u_min < u_max and u_step > 0");
  }
  if (std::floor((u_max - u_min) / u_step + 1e-9) < 2) throw ConfigError("crossover grid needs >= 3 points");
  if (quantity == CrossoverQuantity::BVP) {
    if (!(window_ratio > 0.0)) throw ConfigError("window ratio must be > 0");
    if (samples < 2) throw ConfigError("samples per window must be >= 2");
  }
}

namespace {

std::vector<double> branch_offsets(const CrossoverConfig& c, Branch branch) {
  const auto count = static_cast<std::size_t>(std::floor((c.u_max - c.u_min) / c.u_step + 1e-9)) + 1;
  std::vector<double> u(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double v = c.u_min + static_cast<double>(k) * c.u_step;
    // Increasing lambda order on both branches.
    if (branch == Branch::Left) {
      u[count - 1 - k] = -v;
    } else {
      u[k] = v;
    }
  }
  return u;
}

} // namespace

std::vector<double> crossover_profile(const CrossoverConfig& config, double t_tilde, Branch branch,
                                      unsigned threads) {
  config.validate();
  const std::vector<double> u = branch_offsets(config, branch);
  const xy::InfiniteChain chain(config.gamma, 1.0 / t_tilde, config.quadrature);
  std::vector<double> values(u.size());
  if (config.quantity == CrossoverQuantity::DMzDT) {
    parallel_for(u.size(), threads, [&](std::size_t k) { values[k] = chain.dmz_dT(kLambdaC + u[k] * t_tilde); });
    return values;
  }
  const double eps = config.window_ratio * t_tilde;
  const std::function<double(double)> mz = [&chain](double lambda) { return chain.magnetization(lambda); };
  parallel_for(u.size(), threads, [&](std::size_t k) {
    const double centre = kLambdaC + u[k] * t_tilde;
    const Window w{centre - 0.5 * eps, centre + 0.5 * eps};
    values[k] = window_violation(mz, w, config.samples, config.dist, config.metric, config.mode);
  });
  return values;
}

CrossoverLines crossover_lines(const CrossoverConfig& config, unsigned threads) {
  config.validate();
  CrossoverLines out;
  std::vector<numerics::Point> left_pts;
  std::vector<numerics::Point> right_pts;

  for (double t : config.t_grid) {
    for (Branch branch : {Branch::Left, Branch::Right}) {
      const std::vector<double> u = branch_offsets(config, branch);
      const std::vector<double> v = crossover_profile(config, t, branch, threads);
      const Extremum kind = branch == Branch::Left ? config.left : config.right;
      const auto it = kind == Extremum::Max ? std::max_element(v.begin(), v.end())
                                            : std::min_element(v.begin(), v.end());
      const auto k = static_cast<std::size_t>(it - v.begin());
      if (k == 0 || k + 1 == v.size()) {
        out.omitted.push_back({t, branch, "extremum on the edge of the lambda grid"});
        continue;
      }
      // Vertex of the parabola through the three points around the grid
      // extremum.
      const double ym = v[k - 1];
      const double y0 = v[k];
      const double yp = v[k + 1];
      const double h = u[k + 1] - u[k];
      const double curv = ym - 2.0 * y0 + yp;
      double shift = curv != 0.0 ? 0.5 * h * (ym - yp) / curv : 0.0;
      shift = std::clamp(shift, -h, h);
      const double u_star = u[k] + shift;
      const double value = y0 - 0.25 * (ym - yp) * shift / h;

      RidgePoint rp{kLambdaC + u_star * t, t, branch, value};
      out.ridge_points.push_back(rp);
      (branch == Branch::Left ? left_pts : right_pts).push_back({rp.lambda, rp.t_tilde});
    }
  }

  for (auto [pts, name] : {std::pair{&left_pts, "left"}, std::pair{&right_pts, "right"}}) {
    if (pts->size() < 3) {
      throw InsufficientRidgeError(std::string(name) + " branch has " + std::to_string(pts->size()) +
                                   " ridge points; need at least 3");
    }
  }
  out.left = numerics::linfit(left_pts);
  out.right = numerics::linfit(right_pts);
  return out;
}

} // namespace bxy
