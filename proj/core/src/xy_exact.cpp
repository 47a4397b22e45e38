#include "benfordxy/xy_exact.hpp"

#include <numbers>
#include <string>

#include "benfordxy/error.hpp"
#include "benfordxy/numerics.hpp"

namespace bxy::xy {

namespace {

constexpr double kPi = std::numbers::pi;

void check_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma == 0.0) {
    throw DomainError("anisotropy gamma must be finite and non-zero");
  }
}

void check_beta(double beta_tilde) {
  if (std::isnan(beta_tilde) || beta_tilde <= 0.0) {
    throw DomainError("reduced inverse temperature must be positive");
  }
}

// tanh(beta*Lambda/2), exactly 1 in the ground state.
inline double thermal_factor(double beta_tilde, double lambda_k) {
  if (std::isinf(beta_tilde)) return 1.0;
  return std::tanh(0.5 * beta_tilde * lambda_k);
}

// sech^2(x) without overflow for large x.
inline double sech2(double x) {
  const double e = std::exp(-2.0 * std::abs(x));
  const double d = 1.0 + e;
  return 4.0 * e / (d * d);
}

} // namespace

double beta_from_temperature(double t_tilde) {
  if (std::isnan(t_tilde) || t_tilde < 0.0) throw DomainError("temperature must be >= 0");
  if (t_tilde == 0.0) return kZeroTemperature;
  return 1.0 / t_tilde;
}

void ModelParams::validate() const {
  check_gamma(gamma);
  check_beta(beta_tilde);
  if (!std::isfinite(lambda)) throw DomainError("field lambda must be finite");
  if (n_sites) {
    if (*n_sites < 4 || *n_sites % 2 != 0) {
      throw DomainError("chain length must be even and >= 4, got " + std::to_string(*n_sites));
    }
  }
}

double dispersion(double lambda, double gamma, double phi) {
  const double s = gamma * std::sin(phi);
  const double d = lambda - std::cos(phi);
  return std::sqrt(s * s + d * d);
}

// ---------------------------------------------------------------------------
// Finite chain
// ---------------------------------------------------------------------------

FiniteChain::FiniteChain(int n_sites, double gamma, double beta_tilde)
    : n_sites_(n_sites), gamma_(gamma), beta_tilde_(beta_tilde) {
  ModelParams{gamma, 0.0, beta_tilde, n_sites}.validate();
  const int modes = n_sites / 2;
  cos_.resize(modes);
  gamma_sin_.resize(modes);
  for (int p = 1; p <= modes; ++p) {
    const double phi = 2.0 * kPi * p / n_sites;
    cos_[p - 1] = std::cos(phi);
    gamma_sin_[p - 1] = gamma * std::sin(phi);
  }
  // phi = pi exactly; sin(pi) is not exactly zero in floating point.
  cos_.back() = -1.0;
  gamma_sin_.back() = 0.0;
}

double FiniteChain::magnetization(double lambda) const {
  double sum = 0.0;
  for (std::size_t p = 0; p < cos_.size(); ++p) {
    const double d = cos_[p] - lambda;
    const double lam_k = std::sqrt(gamma_sin_[p] * gamma_sin_[p] + d * d);
    // A zero mode (lambda = -1 at phi = pi) contributes nothing.
    if (lam_k == 0.0) continue;
    sum += thermal_factor(beta_tilde_, lam_k) * d / lam_k;
  }
  return -2.0 * sum / n_sites_;
}

// ---------------------------------------------------------------------------
// Infinite chain
// ---------------------------------------------------------------------------

InfiniteChain::InfiniteChain(double gamma, double beta_tilde, QuadratureOptions quad)
    : gamma_(gamma), beta_tilde_(beta_tilde) {
  check_gamma(gamma);
  check_beta(beta_tilde);
  if (quad.order < 1 || quad.order > numerics::kMaxRuleOrder || quad.levels < 0 || quad.panels < 1) {
    throw DomainError("invalid quadrature options");
  }
  // [0, pi/2] in equal panels, the first graded toward 0; mirrored onto
  // [pi/2, pi] graded toward pi.
  const double width = 0.5 * kPi / quad.panels;
  numerics::QuadratureGrid grid = numerics::graded_grid(0.0, width, quad.order, quad.levels);
  std::vector<double> phi = std::move(grid.nodes);
  std::vector<double> w = std::move(grid.weights);
  for (int k = 1; k < quad.panels; ++k) {
    const double lo = k * width;
    const double hi = k + 1 == quad.panels ? 0.5 * kPi : lo + width;
    const auto panel = numerics::graded_grid(lo, hi, quad.order, 0);
    phi.insert(phi.end(), panel.nodes.begin(), panel.nodes.end());
    w.insert(w.end(), panel.weights.begin(), panel.weights.end());
  }
  const std::size_t left = phi.size();
  phi.reserve(2 * left);
  w.reserve(2 * left);
  for (std::size_t i = 0; i < left; ++i) {
    phi.push_back(kPi - phi[i]);
    w.push_back(w[i]);
  }
  weight_ = std::move(w);
  cos_.resize(phi.size());
  sin_.resize(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    cos_[i] = std::cos(phi[i]);
    sin_[i] = std::sin(phi[i]);
  }
}

double InfiniteChain::magnetization(double lambda) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    const double gs = gamma_ * sin_[i];
    const double d = cos_[i] - lambda;
    const double lam_k = std::sqrt(gs * gs + d * d);
    sum += weight_[i] * thermal_factor(beta_tilde_, lam_k) * d / lam_k;
  }
  return -sum / kPi;
}

double InfiniteChain::correlator_g(int r, double lambda) const {
  if (r != 1 && r != -1) throw DomainError("correlator_g: R must be +1 or -1");
  if (!zero_temperature()) throw DomainError("correlator_g: only available at T = 0");
  double sum = 0.0;
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    const double gs = gamma_ * sin_[i];
    const double d = cos_[i] - lambda;
    const double lam_k = std::sqrt(gs * gs + d * d);
    // sin(phi R) = R sin(phi), cos(phi R) = cos(phi) for R = +-1
    sum += weight_[i] * (r * gs * sin_[i] - cos_[i] * d) / lam_k;
  }
  return sum / kPi;
}

DiagonalCorrelators InfiniteChain::correlators(double lambda) const {
  const double g_minus = correlator_g(-1, lambda);
  const double g_plus = correlator_g(1, lambda);
  const double m = magnetization(lambda);
  return {g_minus, g_plus, m * m - g_minus * g_plus};
}

double InfiniteChain::dmz_dT(double lambda) const {
  if (zero_temperature()) throw DomainError("dmz_dT: requires a positive temperature");
  const double t = 1.0 / beta_tilde_;
  double sum = 0.0;
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    const double gs = gamma_ * sin_[i];
    const double d = cos_[i] - lambda;
    const double lam_k = std::sqrt(gs * gs + d * d);
    sum += weight_[i] * d * sech2(0.5 * lam_k / t);
  }
  return sum / (2.0 * kPi * t * t);
}

// ---------------------------------------------------------------------------
// Free functions
// ---------------------------------------------------------------------------

double mz_infinite(const ModelParams& params, const QuadratureOptions& quad) {
  params.validate();
  if (params.n_sites) throw DomainError("mz_infinite: n_sites must be absent");
  return InfiniteChain(params.gamma, params.beta_tilde, quad).magnetization(params.lambda);
}

double mz_finite(const ModelParams& params) {
  if (!params.n_sites) throw DomainError("mz_finite: n_sites is required");
  params.validate();
  return FiniteChain(*params.n_sites, params.gamma, params.beta_tilde).magnetization(params.lambda);
}

double mz(const ModelParams& params, const QuadratureOptions& quad) {
  return params.n_sites ? mz_finite(params) : mz_infinite(params, quad);
}

double correlator_g(int r, double lambda, double gamma, const QuadratureOptions& quad) {
  if (!std::isfinite(lambda)) throw DomainError("field lambda must be finite");
  return InfiniteChain(gamma, kZeroTemperature, quad).correlator_g(r, lambda);
}

DiagonalCorrelators diagonal_correlators(double lambda, double gamma, const QuadratureOptions& quad) {
  if (!std::isfinite(lambda)) throw DomainError("field lambda must be finite");
  return InfiniteChain(gamma, kZeroTemperature, quad).correlators(lambda);
}

double dmz_dT(double lambda, double gamma, double t_tilde, const QuadratureOptions& quad) {
  if (!(t_tilde > 0.0) || !std::isfinite(t_tilde)) throw DomainError("dmz_dT: t_tilde must be > 0");
  if (!std::isfinite(lambda)) throw DomainError("field lambda must be finite");
  return InfiniteChain(gamma, 1.0 / t_tilde, quad).dmz_dT(lambda);
}

} // namespace bxy::xy
