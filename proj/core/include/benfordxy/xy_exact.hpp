#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace bxy::xy {

/// Reduced inverse temperature of the ground state. Treated as a flag: the
/// thermal factor tanh(beta*Lambda/2) is replaced by exactly 1.
inline constexpr double kZeroTemperature = std::numeric_limits<double>::infinity();

/// Reduced inverse temperature for a reduced temperature T = kT/J; T == 0
/// maps to kZeroTemperature.
double beta_from_temperature(double t_tilde);

/// Anisotropic XY chain in a transverse field, in units of the coupling J.
struct ModelParams {
  double gamma = 1.0;                   ///< anisotropy, must be non-zero
  double lambda = 0.0;                  ///< reduced field h/J
  double beta_tilde = kZeroTemperature; ///< beta*J
  std::optional<int> n_sites;           ///< absent: thermodynamic limit

  bool zero_temperature() const { return std::isinf(beta_tilde); }
  double t_tilde() const { return zero_temperature() ? 0.0 : 1.0 / beta_tilde; }

  /// Throws DomainError on gamma == 0, beta_tilde <= 0 or NaN, or an odd or
  /// too-small chain length.
  void validate() const;
};

/// Quadrature over [0, pi] used for every thermodynamic-limit integral.
///
/// [0, pi] is halved at pi/2 and each half is cut into `panels` equal
/// panels; the one touching the outer endpoint is further cut into
/// dyadically shrinking panels, `levels` deep. Every panel carries an
/// `order`-point Gauss-Legendre rule. The grading resolves the |lambda-1|
/// kink at phi = 0 (and the |lambda+1| kink at phi = pi) as well as the
/// thermal peak of width ~T at low temperature; the uniform panels resolve
/// the interior crossover at cos(phi) = lambda when gamma is small.
struct QuadratureOptions {
  int order = 16;
  int levels = 20;
  int panels = 8;

  int total_nodes() const { return 2 * order * (levels + panels); }
};

/// Lambda(phi) = sqrt(gamma^2 sin^2 phi + (lambda - cos phi)^2).
double dispersion(double lambda, double gamma, double phi);

struct DiagonalCorrelators {
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;
};

/// Finite periodic chain with its N/2 mode angles precomputed. Cheap to
/// evaluate repeatedly at different fields.
class FiniteChain {
public:
  FiniteChain(int n_sites, double gamma, double beta_tilde = kZeroTemperature);

  /// Transverse magnetization, exact N/2-term mode sum.
  double magnetization(double lambda) const;

  int n_sites() const { return n_sites_; }

private:
  int n_sites_;
  double gamma_;
  double beta_tilde_;
  std::vector<double> cos_;
  std::vector<double> gamma_sin_;
};

/// Thermodynamic-limit chain with quadrature nodes and trigonometric tables
/// precomputed.
class InfiniteChain {
public:
  InfiniteChain(double gamma, double beta_tilde = kZeroTemperature, QuadratureOptions quad = {});

  double magnetization(double lambda) const;

  /// G(R, lambda) for R = +-1. Ground state only.
  double correlator_g(int r, double lambda) const;
  DiagonalCorrelators correlators(double lambda) const;

  /// dMz/dT at the chain's own temperature, from the differentiated
  /// integrand. Requires a finite temperature.
  double dmz_dT(double lambda) const;

  double gamma() const { return gamma_; }
  double beta_tilde() const { return beta_tilde_; }
  bool zero_temperature() const { return std::isinf(beta_tilde_); }

private:
  double gamma_;
  double beta_tilde_;
  std::vector<double> weight_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

/// Transverse magnetization in the thermodynamic limit. Requires
/// params.n_sites to be absent.
double mz_infinite(const ModelParams& params, const QuadratureOptions& quad = {});

/// Transverse magnetization of a periodic chain of params.n_sites spins.
double mz_finite(const ModelParams& params);

/// Dispatches on params.n_sites.
double mz(const ModelParams& params, const QuadratureOptions& quad = {});

/// Ground-state correlator G(R, lambda) in the thermodynamic limit.
double correlator_g(int r, double lambda, double gamma, const QuadratureOptions& quad = {});

/// Nearest-neighbour Cxx, Cyy, Czz in the ground state of the infinite chain.
DiagonalCorrelators diagonal_correlators(double lambda, double gamma,
                                         const QuadratureOptions& quad = {});

/// Temperature derivative of the infinite-chain magnetization at reduced
/// temperature t_tilde > 0.
double dmz_dT(double lambda, double gamma, double t_tilde, const QuadratureOptions& quad = {});

} // namespace bxy::xy
