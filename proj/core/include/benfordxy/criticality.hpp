#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "benfordxy/numerics.hpp"
#include "benfordxy/windowscan.hpp"

namespace bxy {

/// Feature of a violation curve that marks the transition.
enum class Signature {
  DerivativeMax, ///< inflection where the fitted cubic's slope peaks
  DerivativeMin, ///< inflection where the fitted cubic's slope bottoms out
  Minimum,       ///< interior minimum of the fitted cubic
};

std::string_view to_string(Signature signature);

struct FitRange {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x >= lo && x <= hi; }
};

struct TransitionEstimate {
  double lambda_c_n = 0.0;
  int n_sites = 0; ///< 0 for the infinite chain
  numerics::PolyFit fit;
  Signature signature = Signature::DerivativeMax;
  FitRange range;
  int iterations = 1;
};

/// Fits a cubic to the scan points inside `range` and returns the feature
/// selected by `signature`. Needs at least 8 points in range. Throws
/// NoTransitionError when the fitted cubic has no feature of that kind inside
/// the range.
TransitionEstimate locate_transition(const ScanResult& result, FitRange range, Signature signature,
                                     int n_sites = 0);

struct AutoFitOptions {
  double half_width = 0.05;  ///< fit range is centre +- half_width
  double smoothing = 0.01;   ///< half-width of the local slope estimate
  int max_iterations = 30;
};

/// Slope of the scan at each point, from a least-squares line through the
/// neighbours within +-smoothing.
std::vector<double> smoothed_slope(const ScanResult& result, double smoothing);


/// Documented default feature per reference law: DerivativeMax for Benford
/// and Poisson(kappa = 1), Minimum for uniform. Other Poisson rates are
/// ambiguous (the curve may rise or fall through the transition) and return
/// nullopt.
std::optional<Signature> default_signature(const ReferenceDistribution& dist);

/// Picks DerivativeMax or DerivativeMin from the sign of the steepest change
/// of the curve, looking only at centres whose fit range fits in the scan.
Signature detect_derivative_signature(const ScanResult& result, const AutoFitOptions& options = {});

/// Centres a fit range on the steepest change of the curve (or on its lowest
/// point for Minimum), then re-centres on the fitted feature until it stops
/// moving.
TransitionEstimate locate_transition_auto(const ScanResult& result, Signature signature, int n_sites = 0,
                                          const AutoFitOptions& options = {});

/// lambda_c^N = lambda_c + k N^alpha fitted on a log-log line.
struct ScalingFit {
  double exponent = 0.0;  ///< alpha, the line's slope
  double prefactor = 0.0; ///< k; ln|k| is the line's intercept
  numerics::LineFit line;
  std::vector<std::pair<int, double>> pairs; ///< (N, lambda_c^N)
};

/// Log-log fit of lambda_c - lambda_c^N against N. Needs at least three
/// distinct chain lengths, all approaching lambda_c from below; otherwise
/// throws MixedSideError naming the offenders.
ScalingFit scaling_exponent(const std::vector<TransitionEstimate>& estimates, double lambda_c = 1.0);

// ---------------------------------------------------------------------------
// Finite-temperature crossover
// ---------------------------------------------------------------------------

enum class CrossoverQuantity { DMzDT, BVP };
enum class Extremum { Max, Min };
enum class Branch { Left, Right };

std::string_view to_string(CrossoverQuantity quantity);
std::string_view to_string(Branch branch);

/// Ridge search in the (lambda, T) plane around lambda_c = 1.
///
/// At each temperature T the quantity is tabulated at lambda = 1 + u*T for
/// u on [-u_max, -u_min] (left branch) and [u_min, u_max] (right branch) in
/// steps of u_step, so the grid follows the linear crossover scaling.
struct CrossoverConfig {
  CrossoverQuantity quantity = CrossoverQuantity::DMzDT;
  double gamma = 1.0;
  std::vector<double> t_grid;
  double u_min = 0.25;
  double u_max = 4.0;
  double u_step = 0.05;
  Extremum left = Extremum::Max;
  Extremum right = Extremum::Min;

  // Violation-parameter ridge only: window width epsilon = window_ratio * T.
  double window_ratio = 1.0;
  int samples = 10000;
  ReferenceDistribution dist = ReferenceDistribution::benford();
  Metric metric = Metric::MeanDeviation;
  FrequencyMode mode = FrequencyMode::Relative;

  xy::QuadratureOptions quadrature;

  /// Defaults per quantity: the temperature derivative peaks left of the
  /// critical point and dips right of it; the Benford mean deviation does the
  /// opposite.
  static CrossoverConfig defaults(CrossoverQuantity quantity);
  void validate() const;
};

struct RidgePoint {
  double lambda = 0.0;
  double t_tilde = 0.0;
  Branch branch = Branch::Left;
  double value = 0.0; ///< quantity at the refined extremum (parabola vertex)
};

/// Temperature slice dropped from a branch because its extremum sat on the
/// edge of the grid.
struct RidgeOmission {
  double t_tilde = 0.0;
  Branch branch = Branch::Left;
  std::string reason;
};

/// Straight lines T = slope * lambda + intercept through each branch's ridge.
struct CrossoverLines {
  numerics::LineFit left;
  numerics::LineFit right;
  std::vector<RidgePoint> ridge_points;
  std::vector<RidgeOmission> omitted;
};

/// Quantity along one branch at a single temperature, at the grid's u values.
std::vector<double> crossover_profile(const CrossoverConfig& config, double t_tilde, Branch branch,
                                      unsigned threads = 0);

/// Throws InsufficientRidgeError when a branch keeps fewer than three points.
CrossoverLines crossover_lines(const CrossoverConfig& config, unsigned threads = 0);

} // namespace bxy
