#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "benfordxy/firstdigit.hpp"
#include "benfordxy/violation.hpp"
#include "benfordxy/xy_exact.hpp"

namespace bxy {

enum class Observable { Mz, Cxx, Cyy, Czz };

std::string_view to_string(Observable observable);

/// Window centres start, start + step, ..., up to stop inclusive.
struct LambdaGrid {
  double start = 0.8;
  double stop = 1.2;
  double step = 0.002;

  std::size_t size() const;
  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  void validate() const;
};

/// One sweep of the field: which observable, at which model point, and how
/// each window is sampled and scored.
struct ScanConfig {
  Observable observable = Observable::Mz;
  double gamma = 1.0;
  double beta_tilde = xy::kZeroTemperature;
  std::optional<int> n_sites;
  LambdaGrid lambda;
  double window_width = 0.03;    ///< epsilon
  int samples_per_window = 10000; ///< n
  ReferenceDistribution dist = ReferenceDistribution::benford();
  Metric metric = Metric::MeanDeviation;
  FrequencyMode mode = FrequencyMode::Relative;
  xy::QuadratureOptions quadrature;

  /// Throws ConfigError for invalid values or an observable the model regime
  /// cannot provide (correlators need an infinite chain at T = 0).
  void validate() const;
};

struct ScanPoint {
  double lambda_mid = 0.0;
  double delta = 0.0;
};

struct ScanResult {
  std::vector<ScanPoint> points; ///< strictly increasing in lambda_mid
  ScanConfig config;
  std::vector<double> degenerate_windows; ///< centres of skipped flat windows
};

struct ScanOptions {
  unsigned threads = 0; ///< 0: hardware concurrency
};

/// Field sampling of one window, clipped to the grid range.
struct Window {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  /// i-th of n equally spaced interior points, lo + (i + 1/2)(hi - lo)/n.
  double sample(int i, int n) const { return lo + (i + 0.5) * (hi - lo) / n; }
};

Window window_at(const ScanConfig& config, double centre);

/// Violation parameter of a single window of an arbitrary observable.
/// Throws DegenerateWindowError when the observable is flat on the window.
double window_violation(const std::function<double(double)>& observable, const Window& window,
                        int samples, const ReferenceDistribution& dist, Metric metric,
                        FrequencyMode mode);

/// Sweeps the configured observable of the XY chain.
ScanResult scan(const ScanConfig& config, const ScanOptions& options = {});

/// Same sweep over a caller-supplied observable; config.observable and the
/// model fields are echoed but not used. The function must be thread-safe.
ScanResult scan_function(const ScanConfig& config, const std::function<double(double)>& observable,
                         const ScanOptions& options = {});

/// Builds the field -> observable map used by scan().
std::function<double(double)> make_observable(const ScanConfig& config);

} // namespace bxy
