#include "benfordxy/windowscan.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "benfordxy/error.hpp"
#include "benfordxy/parallel.hpp"

namespace bxy {

std::string_view to_string(Observable observable) {
  switch (observable) {
  case Observable::Mz:
    return "mz";
  case Observable::Cxx:
    return "cxx";
  case Observable::Cyy:
    return "cyy";
  case Observable::Czz:
    return "czz";
  }
  return "unknown";
}

std::size_t LambdaGrid::size() const {
  validate();
  // Tolerate the rounding in (stop - start)/step for grids like 0.8:1.2:0.002.
  return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

void LambdaGrid::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw ConfigError("lambda grid must be finite");
  }
  if (!(start < stop)) throw ConfigError("lambda grid requires start < stop");
  if (!(step > 0.0)) throw ConfigError("lambda grid requires step > 0");
}

void ScanConfig::validate() const {
  lambda.validate();
  if (!(window_width > 0.0) || !std::isfinite(window_width)) throw ConfigError("window width must be > 0");
  if (window_width >= lambda.stop - lambda.start) {
    throw ConfigError("window width must be smaller than the scanned range");
  }
  if (samples_per_window < 2) throw ConfigError("samples per window must be >= 2");
  if (dist.kind == DistributionKind::Poisson && !(dist.kappa > 0.0)) {
    throw ConfigError("Poisson reference requires kappa > 0");
  }
  try {
    xy::ModelParams{gamma, lambda.start, beta_tilde, n_sites}.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (observable != Observable::Mz) {
    if (n_sites) throw ConfigError("correlators are only available for the infinite chain");
    if (!std::isinf(beta_tilde)) throw ConfigError("correlators are only available at T = 0");
  }
}

Window window_at(const ScanConfig& config, double centre) {
  const double half = 0.5 * config.window_width;
  return {std::max(config.lambda.start, centre - half), std::min(config.lambda.stop, centre + half)};
}

double window_violation(const std::function<double(double)>& observable, const Window& window,
                        int samples, const ReferenceDistribution& dist, Metric metric,
                        FrequencyMode mode) {
  std::vector<double> values(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) values[static_cast<std::size_t>(i)] = observable(window.sample(i, samples));
  const std::vector<double> unit = rescale_unit(values);
  return violation(histogram(unit), dist, metric, mode);
}

std::function<double(double)> make_observable(const ScanConfig& config) {
  config.validate();
  if (config.n_sites) {
    auto chain = std::make_shared<const xy::FiniteChain>(*config.n_sites, config.gamma, config.beta_tilde);
    return [chain](double lambda) { return chain->magnetization(lambda); };
  }
  auto chain = std::make_shared<const xy::InfiniteChain>(config.gamma, config.beta_tilde, config.quadrature);
  switch (config.observable) {
  case Observable::Mz:
    return [chain](double lambda) { return chain->magnetization(lambda); };
  case Observable::Cxx:
    return [chain](double lambda) { return chain->correlator_g(-1, lambda); };
  case Observable::Cyy:
    return [chain](double lambda) { return chain->correlator_g(1, lambda); };
  case Observable::Czz:
    return [chain](double lambda) { return chain->correlators(lambda).zz; };
  }
  throw ConfigError("unknown observable");
}

ScanResult scan_function(const ScanConfig& config, const std::function<double(double)>& observable,
                         const ScanOptions& options) {
  config.validate();
  const std::size_t count = config.lambda.size();

  struct Slot {
    double mid = 0.0;
    double delta = 0.0;
    bool degenerate = false;
  };
  std::vector<Slot> slots(count);
  parallel_for(count, options.threads, [&](std::size_t i) {
    const Window w = window_at(config, config.lambda.at(i));
    slots[i].mid = w.mid();
    try {
      slots[i].delta = window_violation(observable, w, config.samples_per_window, config.dist,
                                        config.metric, config.mode);
    } catch (const DegenerateWindowError&) {
      slots[i].degenerate = true;
    }
  });

  ScanResult result;
  result.config = config;
  result.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (slots[i].degenerate) {
      result.degenerate_windows.push_back(config.lambda.at(i));
    } else {
      result.points.push_back({slots[i].mid, slots[i].delta});
    }
  }
  return result;
}

ScanResult scan(const ScanConfig& config, const ScanOptions& options) {
  return scan_function(config, make_observable(config), options);
}

} // namespace bxy
