#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "benfordxy/criticality.hpp"
#include "benfordxy/windowscan.hpp"

// String forms of the command-line values. Every parser throws
// bxy::ConfigError with the offending text on malformed input.
namespace bxy::cli {

/// "start:stop:step"
LambdaGrid parse_lambda_grid(std::string_view text);

/// "zero" or a positive real; returns the reduced inverse temperature.
double parse_temperature(std::string_view text);

/// "none" or an even integer >= 4.
std::optional<int> parse_n_sites(std::string_view text);

/// Comma-separated lists.
std::vector<double> parse_real_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

double parse_real(std::string_view text);

Observable parse_observable(std::string_view text);
Metric parse_metric(std::string_view text);
ReferenceDistribution parse_distribution(std::string_view name, double kappa);

/// "auto", "derivative-max", "derivative-min" or "minimum"; nullopt for auto.
std::optional<Signature> parse_signature(std::string_view text);

std::string format_temperature(double beta_tilde);
std::string format_lambda_grid(const LambdaGrid& grid);

} // namespace bxy::cli
