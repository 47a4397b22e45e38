#include "options.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "benfordxy/error.hpp"

namespace bxy::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

} // namespace

double parse_real(std::string_view text) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError("not a finite real number: '" + std::string(text) + "'");
  }
  return v;
}

namespace {

int parse_int(std::string_view text) {
  const std::string_view t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

} // namespace

LambdaGrid parse_lambda_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("lambda range must be start:stop:step, got '" + std::string(text) + "'");
  LambdaGrid g{parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
  g.validate();
  return g;
}

double parse_temperature(std::string_view text) {
  if (trim(text) == "zero") return xy::kZeroTemperature;
  const double t = parse_real(text);
  if (!(t > 0.0)) throw ConfigError("temperature must be 'zero' or > 0, got '" + std::string(text) + "'");
  return 1.0 / t;
}

std::optional<int> parse_n_sites(std::string_view text) {
  if (trim(text) == "none") return std::nullopt;
  const int n = parse_int(text);
  if (n < 4 || n % 2 != 0) throw ConfigError("chain length must be even and >= 4, got " + std::to_string(n));
  return n;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split(text, ',')) out.push_back(parse_int(part));
  return out;
}

Observable parse_observable(std::string_view text) {
  if (text == "mz") return Observable::Mz;
  if (text == "cxx") return Observable::Cxx;
  if (text == "cyy") return Observable::Cyy;
  if (text == "czz") return Observable::Czz;
  throw ConfigError("unknown observable '" + std::string(text) + "'");
}

Metric parse_metric(std::string_view text) {
  if (text == "mean") return Metric::MeanDeviation;
  if (text == "sd") return Metric::StandardDeviation;
  if (text == "bhattacharya") return Metric::Bhattacharya;
  throw ConfigError("unknown metric '" + std::string(text) + "'");
}

ReferenceDistribution parse_distribution(std::string_view name, double kappa) {
  if (name == "benford") return ReferenceDistribution::benford();
  if (name == "uniform") return ReferenceDistribution::uniform();
  if (name == "poisson") {
    if (!(kappa > 0.0) || !std::isfinite(kappa)) throw ConfigError("--kappa must be > 0");
    return ReferenceDistribution::poisson(kappa);
  }
  throw ConfigError("unknown distribution '" + std::string(name) + "'");
}

std::optional<Signature> parse_signature(std::string_view text) {
  if (text == "auto") return std::nullopt;
  if (text == "derivative-max") return Signature::DerivativeMax;
  if (text == "derivative-min") return Signature::DerivativeMin;
  if (text == "minimum") return Signature::Minimum;
  throw ConfigError("unknown signature '" + std::string(text) + "'");
}

std::string format_temperature(double beta_tilde) {
  if (std::isinf(beta_tilde)) return "zero";
  std::ostringstream os;
  os.precision(17);
  os << 1.0 / beta_tilde;
  return os.str();
}

std::string format_lambda_grid(const LambdaGrid& grid) {
  std::ostringstream os;
  os.precision(17);
  os << grid.start << ':' << grid.stop << ':' << grid.step;
  return os.str();
}

} // namespace bxy::cli
