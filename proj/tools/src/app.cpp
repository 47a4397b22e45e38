#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "benfordxy/criticality.hpp"
#include "benfordxy/error.hpp"
#include "benfordxy/firstdigit.hpp"
#include "benfordxy/violation.hpp"
#include "benfordxy/windowscan.hpp"
#include "options.hpp"
#include "output.hpp"

namespace bxy::cli {

using json = nlohmann::ordered_json;

std::string tool_version() { return BENFORDXY_VERSION; }

namespace {

// ---------------------------------------------------------------------------
// Flag sets
// ---------------------------------------------------------------------------

struct ModelFlags {
  double gamma = 1.0;
  std::string n_sites = "none";
  std::string t = "zero";
  std::string lambda = "0.8:1.2:0.002";
  double window = 0.03;
  int samples = 10000;
  std::string dist = "benford";
  double kappa = 1.0;
  std::string metric = "mean";
  bool raw_counts = false;
  int quad_order = 16;
  int quad_levels = 20;
  int quad_panels = 8;
};

struct OutputFlags {
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
};

void add_reference_flags(CLI::App* cmd, ModelFlags& f) {
  cmd->add_option("--dist", f.dist, "Reference law: benford, uniform or poisson")->capture_default_str();
  cmd->add_option("--kappa", f.kappa, "Poisson rate")->capture_default_str();
  cmd->add_option("--metric", f.metric, "Violation metric: mean, sd or bhattacharya")->capture_default_str();
  cmd->add_flag("--raw-counts", f.raw_counts, "Evaluate sd and bhattacharya on raw counts");
}

void add_model_flags(CLI::App* cmd, ModelFlags& f, bool with_n_sites) {
  cmd->add_option("--gamma", f.gamma, "Anisotropy (non-zero)")->capture_default_str();
  if (with_n_sites) {
    cmd->add_option("--n-sites", f.n_sites, "Chain length (even, >= 4) or 'none'")->capture_default_str();
  }
  cmd->add_option("--t", f.t, "Reduced temperature or 'zero'")->capture_default_str();
  cmd->add_option("--lambda", f.lambda, "Window centres start:stop:step")->capture_default_str();
  cmd->add_option("--window", f.window, "Window width epsilon")->capture_default_str();
  cmd->add_option("--samples", f.samples, "Samples per window")->capture_default_str();
  add_reference_flags(cmd, f);
  cmd->add_option("--quad-order", f.quad_order, "Gauss-Legendre order per panel")->capture_default_str();
  cmd->add_option("--quad-levels", f.quad_levels, "Dyadic grading levels toward the band edges")
      ->capture_default_str();
  cmd->add_option("--quad-panels", f.quad_panels, "Equal panels per half of [0, pi]")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, OutputFlags& f, bool with_threads = true) {
  cmd->add_option("--out", f.out, std::string("Output directory (default $") + kOutDirEnv + " or .)");
  cmd->add_option("--format", f.format, "Data format: csv or json")->capture_default_str();
  if (with_threads) {
    cmd->add_option("--threads", f.threads, "Worker threads, 0 for all cores")->capture_default_str();
  }
}

void check_format(const OutputFlags& f) {
  if (f.format != "csv" && f.format != "json") throw ConfigError("--format must be csv or json");
}

FrequencyMode frequency_mode(const ModelFlags& f) {
  return f.raw_counts ? FrequencyMode::RawCounts : FrequencyMode::Relative;
}

ScanConfig make_scan_config(const ModelFlags& f) {
  ScanConfig c;
  c.gamma = f.gamma;
  c.n_sites = parse_n_sites(f.n_sites);
  c.beta_tilde = parse_temperature(f.t);
  c.lambda = parse_lambda_grid(f.lambda);
  c.window_width = f.window;
  c.samples_per_window = f.samples;
  c.dist = parse_distribution(f.dist, f.kappa);
  c.metric = parse_metric(f.metric);
  c.mode = frequency_mode(f);
  c.quadrature = {f.quad_order, f.quad_levels, f.quad_panels};
  if (c.quadrature.order < 1 || c.quadrature.order > 64 || c.quadrature.levels < 0 ||
      c.quadrature.panels < 1) {
    throw ConfigError("--quad-order must be in 1..64, --quad-levels >= 0 and --quad-panels >= 1");
  }
  return c;
}

json reference_json(const ReferenceDistribution& d) {
  json j;
  j["dist"] = d.kind == DistributionKind::Benford   ? "benford"
              : d.kind == DistributionKind::Uniform ? "uniform"
                                                     : "poisson";
  if (d.kind == DistributionKind::Poisson) j["kappa"] = d.kappa;
  return j;
}

json scan_config_json(const ScanConfig& c) {
  json j;
  j["observable"] = std::string(to_string(c.observable));
  j["gamma"] = c.gamma;
  if (c.n_sites) {
    j["n_sites"] = *c.n_sites;
  } else {
    j["n_sites"] = "none";
  }
  j["t"] = format_temperature(c.beta_tilde);
  j["lambda"] = {{"start", c.lambda.start}, {"stop", c.lambda.stop}, {"step", c.lambda.step}};
  j["window"] = c.window_width;
  j["samples"] = c.samples_per_window;
  j.update(reference_json(c.dist));
  j["metric"] = std::string(to_string(c.metric));
  j["frequency_mode"] = c.mode == FrequencyMode::Relative ? "relative" : "raw-counts";
  j["quadrature"] = {{"order", c.quadrature.order}, {"levels", c.quadrature.levels}, {"panels", c.quadrature.panels}};
  return j;
}

json line_json(const numerics::LineFit& l) {
  return {{"slope", l.slope},
          {"intercept", l.intercept},
          {"rms_residual", l.rms_residual},
          {"slope_error", l.slope_error},
          {"intercept_error", l.intercept_error}};
}

// ---------------------------------------------------------------------------
// digits
// ---------------------------------------------------------------------------

struct DigitsFlags {
  std::string input;
  int column = 0;
  std::string generate;
  bool rescale = false;
  ModelFlags model;
  OutputFlags output;
};

// "logmantissa:N" -> 10^u, "linear:N" -> u, "constant:N" -> 1, with
// u = (i + 1/2)/N.
std::vector<double> generate_values(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("generator must be kind:count, got '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const double count = parse_real(spec.substr(colon + 1));
  if (!(count >= 1.0) || count != std::floor(count) || count > 1e9) {
    throw ConfigError("generator count must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    if (kind == "logmantissa") {
      v[i] = std::pow(10.0, u);
    } else if (kind == "linear") {
      v[i] = u;
    } else if (kind == "constant") {
      v[i] = 1.0;
    } else {
      throw ConfigError("unknown generator '" + kind + "'");
    }
  }
  return v;
}

int cmd_digits(const DigitsFlags& f, const std::vector<std::string>& args, std::ostream& out) {
  check_format(f.output);
  if (f.input.empty() == f.generate.empty()) throw ConfigError("give exactly one of --input or --generate");
  const ReferenceDistribution dist = parse_distribution(f.model.dist, f.model.kappa);
  const Metric metric = parse_metric(f.model.metric);
  const FrequencyMode mode = frequency_mode(f.model);

  std::vector<double> values =
      f.input.empty() ? generate_values(f.generate) : read_csv_column(f.input, f.column);
  if (values.size() < 10) {
    throw DegenerateWindowError("need at least 10 values, got " + std::to_string(values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("input contains a non-finite value");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) throw DegenerateWindowError("all input values are equal");
  if (f.rescale) values = rescale_unit(values);

  const DigitHistogram h = histogram(values);
  const DigitProbabilities p = probabilities(dist);
  json report;
  report["values"] = values.size();
  report["rescaled"] = f.rescale;
  report["total"] = h.total;
  report["skipped"] = h.skipped;
  report["reference"] = reference_json(dist);
  json digits = json::array();
  for (int d = 1; d <= 9; ++d) {
    digits.push_back({{"digit", d},
                      {"count", h.count(d)},
                      {"frequency", h.total ? h.frequency(d) : 0.0},
                      {"probability", p[static_cast<std::size_t>(d - 1)]}});
  }
  report["digits"] = digits;
  json v;
  for (Metric m : {Metric::MeanDeviation, Metric::StandardDeviation, Metric::Bhattacharya}) {
    v[std::string(to_string(m))] = violation(h, dist, m, mode);
  }
  report["violation"] = v;
  report["metric"] = std::string(to_string(metric));
  report["delta"] = violation(h, dist, metric, mode);

  out << "digit  count  frequency  reference\n";
  for (int d = 1; d <= 9; ++d) {
    out << std::setw(5) << d << "  " << std::setw(5) << h.count(d) << "  " << std::fixed << std::setprecision(5)
        << std::setw(9) << (h.total ? h.frequency(d) : 0.0) << "  " << std::setw(9)
        << p[static_cast<std::size_t>(d - 1)] << "\n";
  }
  out.unsetf(std::ios::floatfield);
  out << "total " << h.total << ", skipped " << h.skipped << "\n";
  for (auto& [name, value] : v.items()) out << name << " " << format_real(value.get<double>()) << "\n";

  OutputSet outputs(resolve_output_dir(f.output.out));
  if (f.output.format == "csv") {
    std::vector<std::string> rows;
    for (int d = 1; d <= 9; ++d) {
      rows.push_back(std::to_string(d) + "," + std::to_string(h.count(d)) + "," +
                     format_real(p[static_cast<std::size_t>(d - 1)]));
    }
    outputs.write_csv("digits.csv", "digit,count,probability", rows);
  }
  outputs.write_json("digits.json", report);

  json config;
  if (!f.input.empty()) {
    config["input"] = f.input;
    config["column"] = f.column;
  } else {
    config["generate"] = f.generate;
  }
  config["rescale"] = f.rescale;
  config.update(reference_json(dist));
  config["metric"] = std::string(to_string(metric));
  config["frequency_mode"] = mode == FrequencyMode::Relative ? "relative" : "raw-counts";
  config["format"] = f.output.format;
  write_manifest(outputs, "digits", args, config);
  return kOk;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

struct ScanFlags {
  std::string observable = "mz";
  ModelFlags model;
  OutputFlags output;
};

int cmd_scan(const ScanFlags& f, const std::vector<std::string>& args, std::ostream& out) {
  check_format(f.output);
  ScanConfig config = make_scan_config(f.model);
  config.observable = parse_observable(f.observable);
  config.validate();
  const ScanResult r = scan(config, {f.output.threads});

  OutputSet outputs(resolve_output_dir(f.output.out));
  if (f.output.format == "csv") {
    std::vector<std::string> rows;
    rows.reserve(r.points.size());
    for (const auto& p : r.points) rows.push_back(format_real(p.lambda_mid) + "," + format_real(p.delta));
    outputs.write_csv("scan.csv", "lambda_mid,delta", rows);
  } else {
    json doc;
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back({{"lambda_mid", p.lambda_mid}, {"delta", p.delta}});
    doc["points"] = pts;
    doc["degenerate_windows"] = r.degenerate_windows;
    outputs.write_json("scan.json", doc);
  }
  json cfg = scan_config_json(config);
  cfg["format"] = f.output.format;
  cfg["degenerate_windows"] = r.degenerate_windows;
  write_manifest(outputs, "scan", args, cfg);

  out << r.points.size() << " windows, " << r.degenerate_windows.size() << " degenerate\n";
  for (const auto& file : outputs.files()) out << "wrote " << file << "\n";
  if (r.points.empty()) throw DegenerateWindowError("every window is degenerate");
  return kOk;
}

// ---------------------------------------------------------------------------
// scale
// ---------------------------------------------------------------------------

struct ScaleFlags {
  std::string n_list = "14,20,24,30,34,40";
  std::string signature = "auto";
  double half_width = 0.05;
  double smoothing = 0.01;
  ModelFlags model;
  OutputFlags output;
};

json estimate_json(const TransitionEstimate& e) {
  return {{"n_sites", e.n_sites},
          {"lambda_c_n", e.lambda_c_n},
          {"signature", std::string(to_string(e.signature))},
          {"fit_range", {e.range.lo, e.range.hi}},
          {"iterations", e.iterations},
          {"cubic", e.fit.coefficients},
          {"cubic_standard_errors", e.fit.standard_errors},
          {"rms_residual", e.fit.rms_residual}};
}

int cmd_scale(const ScaleFlags& f, const std::vector<std::string>& args, std::ostream& out) {
  check_format(f.output);
  ScanConfig base = make_scan_config(f.model);
  const std::vector<int> sizes = parse_int_list(f.n_list);
  for (int n : sizes) parse_n_sites(std::to_string(n));
  if (sizes.size() < 3) throw ConfigError("--n-list needs at least three chain lengths");
  if (!(f.half_width > 0.0) || !(f.smoothing > 0.0)) throw ConfigError("fit widths must be > 0");
  const std::optional<Signature> flag_signature = parse_signature(f.signature);
  const std::optional<Signature> default_sig = default_signature(base.dist);
  const AutoFitOptions fit_options{f.half_width, f.smoothing, 30};

  std::vector<TransitionEstimate> estimates;
  json per_n = json::array();
  for (int n : sizes) {
    ScanConfig c = base;
    c.n_sites = n;
    c.validate();
    const ScanResult r = scan(c, {f.output.threads});
    std::string source = "flag";
    Signature sig{};
    if (flag_signature) {
      sig = *flag_signature;
    } else if (default_sig) {
      sig = *default_sig;
      source = "default";
    } else {
      sig = detect_derivative_signature(r, fit_options);
      source = "detected";
    }
    try {
      estimates.push_back(locate_transition_auto(r, sig, n, fit_options));
    } catch (const NoTransitionError& e) {
      throw NoTransitionError("N=" + std::to_string(n) + ": " + e.what());
    }
    json entry = estimate_json(estimates.back());
    entry["signature_source"] = source;
    if (source == "detected") {
      // Ambiguous reference law: report both derivative candidates.
      json candidates = json::object();
      for (Signature s : {Signature::DerivativeMax, Signature::DerivativeMin}) {
        try {
          candidates[std::string(to_string(s))] = locate_transition_auto(r, s, n, fit_options).lambda_c_n;
        } catch (const NoTransitionError& e) {
          candidates[std::string(to_string(s))] = e.what();
        }
      }
      entry["candidates"] = candidates;
    }
    per_n.push_back(entry);
    out << "N=" << n << " lambda_c^N=" << format_real(estimates.back().lambda_c_n) << " ("
        << to_string(sig) << ")\n";
  }
  const ScalingFit fit = scaling_exponent(estimates, 1.0);
  out << "exponent " << format_real(fit.exponent) << ", prefactor " << format_real(fit.prefactor) << "\n";

  json fit_doc;
  fit_doc["lambda_c"] = 1.0;
  fit_doc["exponent"] = fit.exponent;
  fit_doc["prefactor"] = fit.prefactor;
  fit_doc["line"] = line_json(fit.line);
  fit_doc["estimates"] = per_n;

  OutputSet outputs(resolve_output_dir(f.output.out));
  if (f.output.format == "csv") {
    std::vector<std::string> rows;
    for (const auto& [n, l] : fit.pairs) rows.push_back(std::to_string(n) + "," + format_real(l));
    outputs.write_csv("scaling.csv", "n_sites,lambda_c_n", rows);
    outputs.write_json("scaling_fit.json", fit_doc);
  } else {
    json doc;
    json pairs = json::array();
    for (const auto& [n, l] : fit.pairs) pairs.push_back({{"n_sites", n}, {"lambda_c_n", l}});
    doc["pairs"] = pairs;
    doc["fit"] = fit_doc;
    outputs.write_json("scaling.json", doc);
  }
  json cfg = scan_config_json(base);
  cfg.erase("n_sites");
  cfg["n_list"] = sizes;
  cfg["signature"] = f.signature;
  cfg["fit_half_width"] = f.half_width;
  cfg["smoothing"] = f.smoothing;
  cfg["format"] = f.output.format;
  write_manifest(outputs, "scale", args, cfg);
  for (const auto& file : outputs.files()) out << "wrote " << file << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// crossover
// ---------------------------------------------------------------------------

struct CrossoverFlags {
  double gamma = 1.0;
  std::string t_list = "1e-5,2e-5,5e-5,1e-4,2e-4,3e-4,4e-4,5e-4";
  std::string quantity = "both";
  double u_min = 0.25;
  double u_max = 4.0;
  double u_step = 0.05;
  double window_ratio = 1.0;
  int samples = 10000;
  ModelFlags model;
  OutputFlags output;
};

json crossover_json(const CrossoverConfig& c, const CrossoverLines& lines) {
  json j;
  j["quantity"] = std::string(to_string(c.quantity));
  j["left"] = line_json(lines.left);
  j["right"] = line_json(lines.right);
  // Field at which each line reaches T = 0.
  j["left_lambda_at_zero_t"] = -lines.left.intercept / lines.left.slope;
  j["right_lambda_at_zero_t"] = -lines.right.intercept / lines.right.slope;
  json omitted = json::array();
  for (const auto& o : lines.omitted) {
    omitted.push_back({{"t_tilde", o.t_tilde}, {"branch", std::string(to_string(o.branch))}, {"reason", o.reason}});
  }
  j["omitted"] = omitted;
  return j;
}

int cmd_crossover(const CrossoverFlags& f, const std::vector<std::string>& args, std::ostream& out) {
  check_format(f.output);
  std::vector<CrossoverQuantity> quantities;
  if (f.quantity == "both" || f.quantity == "dmzdt") quantities.push_back(CrossoverQuantity::DMzDT);
  if (f.quantity == "both" || f.quantity == "bvp") quantities.push_back(CrossoverQuantity::BVP);
  if (quantities.empty()) throw ConfigError("--quantity must be dmzdt, bvp or both");
  const std::vector<double> t_grid = parse_real_list(f.t_list);
  if (f.model.quad_order < 1 || f.model.quad_order > 64 || f.model.quad_levels < 0 ||
      f.model.quad_panels < 1) {
    throw ConfigError("--quad-order must be in 1..64, --quad-levels >= 0 and --quad-panels >= 1");
  }

  std::vector<CrossoverConfig> configs;
  for (CrossoverQuantity q : quantities) {
    CrossoverConfig c = CrossoverConfig::defaults(q);
    c.gamma = f.gamma;
    c.t_grid = t_grid;
    c.u_min = f.u_min;
    c.u_max = f.u_max;
    c.u_step = f.u_step;
    c.window_ratio = f.window_ratio;
    c.samples = f.samples;
    c.dist = parse_distribution(f.model.dist, f.model.kappa);
    c.metric = parse_metric(f.model.metric);
    c.mode = frequency_mode(f.model);
    c.quadrature = {f.model.quad_order, f.model.quad_levels, f.model.quad_panels};
    c.validate();
    configs.push_back(c);
  }

  OutputSet outputs(resolve_output_dir(f.output.out));
  json doc;
  std::vector<CrossoverLines> all;
  for (const auto& c : configs) {
    const CrossoverLines lines = crossover_lines(c, f.output.threads);
    all.push_back(lines);
    const std::string name = std::string(to_string(c.quantity));
    out << name << ": left slope " << format_real(lines.left.slope) << ", right slope "
        << format_real(lines.right.slope) << "\n";
    for (const auto& o : lines.omitted) {
      out << "  omitted T=" << format_real(o.t_tilde) << " " << to_string(o.branch) << ": " << o.reason << "\n";
    }
    json qj = crossover_json(c, lines);
    if (f.output.format == "csv") {
      std::vector<std::string> rows;
      for (const auto& p : lines.ridge_points) {
        rows.push_back(format_real(p.t_tilde) + "," + format_real(p.lambda) + "," + std::string(to_string(p.branch)));
      }
      outputs.write_csv("crossover_" + name + ".csv", "t_tilde,lambda,branch", rows);
    } else {
      json pts = json::array();
      for (const auto& p : lines.ridge_points) {
        pts.push_back({{"t_tilde", p.t_tilde}, {"lambda", p.lambda}, {"branch", std::string(to_string(p.branch))}});
      }
      qj["ridge_points"] = pts;
    }
    doc[name] = qj;
  }

  if (all.size() == 2) {
    // Pointwise comparison of the two ridges at shared (T, branch) slices.
    double rel = 0.0;
    double offset_rel = 0.0;
    int shared = 0;
    for (const auto& a : all[0].ridge_points) {
      for (const auto& b : all[1].ridge_points) {
        if (a.t_tilde != b.t_tilde || a.branch != b.branch) continue;
        ++shared;
        rel = std::max(rel, std::abs(b.lambda - a.lambda) / std::abs(a.lambda));
        offset_rel = std::max(offset_rel, std::abs(b.lambda - a.lambda) / std::abs(a.lambda - 1.0));
      }
    }
    doc["agreement"] = {{"shared_points", shared},
                        {"max_relative_lambda_difference", rel},
                        {"max_relative_offset_difference", offset_rel}};
    out << "ridges: max relative lambda difference " << format_real(rel) << "\n";
  }
  outputs.write_json(f.output.format == "csv" ? "crossover_fit.json" : "crossover.json", doc);

  json cfg;
  cfg["gamma"] = f.gamma;
  cfg["t_list"] = t_grid;
  cfg["quantity"] = f.quantity;
  cfg["u_min"] = f.u_min;
  cfg["u_max"] = f.u_max;
  cfg["u_step"] = f.u_step;
  cfg["window_ratio"] = f.window_ratio;
  cfg["samples"] = f.samples;
  cfg.update(reference_json(configs.front().dist));
  cfg["metric"] = std::string(to_string(configs.front().metric));
  cfg["frequency_mode"] = f.model.raw_counts ? "raw-counts" : "relative";
  cfg["quadrature"] = {{"order", f.model.quad_order}, {"levels", f.model.quad_levels}, {"panels", f.model.quad_panels}};
  cfg["format"] = f.output.format;
  write_manifest(outputs, "crossover", args, cfg);
  for (const auto& file : outputs.files()) out << "wrote " << file << "\n";
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benford-law analysis of the exactly solved anisotropic XY chain", "benfordxy"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  DigitsFlags digits;
  auto* d = app.add_subcommand("digits", "First-digit statistics of a data column");
  d->add_option("--input", digits.input, "CSV file to read");
  d->add_option("--column", digits.column, "0-based CSV column")->capture_default_str();
  d->add_option("--generate", digits.generate, "Generator logmantissa:N, linear:N or constant:N");
  d->add_flag("--rescale", digits.rescale, "Map the values onto [0, 1] before counting");
  add_reference_flags(d, digits.model);
  add_output_flags(d, digits.output, false);

  ScanFlags scan_flags;
  auto* s = app.add_subcommand("scan", "Violation parameter across a sweep of the field");
  s->add_option("--observable", scan_flags.observable, "mz, cxx, cyy or czz")->capture_default_str();
  add_model_flags(s, scan_flags.model, true);
  add_output_flags(s, scan_flags.output);

  ScaleFlags scale;
  auto* sc = app.add_subcommand("scale", "Finite-size scaling of the pseudo-critical field");
  sc->add_option("--n-list", scale.n_list, "Chain lengths, comma separated")->capture_default_str();
  sc->add_option("--signature", scale.signature, "auto, derivative-max, derivative-min or minimum")
      ->capture_default_str();
  sc->add_option("--fit-half-width", scale.half_width, "Half-width of the cubic fit range")->capture_default_str();
  sc->add_option("--smoothing", scale.smoothing, "Half-width of the slope estimate")->capture_default_str();
  add_model_flags(sc, scale.model, false);
  add_output_flags(sc, scale.output);

  CrossoverFlags cross;
  auto* cr = app.add_subcommand("crossover", "Finite-temperature crossover lines");
  cr->add_option("--gamma", cross.gamma, "Anisotropy (non-zero)")->capture_default_str();
  cr->add_option("--t-list", cross.t_list, "Temperatures, comma separated")->capture_default_str();
  cr->add_option("--quantity", cross.quantity, "dmzdt, bvp or both")->capture_default_str();
  cr->add_option("--u-min", cross.u_min, "Closest ridge offset (lambda - 1)/T")->capture_default_str();
  cr->add_option("--u-max", cross.u_max, "Farthest ridge offset (lambda - 1)/T")->capture_default_str();
  cr->add_option("--u-step", cross.u_step, "Offset step")->capture_default_str();
  cr->add_option("--window-ratio", cross.window_ratio, "Window width as a multiple of T")->capture_default_str();
  cr->add_option("--samples", cross.samples, "Samples per window")->capture_default_str();
  add_reference_flags(cr, cross.model);
  cr->add_option("--quad-order", cross.model.quad_order, "Gauss-Legendre order per panel")->capture_default_str();
  cr->add_option("--quad-levels", cross.model.quad_levels, "Dyadic grading levels")->capture_default_str();
  cr->add_option("--quad-panels", cross.model.quad_panels, "Equal panels per half of [0, pi]")->capture_default_str();
  add_output_flags(cr, cross.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (d->parsed()) return cmd_digits(digits, args, out);
    if (s->parsed()) return cmd_scan(scan_flags, args, out);
    if (sc->parsed()) return cmd_scale(scale, args, out);
    if (cr->parsed()) return cmd_crossover(cross, args, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DegenerateWindowError& e) {
    err << "degenerate data: " << e.what() << "\n";
    return kDegenerate;
  } catch (const EmptyHistogramError& e) {
    err << "degenerate data: " << e.what() << "\n";
    return kDegenerate;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  }
  return kConfigError;
}

} // namespace bxy::cli
