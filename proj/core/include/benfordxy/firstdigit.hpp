#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bxy {

/// Leading nonzero decimal digit of |x|, read from the shortest decimal
/// representation that round-trips to x; nullopt for x == 0.
/// Throws DomainError for NaN or infinity.
std::optional<int> first_significant_digit(double x);

/// Affine map of the window onto [0, 1]: (q - min)/(max - min).
/// Throws DegenerateWindowError when fewer than two values are given or all
/// values are equal.
std::vector<double> rescale_unit(std::span<const double> values);

/// Tally of first significant digits. counts[d - 1] holds digit d.
struct DigitHistogram {
  std::array<std::uint64_t, 9> counts{};
  std::uint64_t total = 0;
  std::uint64_t skipped = 0; ///< values without a significant digit (zeros)

  void add(double x);
  std::uint64_t count(int digit) const { return counts.at(static_cast<std::size_t>(digit - 1)); }
  double frequency(int digit) const;
  DigitHistogram& operator+=(const DigitHistogram& other);
  friend bool operator==(const DigitHistogram&, const DigitHistogram&) = default;
};

DigitHistogram histogram(std::span<const double> values);

enum class DistributionKind { Benford, Uniform, Poisson };

/// Expected first-digit law.
struct ReferenceDistribution {
  DistributionKind kind = DistributionKind::Benford;
  double kappa = 0.0; ///< Poisson rate, > 0; unused otherwise

  static ReferenceDistribution benford() { return {DistributionKind::Benford, 0.0}; }
  static ReferenceDistribution uniform() { return {DistributionKind::Uniform, 0.0}; }
  /// Throws DomainError unless kappa is finite and positive.
  static ReferenceDistribution poisson(double kappa);

  std::string name() const;
};

using DigitProbabilities = std::array<double, 9>;

/// P_D for D = 1..9, normalized to sum 1. The Poisson weights kappa^D/D! are
/// renormalized over D = 1..9, so the e^-kappa factor drops out.
DigitProbabilities probabilities(const ReferenceDistribution& dist);

/// n * P_D, kept real-valued.
DigitProbabilities expected_counts(const ReferenceDistribution& dist, std::uint64_t n);

} // namespace bxy
