#include <gtest/gtest.h>

#include <cmath>

#include "benfordxy/error.hpp"
#include "benfordxy/violation.hpp"
#include "oracles.hpp"

using namespace bxy;

namespace {

constexpr Metric kMetrics[] = {Metric::MeanDeviation, Metric::StandardDeviation, Metric::Bhattacharya};

DigitHistogram from_counts(const std::array<std::uint64_t, 9>& counts) {
  DigitHistogram h;
  h.counts = counts;
  for (auto c : counts) h.total += c;
  return h;
}

constexpr double kScale = 1e18;

// Counts proportional to the reference law up to rounding at kScale.
DigitHistogram proportional(const ReferenceDistribution& dist) {
  std::array<std::uint64_t, 9> c{};
  const auto p = probabilities(dist);
  for (int d = 0; d < 9; ++d) c[d] = static_cast<std::uint64_t>(std::llround(p[d] * kScale));
  return from_counts(c);
}

// Integer counts cannot be exactly proportional to irrational probabilities:
// each O_D is off by <= 1/2 (plus double rounding of O_D), so the mean
// deviation picks up sum_D 1 / E_D at most. Small Poisson tails make this
// the dominant term.
double rounding_bound(const ReferenceDistribution& dist) {
  double b = 0;
  for (double p : probabilities(dist)) b += 1.0 / (p * kScale);
  return b;
}

} // namespace

TEST(Violation, PerfectConformityIsZero) {
  for (auto dist : {ReferenceDistribution::benford(), ReferenceDistribution::uniform(),
                    ReferenceDistribution::poisson(1), ReferenceDistribution::poisson(10)}) {
    const auto h = proportional(dist);
    for (Metric m : kMetrics) {
      EXPECT_NEAR(violation(h, dist, m), 0.0, 1e-12 + rounding_bound(dist)) << dist.name() << " " << to_string(m);
    }
  }
}

TEST(Violation, UniformCountsAgainstBenford) {
  const auto h = from_counts({100, 100, 100, 100, 100, 100, 100, 100, 100});
  double expected = 0;
  for (int d = 1; d <= 9; ++d) expected += std::abs(1.0 / (9 * oracle::benford_probability(d)) - 1.0);
  const double v = violation(h, ReferenceDistribution::benford(), Metric::MeanDeviation);
  EXPECT_NEAR(v, expected, 1e-12);
  EXPECT_NEAR(v, 5.8365, 1e-4);
}

TEST(Violation, UniformCountsAgainstUniform) {
  const auto h = from_counts({100, 100, 100, 100, 100, 100, 100, 100, 100});
  const auto u = ReferenceDistribution::uniform();
  for (Metric m : kMetrics) EXPECT_NEAR(violation(h, u, m), 0.0, 1e-12);
  EXPECT_NEAR(violation(h, u, Metric::MeanDeviation, FrequencyMode::RawCounts), 0.0, 1e-12);
  EXPECT_NEAR(violation(h, u, Metric::StandardDeviation, FrequencyMode::RawCounts), 0.0, 1e-12);
}

TEST(Violation, RawCountBhattacharyaIsNotNormalized) {
  // -ln sum sqrt(O_D E_D) with counts: at conformity the sum is the total,
  // so the value is -ln(n) rather than 0.
  const auto h = from_counts({100, 100, 100, 100, 100, 100, 100, 100, 100});
  EXPECT_NEAR(violation(h, ReferenceDistribution::uniform(), Metric::Bhattacharya, FrequencyMode::RawCounts),
              -std::log(900.0), 1e-12);
}

TEST(Violation, BhattacharyaIsSymmetric) {
  // Swap the roles of observed and reference: uniform data against Benford
  // equals Benford data against uniform.
  const auto uniform_data = from_counts({100, 100, 100, 100, 100, 100, 100, 100, 100});
  const auto benford_data = proportional(ReferenceDistribution::benford());
  EXPECT_NEAR(violation(uniform_data, ReferenceDistribution::benford(), Metric::Bhattacharya),
              violation(benford_data, ReferenceDistribution::uniform(), Metric::Bhattacharya), 1e-12);
}

TEST(Violation, MissingDigitContributesOneToMeanDeviation) {
  const auto h = from_counts({900, 0, 0, 0, 0, 0, 0, 0, 0});
  // |900 - 100|/100 + 8 * 1
  EXPECT_NEAR(violation(h, ReferenceDistribution::uniform(), Metric::MeanDeviation), 16.0, 1e-12);
  EXPECT_NEAR(violation(h, ReferenceDistribution::uniform(), Metric::Bhattacharya), -std::log(1.0 / 3.0), 1e-12);
}

TEST(Violation, RawCountsMode) {
  const auto h = from_counts({900, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto u = ReferenceDistribution::uniform();
  // (1/3) sqrt(800^2 + 8 * 100^2)
  EXPECT_NEAR(violation(h, u, Metric::StandardDeviation, FrequencyMode::RawCounts),
              std::sqrt(800.0 * 800 + 8 * 100.0 * 100) / 3, 1e-9);
  EXPECT_NEAR(violation(h, u, Metric::StandardDeviation),
              std::sqrt((8.0 / 9) * (8.0 / 9) + 8.0 / 81) / 3, 1e-12);
  EXPECT_EQ(violation(h, u, Metric::MeanDeviation, FrequencyMode::RawCounts),
            violation(h, u, Metric::MeanDeviation));
}

TEST(Violation, EmptyHistogram) {
  DigitHistogram h;
  for (Metric m : kMetrics) EXPECT_THROW(violation(h, ReferenceDistribution::benford(), m), EmptyHistogramError);
}

TEST(Violation, MetricNames) {
  EXPECT_EQ(to_string(Metric::MeanDeviation), "mean");
  EXPECT_EQ(to_string(Metric::StandardDeviation), "sd");
  EXPECT_EQ(to_string(Metric::Bhattacharya), "bhattacharya");
}
