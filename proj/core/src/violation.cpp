#include "benfordxy/violation.hpp"

#include <cmath>
#include <limits>

#include "benfordxy/error.hpp"

namespace bxy {

double violation(const DigitHistogram& hist, const ReferenceDistribution& dist, Metric metric,
                 FrequencyMode mode) {
  if (hist.total == 0) throw EmptyHistogramError("violation: histogram has no counted digits");
  const DigitProbabilities p = probabilities(dist);
  const double n = static_cast<double>(hist.total);
  const bool raw = mode == FrequencyMode::RawCounts;

  switch (metric) {
  case Metric::MeanDeviation: {
    double sum = 0.0;
    for (int d = 1; d <= 9; ++d) {
      const double e = n * p[d - 1];
      sum += std::abs(static_cast<double>(hist.count(d)) - e) / e;
    }
    return sum;
  }
  case Metric::StandardDeviation: {
    double sum = 0.0;
    for (int d = 1; d <= 9; ++d) {
      const double o = raw ? static_cast<double>(hist.count(d)) : hist.count(d) / n;
      const double e = raw ? n * p[d - 1] : p[d - 1];
      sum += (o - e) * (o - e);
    }
    return std::sqrt(sum) / 3.0;
  }
  case Metric::Bhattacharya: {
    double coeff = 0.0;
    for (int d = 1; d <= 9; ++d) {
      const double o = raw ? static_cast<double>(hist.count(d)) : hist.count(d) / n;
      const double e = raw ? n * p[d - 1] : p[d - 1];
      coeff += std::sqrt(o * e);
    }
    if (coeff <= 0.0) return std::numeric_limits<double>::infinity();
    // Rounding can push the coefficient a hair above 1 for identical laws.
    if (!raw && coeff > 1.0) coeff = 1.0;
    return -std::log(coeff);
  }
  }
  return 0.0;
}

std::string_view to_string(Metric metric) {
  switch (metric) {
  case Metric::MeanDeviation:
    return "mean";
  case Metric::StandardDeviation:
    return "sd";
  case Metric::Bhattacharya:
    return "bhattacharya";
  }
  return "unknown";
}

} // namespace bxy
