#pragma once

#include <string>
#include <string_view>

#include "benfordxy/firstdigit.hpp"

namespace bxy {

enum class Metric { MeanDeviation, StandardDeviation, Bhattacharya };

/// What the standard-deviation and Bhattacharya metrics compare.
/// Relative compares o_D = O_D/total against P_D, so values do not depend on
/// the sample size. RawCounts plugs the counts O_D and E_D in directly.
/// MeanDeviation is a sum of ratios and is the same in both modes.
enum class FrequencyMode { Relative, RawCounts };

/// Distance between an observed first-digit histogram and a reference law:
///
///   MeanDeviation      sum_D |O_D - E_D| / E_D
///   StandardDeviation  (1/3) sqrt(sum_D (o_D - p_D)^2)
///   Bhattacharya       -ln sum_D sqrt(o_D p_D)
///
/// Throws EmptyHistogramError when hist.total == 0.
double violation(const DigitHistogram& hist, const ReferenceDistribution& dist, Metric metric,
                 FrequencyMode mode = FrequencyMode::Relative);

std::string_view to_string(Metric metric);

} // namespace bxy
