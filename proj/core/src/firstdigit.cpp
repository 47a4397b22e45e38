#include "benfordxy/firstdigit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "benfordxy/error.hpp"

namespace bxy {

std::optional<int> first_significant_digit(double x) {
  if (!std::isfinite(x)) throw DomainError("first_significant_digit: non-finite input");
  if (x == 0.0) return std::nullopt;
  // Leading digit of the shortest decimal that reads back as |x|: 3e-3 is
  // stored as 0.00299999..., but it is still a 3.
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(x), std::chars_format::scientific);
  if (res.ec != std::errc{}) throw DomainError("first_significant_digit: formatting failed");
  return buf[0] - '0';
}

std::vector<double> rescale_unit(std::span<const double> values) {
  if (values.size() < 2) throw DegenerateWindowError("rescale_unit: need at least two values");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("rescale_unit: non-finite value");
  if (!(hi > lo)) throw DegenerateWindowError("rescale_unit: all values are equal");
  const double span = hi - lo;
  std::vector<double> out;
  out.reserve(values.size());
  for (double q : values) {
    if (q == lo) {
      out.push_back(0.0);
    } else if (q == hi) {
      out.push_back(1.0);
    } else {
      out.push_back((q - lo) / span);
    }
  }
  return out;
}

void DigitHistogram::add(double x) {
  const auto d = first_significant_digit(x);
  if (!d) {
    ++skipped;
    return;
  }
  ++counts[static_cast<std::size_t>(*d - 1)];
  ++total;
}

double DigitHistogram::frequency(int digit) const {
  if (total == 0) throw EmptyHistogramError("frequency of an empty histogram");
  return static_cast<double>(count(digit)) / static_cast<double>(total);
}

DigitHistogram& DigitHistogram::operator+=(const DigitHistogram& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  total += other.total;
  skipped += other.skipped;
  return *this;
}

DigitHistogram histogram(std::span<const double> values) {
  DigitHistogram h;
  for (double v : values) h.add(v);
  return h;
}

ReferenceDistribution ReferenceDistribution::poisson(double kappa) {
  if (!std::isfinite(kappa) || kappa <= 0.0) throw DomainError("Poisson kappa must be > 0");
  return {DistributionKind::Poisson, kappa};
}

std::string ReferenceDistribution::name() const {
  switch (kind) {
  case DistributionKind::Benford:
    return "benford";
  case DistributionKind::Uniform:
    return "uniform";
  case DistributionKind::Poisson: {
    std::ostringstream os;
    os << "poisson(" << kappa << ")";
    return os.str();
  }
  }
  return "unknown";
}

DigitProbabilities probabilities(const ReferenceDistribution& dist) {
  DigitProbabilities p{};
  switch (dist.kind) {
  case DistributionKind::Benford:
    for (int d = 1; d <= 9; ++d) p[d - 1] = std::log10(1.0 + 1.0 / d);
    break;
  case DistributionKind::Uniform:
    p.fill(1.0 / 9.0);
    break;
  case DistributionKind::Poisson: {
    if (!(dist.kappa > 0.0) || !std::isfinite(dist.kappa)) {
      throw DomainError("Poisson kappa must be > 0");
    }
    // kappa^D / D! built incrementally; the common e^-kappa cancels.
    double w = 1.0;
    double norm = 0.0;
    for (int d = 1; d <= 9; ++d) {
      w *= dist.kappa / d;
      p[d - 1] = w;
      norm += w;
    }
    for (double& v : p) v /= norm;
    break;
  }
  }
  return p;
}

DigitProbabilities expected_counts(const ReferenceDistribution& dist, std::uint64_t n) {
  if (n == 0) throw DomainError("expected_counts: n must be >= 1");
  DigitProbabilities e = probabilities(dist);
  for (double& v : e) v *= static_cast<double>(n);
  return e;
}

} // namespace bxy
