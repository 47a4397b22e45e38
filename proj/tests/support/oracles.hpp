#pragma once

// Reference computations that share no code path with the library: normal
// equations at extended precision, composite Simpson quadrature, shortest
// round-trip decimals through printf/strtod, and pseudo-random generators
// with fixed seeds.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace oracle {

/// Least-squares polynomial from the normal equations, solved by Gaussian
/// elimination with partial pivoting in long double. Constant-first.
inline std::vector<long double> normal_equations_fit(const std::vector<double>& x, const std::vector<double>& y,
                                                     int degree) {
  const int m = degree + 1;
  std::vector<std::vector<long double>> a(m, std::vector<long double>(m + 1, 0.0L));
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<long double> pw(2 * m, 1.0L);
    for (int j = 1; j < 2 * m; ++j) pw[j] = pw[j - 1] * x[k];
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) a[r][c] += pw[r + c];
      a[r][m] += pw[r] * y[k];
    }
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (int r = col + 1; r < m; ++r) {
      const long double f = a[r][col] / a[col][col];
      for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<long double> coef(m);
  for (int r = m - 1; r >= 0; --r) {
    long double s = a[r][m];
    for (int c = r + 1; c < m; ++c) s -= a[r][c] * coef[c];
    coef[r] = s / a[r][r];
  }
  return coef;
}

/// Composite Simpson rule with `intervals` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  long double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
  return static_cast<double>(s * h / 3.0L);
}

/// Ground-state Mz and G(R) of the infinite chain by Simpson quadrature.
inline double mz_ground(double lambda, double gamma, int intervals = 200000) {
  const double pi = std::numbers::pi;
  return -simpson(
             [&](double phi) {
               const double d = std::cos(phi) - lambda;
               const double s = gamma * std::sin(phi);
               const double l = std::sqrt(s * s + d * d);
               return l == 0.0 ? 0.0 : d / l;
             },
             0.0, pi, intervals) /
         pi;
}

inline double g_ground(int r, double lambda, double gamma, int intervals = 200000) {
  const double pi = std::numbers::pi;
  return simpson(
             [&](double phi) {
               const double d = std::cos(phi) - lambda;
               const double s = gamma * std::sin(phi);
               const double l = std::sqrt(s * s + d * d);
               return l == 0.0 ? 0.0 : (gamma * std::sin(phi * r) * std::sin(phi) - std::cos(phi) * d) / l;
             },
             0.0, pi, intervals) /
         pi;
}

/// Central difference [Mz(T+h) - Mz(T-h)] / 2h of the infinite-chain
/// magnetization, free of cancellation: with F(y) = 1/(e^y + 1),
/// tanh(y/2) = 1 - 2F(y), so the T-independent part drops out exactly and
/// F(y1) - F(y2) = F(y2) expm1(y2 - y1) / (1 + e^-y1) is formed without
/// subtracting nearly equal numbers. Composite Simpson on dyadic segments
/// [2^-k pi, 2^(1-k) pi] resolves the structure of width ~T at phi = 0.
inline double dmz_dT_central(double lambda, double gamma, double t, double h) {
  const double pi = std::numbers::pi;
  const double gap_scale = 2.0 * h / ((t - h) * (t + h));
  auto f = [&](double phi) {
    const double d = std::cos(phi) - lambda;
    const double s = gamma * std::sin(phi);
    const double l = std::sqrt(s * s + d * d);
    if (l == 0.0) return 0.0;
    const double y1 = l / (t + h);
    const double y2 = l / (t - h);
    // F(y1) - F(y2) = F(y2) expm1(y2 - y1) / (1 + e^-y1), y2 - y1 = l * gap_scale
    const double diff = std::expm1(l * gap_scale) / ((std::exp(y2) + 1.0) * (1.0 + std::exp(-y1)));
    return diff * d / l;
  };
  long double total = 0;
  double hi = pi;
  for (int k = 1; k <= 60; ++k) {
    const double lo = std::ldexp(pi, -k);
    total += simpson(f, lo, hi, 2000);
    hi = lo;
  }
  total += simpson(f, 0.0, hi, 2000);
  return static_cast<double>(2.0L * total / pi / (2.0L * h));
}

/// Leading digit of the shortest "%.*e" rendering that strtod maps back to
/// x, found by trying precisions 0..16 through the C library.
inline int printf_first_digit(double x) {
  std::array<char, 64> buf;
  const double a = std::fabs(x);
  for (int prec = 0; prec <= 16; ++prec) {
    std::snprintf(buf.data(), buf.size(), "%.*e", prec, a);
    if (std::strtod(buf.data(), nullptr) == a) break;
  }
  return buf[0] - '0';
}

/// 10^u with u uniform on [0, 1): exactly Benford-distributed mantissas.
inline std::vector<double> log_mantissa_samples(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> decade(-20, 20);
  std::vector<double> v(n);
  for (auto& x : v) x = std::pow(10.0, u(rng) + decade(rng));
  return v;
}

inline double benford_probability(int d) { return std::log10(1.0 + 1.0 / d); }

} // namespace oracle
