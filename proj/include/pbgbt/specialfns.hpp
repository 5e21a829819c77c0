#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pbgbt/types.hpp"

namespace pbgbt {

/// Ascending-degree coefficient list of a polynomial.
template <typename Scalar>
using PolyCoeffs = std::vector<Scalar>;

inline constexpr int kMaxPolynomialDegree = 500;

/// A magnitude kept as its natural log plus a unit phase, so that values far
/// outside double range survive products and powers.
struct LogMagnitude {
  double log_abs = 0.0;
  Complex phase{1.0, 0.0};
  bool zero = false;

  static LogMagnitude from_log(double log_abs, Complex phase = {1.0, 0.0}) {
    return {log_abs, phase, false};
  }

  static LogMagnitude from_value(Complex v) {
    if (v == Complex{}) return {0.0, {1.0, 0.0}, true};
    const double a = std::abs(v);
    return {std::log(a), v / a, false};
  }

  static LogMagnitude from_value(double v) { return from_value(Complex{v, 0.0}); }

  Complex value() const { return zero ? Complex{} : phase * std::exp(log_abs); }
  double real_value() const { return value().real(); }

  friend LogMagnitude operator*(const LogMagnitude& a, const LogMagnitude& b) {
    if (a.zero || b.zero) return {0.0, {1.0, 0.0}, true};
    return {a.log_abs + b.log_abs, a.phase * b.phase, false};
  }

  friend LogMagnitude operator/(const LogMagnitude& a, const LogMagnitude& b) {
    if (b.zero) throw DomainError("LogMagnitude: division by zero");
    if (a.zero) return a;
    return {a.log_abs - b.log_abs, a.phase / b.phase, false};
  }
};

inline void check_degree(int n) {
  if (n < 0) throw DomainError("negative polynomial degree");
  if (n > kMaxPolynomialDegree)
    throw ConfigurationError("polynomial degree " + std::to_string(n) +
                             " exceeds configured maximum " +
                             std::to_string(kMaxPolynomialDegree));
}

/// Physicists' Hermite polynomial H_n as coefficients,
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
template <typename Scalar = Complex>
PolyCoeffs<Scalar> hermite_coeffs(int n) {
  check_degree(n);
  PolyCoeffs<Scalar> prev{Scalar(1)};
  if (n == 0) return prev;
  PolyCoeffs<Scalar> cur{Scalar(0), Scalar(2)};
  for (int k = 1; k < n; ++k) {
    PolyCoeffs<Scalar> next(static_cast<std::size_t>(k) + 2, Scalar(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += Scalar(2) * cur[i];
    const Scalar two_k(2.0 * k);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= two_k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Legendre P_n(x) for x >= 1 by the three-term recurrence, in log scale.
/// Arguments within 1e-12 below one are treated as one.
inline LogMagnitude legendre_eval(int n, double x) {
  check_degree(n);
  if (!(x >= 1.0 - 1e-12))
    throw DomainError("legendre_eval: argument " + std::to_string(x) + " < 1");
  if (x < 1.0) x = 1.0;
  if (n == 0) return LogMagnitude::from_log(0.0);
  // all iterates are >= 1 here, so rescaling never meets a cancellation
  double p_prev = 1.0, p = x, log_scale = 0.0;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
    p_prev = p;
    p = next;
    if (p > 1e150) {
      p_prev /= p;
      log_scale += std::log(p);
      p = 1.0;
    }
  }
  return LogMagnitude::from_log(log_scale + std::log(p));
}

/// Large-degree form (2 pi n)^{-1/2} (x^2-1)^{-1/4} (x + sqrt(x^2-1))^{n+1/2},
/// valid for x > 1.
inline LogMagnitude legendre_asymptotic(int n, double x) {
  if (n < 1) throw DomainError("legendre_asymptotic: n must be >= 1");
  if (!(x > 1.0)) throw DomainError("legendre_asymptotic: requires x > 1");
  const double w = std::sqrt((x - 1.0) * (x + 1.0));
  const double log_val = -0.5 * std::log(2.0 * pi<double>() * n) - 0.25 * std::log(w * w) +
                         (n + 0.5) * std::log(x + w);
  return LogMagnitude::from_log(log_val);
}

/// All moments int x^m exp(-sigma x^2) dx for m = 0..m_max on the real line,
/// principal branch of sigma^{-1/2}.
template <typename Scalar>
std::vector<Scalar> gaussian_moments(int m_max, const Scalar& sigma) {
  using std::real;
  using std::sqrt;
  if (!(real(sigma) > 0))
    throw NonIntegrableError("gaussian_moment: Re(sigma) must be positive");
  std::vector<Scalar> out(static_cast<std::size_t>(m_max) + 1, Scalar(0));
  const Scalar base = sqrt(Scalar(pi<RealOf<Scalar>>()) / sigma);
  const Scalar inv_two_sigma = Scalar(1) / (Scalar(2) * sigma);
  Scalar even = base;
  for (int m = 0; m <= m_max; m += 2) {
    out[static_cast<std::size_t>(m)] = even;
    even *= Scalar(RealOf<Scalar>(m + 1)) * inv_two_sigma;
  }
  return out;
}

/// int x^m exp(-sigma x^2) dx over the real line.
template <typename Scalar>
Scalar gaussian_moment(int m, const Scalar& sigma) {
  if (m < 0) throw DomainError("gaussian_moment: negative order");
  return gaussian_moments<Scalar>(m, sigma)[static_cast<std::size_t>(m)];
}

}  // namespace pbgbt
