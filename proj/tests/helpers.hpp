#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "pbgbt/quasibasis.hpp"

namespace testing {

inline pbgbt::GbtParams case_d() { return {2.0 / 3.0, 2.0, 1.0, 1.5}; }
inline pbgbt::GbtParams case_a() { return {1.0, 2.0, 1.0, 1.0}; }
inline pbgbt::GbtParams case_b() { return {1.0, 1.0, 2.0, 1.0}; }
inline pbgbt::GbtParams case_c() { return {-1.5, 0.25, 1.0, 0.5}; }

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// H_n(x) by the value recurrence, in log scale: returns (log|H_n|, sign).
inline std::pair<double, int> hermite_value(int n, double x) {
  double hm1 = 1.0, h = 2.0 * x, scale = 0.0;
  if (n == 0) return {0.0, 1};
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * h - 2.0 * k * hm1;
    hm1 = h;
    h = next;
    if (std::abs(h) > 1e100) {
      h *= 1e-100;
      hm1 *= 1e-100;
      scale += 100.0 * std::log(10.0);
    }
  }
  return {std::log(std::abs(h)) + scale, h < 0 ? -1 : 1};
}

/// P_n(x) by the plain three-term recurrence (no rescaling), n small.
inline double legendre_plain(int n, double x) {
  double pm1 = 1.0, p = x;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0) * x * p - k * pm1) / (k + 1.0);
    pm1 = p;
    p = next;
  }
  return p;
}

}  // namespace testing
