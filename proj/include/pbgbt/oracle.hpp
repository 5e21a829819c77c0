#pragma once

#include <functional>
#include <vector>

#include "pbgbt/eigensystem.hpp"
#include "pbgbt/norm_series.hpp"

namespace pbgbt {

// Independent quadrature for every integral the closed forms claim. Nothing
// here uses moment expansions or the closed-form norm formulas.

enum class QuadratureRule { ScaledHermiteGauss, AdaptiveTruncated };

enum class Line { Full, Half };

struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::ScaledHermiteGauss;
  int node_count = 0;              ///< 0 picks a count from the integrand degree
  double truncation_radius = 0.0;  ///< 0 searches for one
  double target_rel_tol = 1e-13;

  void check() const;
};

struct QuadResult {
  Complex value;
  double error_estimate = 0.0;  ///< |Q(N) - Q(2N)|, or the analogue for adaptive rules
  int nodes = 0;
};

/// Gauss-Hermite nodes for weight exp(-t^2), with weights stored as
/// w_i exp(t_i^2) so that  int F dt ~ sum scaled_weights[i] F(nodes[i]).
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> scaled_weights;
};

/// Cached per node count; safe to call concurrently.
const HermiteRule& hermite_rule(int n);

using RealFunction = std::function<Complex(double)>;

/// int conj(f) g over the full (or half) line. Gaussian-polynomial operands
/// use Hermite nodes rescaled to the product's Gaussian width (full line only).
QuadResult quad_inner(const GaussPolyx& f, const GaussPolyx& g, const QuadratureSpec& spec = {},
                      Line line = Line::Full);
QuadResult quad_inner(const GaussPolyd& f, const GaussPolyd& g, const QuadratureSpec& spec = {},
                      Line line = Line::Full);

/// Callable operands always use the adaptive truncated rule.
QuadResult quad_inner(const RealFunction& f, const RealFunction& g, const QuadratureSpec& spec = {},
                      Line line = Line::Full);

/// int F dx with the adaptive truncated rule. Throws NonIntegrableError when no
/// radius makes |F| at the boundary < 1e-18 of its peak.
QuadResult quad_integral(const RealFunction& integrand, const QuadratureSpec& spec = {},
                         Line line = Line::Full);

/// phi_n(x) and Psi_n(x), n = 0..n_max, by stepping the ladder relation
/// together with the eigenvalue equation of the number operator.
struct MemberValues {
  std::vector<Complex> phi;
  std::vector<Complex> psi;
};
MemberValues evaluate_members(const GbtParams& params, const NormalizationConvention& convention,
                              int n_max, double x);

struct OracleNormSeries {
  NormSeries phi;
  NormSeries psi;
  std::vector<double> phi_error;  ///< relative |Q(N)-Q(2N)| / Q(2N)
  std::vector<double> psi_error;
};

/// ||phi_n||^2 and ||Psi_n||^2 by Gauss-Hermite quadrature of the pointwise
/// values, exact up to rounding for real-width Gaussians.
OracleNormSeries quad_norm_series(const EigenFamily& family, int n_max,
                                  const QuadratureSpec& spec = {});
OracleNormSeries quad_norm_series(const GbtParams& params, const NormalizationConvention& convention,
                                  int n_max, const QuadratureSpec& spec = {});

}  // namespace pbgbt
