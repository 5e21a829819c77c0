#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbgbt/eigensystem.hpp"
#include "pbgbt/norm_series.hpp"
#include "pbgbt/oracle.hpp"

namespace pbgbt {

/// Gaussian half-line integral of a Hermite product:
///   int_0^inf exp(-p x^2) H_n(b x) H_n(c x) dx
///   = 2^{n-1} n! sqrt(pi) p^{-(n+1)/2} (b^2+c^2-p)^{n/2} P_n(bc / sqrt(p (b^2+c^2-p)))
/// in log scale, principal branches. Real inputs whose Legendre argument is
/// real but below one are reported as a DomainError.
LogMagnitude prudnikov_halfline(Complex p, Complex b, Complex c, int n);

/// n-independent constant multiplying |N|^2 in the closed-form norms. Direct
/// integration over the full line gives sqrt(pi); the half-line constant
/// sqrt(pi)/2 is kept for comparison.
inline double derived_norm_constant() { return std::sqrt(pi<double>()); }
inline double halfline_norm_constant() { return std::sqrt(pi<double>()) / 2.0; }

/// ln ||phi_n||^2 = ln[ C |N_phi|^2 ((a+g)/(b+d))^n ((b+d)/(b-d))^{(n+1)/2}
///                      ((g-a)/(g+a))^{n/2} P_n(s) ],
/// s = ((b^2-d^2)(g^2-a^2))^{-1/2}. Real ordered parameters only; anything
/// else throws UseOracleError.
LogMagnitude norm_sq_phi(const GbtParams& params, int n, const NormalizationConvention& convention,
                         double constant = derived_norm_constant());

/// Mirror of norm_sq_phi under (beta, delta) <-> (gamma, alpha).
LogMagnitude norm_sq_psi(const GbtParams& params, int n, const NormalizationConvention& convention,
                         double constant = derived_norm_constant());

std::pair<NormSeries, NormSeries> closed_form_norm_series(
    const GbtParams& params, const NormalizationConvention& convention, int n_max,
    double constant = derived_norm_constant());

/// C |N|^2 measured by quadrature of ||phi_0||^2 and ||Psi_0||^2 against the
/// closed-form candidates.
struct PrefactorCalibration {
  double measured_phi = 0.0;  ///< oracle ||phi_0||^2 / sqrt((b+d)/(b-d))
  double measured_psi = 0.0;
  double derived_phi = 0.0;  ///< sqrt(pi) |N_phi|^2
  double derived_psi = 0.0;
  double halfline_phi = 0.0;  ///< sqrt(pi)/2 |N_phi|^2
  double halfline_psi = 0.0;
  double rel_dev_phi = 0.0;  ///< |measured/derived - 1|
  double rel_dev_psi = 0.0;
  /// measured / (sqrt(pi) |N|^2); 1 means the full-line constant is right.
  double measured_constant() const { return measured_phi / derived_phi * derived_norm_constant(); }
};

PrefactorCalibration calibrate_prefactor(const GbtParams& params,
                                         const NormalizationConvention& convention,
                                         const QuadratureSpec& spec = {});

enum class Trend { Diverges, Vanishes, Bounded };

std::string to_string(Trend t);

/// Growth classification of a base against one, with |base - 1| <= 1e-12
/// counted as bounded.
Trend classify_trend(double base);

struct AsymptoticsReport {
  double x = 0.0;  ///< growth base of ||phi_n||^2
  double y = 0.0;  ///< growth base of ||Psi_n||^2
  double s = 1.0;  ///< Legendre argument
  double anomaly = 0.0;
  /// Legendre large-degree constant; empty when s == 1, where P_n(s) = 1.
  std::optional<double> a_const;
  double a_phi = 0.0;  ///< ||phi_n||^2 ~ a_phi x^n / sqrt(n)  (or a_phi x^n when s == 1)
  double a_psi = 0.0;
  double a_phi_halfline = 0.0;  ///< same with the sqrt(pi)/2 constant
  double a_psi_halfline = 0.0;
  double product_base = 0.0;  ///< x y
  Trend phi_trend = Trend::Bounded;
  Trend psi_trend = Trend::Bounded;
  Trend product_trend = Trend::Bounded;
  ConventionKind convention = ConventionKind::Default;
};

AsymptoticsReport asymptotics(const GbtParams& params,
                              const NormalizationConvention& convention);
AsymptoticsReport asymptotics(const GbtParams& params);

struct ProductTrendReport {
  std::vector<double> log_product;  ///< ln(||phi_n||^2 ||Psi_n||^2), convention independent
  bool anomaly_zero = false;
  double max_rel_variation = 0.0;  ///< max |prod_n / prod_0 - 1|
  std::optional<double> fitted_slope;
  double expected_slope = 0.0;  ///< ln((1+|anomaly|)/(1-|anomaly|))
  int fit_from = 0;
  int fit_to = 0;
};

/// Least-squares slope of the log product over [fit_from, n_max]; fit_from < 0
/// picks 50 when n_max >= 100 and n_max/2 otherwise.
ProductTrendReport norm_product_trend(const GbtParams& params, int n_max, int fit_from = -1);

/// Least-squares slope of ys against xs.
double fitted_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace pbgbt
