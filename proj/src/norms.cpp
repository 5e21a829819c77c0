#include "pbgbt/norms.hpp"

#include <cmath>

namespace pbgbt {

namespace {

constexpr double kUnitTolerance = 1e-12;

struct RealParams {
  double al, be, ga, de;
};

RealParams require_real_ordered(const GbtParams& p, const char* who) {
  if (!is_real_ordered(p))
    throw UseOracleError(std::string(who) +
                         ": closed form needs real parameters with beta>|delta|, gamma>|alpha|");
  return {p.alpha.real(), p.beta.real(), p.gamma.real(), p.delta.real()};
}

double legendre_argument(const RealParams& r) {
  const double prod = (r.be * r.be - r.de * r.de) * (r.ga * r.ga - r.al * r.al);
  return 1.0 / std::sqrt(prod);
}

/// P_n(z) for complex z by the rescaled three-term recurrence.
LogMagnitude legendre_complex(int n, Complex z) {
  if (n == 0) return LogMagnitude::from_log(0.0);
  Complex pm1{1.0, 0.0}, p = z;
  double log_scale = 0.0;
  for (int k = 1; k < n; ++k) {
    const Complex next = ((2.0 * k + 1.0) * z * p - double(k) * pm1) / (k + 1.0);
    pm1 = p;
    p = next;
    const double mag = std::abs(p);
    if (mag > 1e150) {
      pm1 /= mag;
      p /= mag;
      log_scale += std::log(mag);
    }
  }
  auto out = LogMagnitude::from_value(p);
  if (!out.zero) out.log_abs += log_scale;
  return out;
}

}  // namespace

LogMagnitude prudnikov_halfline(Complex p, Complex b, Complex c, int n) {
  check_degree(n);
  if (!(p.real() > 0.0)) throw DomainError("prudnikov_halfline: Re(p) must be positive");
  const Complex w = b * b + c * c - p;
  const double log_const =
      (n - 1) * std::log(2.0) + std::lgamma(n + 1.0) + 0.5 * std::log(pi<double>());
  auto prefactor = LogMagnitude::from_log(0.0);
  {
    const Complex lg = -0.5 * (n + 1.0) * std::log(p) + (n == 0 ? Complex{} : 0.5 * n * std::log(w));
    prefactor = LogMagnitude::from_log(log_const + lg.real(), std::exp(Complex{0.0, lg.imag()}));
  }
  if (n == 0) return prefactor;
  const Complex arg = b * c / std::sqrt(p * w);
  const bool real_inputs = p.imag() == 0.0 && b.imag() == 0.0 && c.imag() == 0.0;
  if (std::abs(arg.imag()) <= 1e-14 * std::abs(arg) && arg.real() >= 1.0 - kUnitTolerance)
    return prefactor * legendre_eval(n, arg.real());
  if (real_inputs && std::abs(arg.imag()) <= 1e-14 * std::abs(arg))
    throw DomainError("prudnikov_halfline: real Legendre argument below one");
  return prefactor * legendre_complex(n, arg);
}

LogMagnitude norm_sq_phi(const GbtParams& params, int n, const NormalizationConvention& conv,
                         double constant) {
  check_degree(n);
  const auto r = require_real_ordered(params, "norm_sq_phi");
  const double s = legendre_argument(r);
  const double log_val = std::log(constant) + 2.0 * std::log(std::abs(conv.n_phi)) +
                         n * std::log((r.al + r.ga) / (r.be + r.de)) +
                         0.5 * (n + 1) * std::log((r.be + r.de) / (r.be - r.de)) +
                         0.5 * n * std::log((r.ga - r.al) / (r.ga + r.al));
  return LogMagnitude::from_log(log_val) * legendre_eval(n, s);
}

LogMagnitude norm_sq_psi(const GbtParams& params, int n, const NormalizationConvention& conv,
                         double constant) {
  check_degree(n);
  const auto r = require_real_ordered(params, "norm_sq_psi");
  const double s = legendre_argument(r);
  const double log_val = std::log(constant) + 2.0 * std::log(std::abs(conv.n_psi)) +
                         n * std::log((r.de + r.be) / (r.ga + r.al)) +
                         0.5 * (n + 1) * std::log((r.ga + r.al) / (r.ga - r.al)) +
                         0.5 * n * std::log((r.be - r.de) / (r.be + r.de));
  return LogMagnitude::from_log(log_val) * legendre_eval(n, s);
}

std::pair<NormSeries, NormSeries> closed_form_norm_series(const GbtParams& params,
                                                          const NormalizationConvention& conv,
                                                          int n_max, double constant) {
  NormSeries phi{params, {}, NormSource::ClosedForm};
  NormSeries psi{params, {}, NormSource::ClosedForm};
  for (int n = 0; n <= n_max; ++n) {
    phi.values.push_back(norm_sq_phi(params, n, conv, constant));
    psi.values.push_back(norm_sq_psi(params, n, conv, constant));
  }
  return {std::move(phi), std::move(psi)};
}

PrefactorCalibration calibrate_prefactor(const GbtParams& params,
                                         const NormalizationConvention& conv,
                                         const QuadratureSpec& spec) {
  const auto r = require_real_ordered(params, "calibrate_prefactor");
  const auto oracle = quad_norm_series(params, conv, 0, spec);
  PrefactorCalibration cal;
  const double n_phi_sq = std::norm(conv.n_phi), n_psi_sq = std::norm(conv.n_psi);
  cal.measured_phi = oracle.phi.values[0].real_value() / std::sqrt((r.be + r.de) / (r.be - r.de));
  cal.measured_psi = oracle.psi.values[0].real_value() / std::sqrt((r.ga + r.al) / (r.ga - r.al));
  cal.derived_phi = derived_norm_constant() * n_phi_sq;
  cal.derived_psi = derived_norm_constant() * n_psi_sq;
  cal.halfline_phi = halfline_norm_constant() * n_phi_sq;
  cal.halfline_psi = halfline_norm_constant() * n_psi_sq;
  cal.rel_dev_phi = std::abs(cal.measured_phi / cal.derived_phi - 1.0);
  cal.rel_dev_psi = std::abs(cal.measured_psi / cal.derived_psi - 1.0);
  return cal;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::Diverges: return "diverges";
    case Trend::Vanishes: return "vanishes";
    case Trend::Bounded: return "bounded";
  }
  return "?";
}

Trend classify_trend(double base) {
  if (base > 1.0 + kUnitTolerance) return Trend::Diverges;
  if (base < 1.0 - kUnitTolerance) return Trend::Vanishes;
  return Trend::Bounded;
}

AsymptoticsReport asymptotics(const GbtParams& params, const NormalizationConvention& conv) {
  const auto r = require_real_ordered(params, "asymptotics");
  const double an = std::abs(anomaly(params).real());
  if (!(an < 1.0)) throw DomainError("asymptotics: |alpha beta - gamma delta| must be < 1");

  AsymptoticsReport rep;
  rep.convention = conv.kind;
  rep.anomaly = anomaly(params).real();
  rep.x = (1.0 + an) / (r.be * r.be - r.de * r.de);
  rep.y = (1.0 + an) / (r.ga * r.ga - r.al * r.al);
  rep.s = legendre_argument(r);
  rep.product_base = rep.x * rep.y;

  const double phi_shape = std::sqrt((r.be + r.de) / (r.be - r.de));
  const double psi_shape = std::sqrt((r.ga + r.al) / (r.ga - r.al));
  const double n_phi_sq = std::norm(conv.n_phi), n_psi_sq = std::norm(conv.n_psi);
  double a = 1.0;
  if (an > kUnitTolerance) {
    const double w = std::sqrt((rep.s - 1.0) * (rep.s + 1.0));
    a = std::pow(w * w, -0.25) * std::sqrt(rep.s + w) / std::sqrt(2.0 * pi<double>());
    rep.a_const = a;
  }
  rep.a_phi = a * derived_norm_constant() * n_phi_sq * phi_shape;
  rep.a_psi = a * derived_norm_constant() * n_psi_sq * psi_shape;
  rep.a_phi_halfline = rep.a_phi / 2.0;
  rep.a_psi_halfline = rep.a_psi / 2.0;

  rep.phi_trend = classify_trend(rep.x);
  rep.psi_trend = classify_trend(rep.y);
  rep.product_trend = classify_trend(rep.product_base);
  return rep;
}

AsymptoticsReport asymptotics(const GbtParams& params) {
  return asymptotics(params, NormalizationConvention::make(params));
}

double fitted_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("fitted_slope: need >= 2 points");
  const auto m = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd design(m, 2);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = xs[static_cast<std::size_t>(i)];
    rhs(i) = ys[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  return coef(1);
}

ProductTrendReport norm_product_trend(const GbtParams& params, int n_max, int fit_from) {
  require_real_ordered(params, "norm_product_trend");
  const auto conv = NormalizationConvention::make(params);
  const auto [phi, psi] = closed_form_norm_series(params, conv, n_max);
  ProductTrendReport rep;
  const double an = std::abs(anomaly(params).real());
  if (!(an < 1.0)) throw DomainError("norm_product_trend: |anomaly| must be < 1");
  rep.anomaly_zero = an <= kUnitTolerance;
  rep.expected_slope = std::log((1.0 + an) / (1.0 - an));
  for (int n = 0; n <= n_max; ++n) rep.log_product.push_back(phi.log_at(n) + psi.log_at(n));
  for (int n = 0; n <= n_max; ++n)
    rep.max_rel_variation = std::max(
        rep.max_rel_variation,
        std::abs(std::expm1(rep.log_product[static_cast<std::size_t>(n)] - rep.log_product[0])));

  if (fit_from < 0) fit_from = n_max >= 100 ? 50 : n_max / 2;
  if (n_max - fit_from >= 1) {
    std::vector<double> xs, ys;
    for (int n = fit_from; n <= n_max; ++n) {
      xs.push_back(n);
      ys.push_back(rep.log_product[static_cast<std::size_t>(n)]);
    }
    rep.fitted_slope = fitted_slope(xs, ys);
    rep.fit_from = fit_from;
    rep.fit_to = n_max;
  }
  return rep;
}

}  // namespace pbgbt
