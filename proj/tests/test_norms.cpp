#include <doctest.h>

#include "helpers.hpp"

using namespace pbgbt;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

// int_0^inf e^{-p x^2} H_n(b x) H_n(c x) dx by quadrature, real inputs
double halfline_quadrature(double p, double b, double c, int n) {
  const auto hb = hermite_coeffs<Complex>(n);
  RealFunction f = [=](double x) {
    Complex u{}, v{};
    for (std::size_t i = hb.size(); i-- > 0;) {
      u = u * (b * x) + hb[i];
      v = v * (c * x) + hb[i];
    }
    return u * v * std::exp(-p * x * x);
  };
  RealFunction one = [](double) { return Complex{1.0, 0.0}; };
  return quad_inner(one, f, {}, Line::Half).value.real();
}

}  // namespace

TEST_SUITE("norms") {

TEST_CASE("half-line integral") {
  for (double p : {0.3, 1.0, 2.5})
    CHECK(prudnikov_halfline(p, 1.0, 1.0, 0).real_value() ==
          doctest::Approx(kSqrtPi / (2 * std::sqrt(p))).epsilon(1e-14));
  CHECK(prudnikov_halfline(1.0, 1.0, 1.0, 1).real_value() == doctest::Approx(kSqrtPi).epsilon(1e-14));

  const double b = 1.0 / std::sqrt(35.0 / 9.0);
  const double closed = prudnikov_halfline(1.0 / 7.0, b, b, 5).real_value();
  CHECK(testing::rel(closed, halfline_quadrature(1.0 / 7.0, b, b, 5)) <= 1e-8);
  CHECK(testing::rel(prudnikov_halfline(0.8, 0.9, 1.3, 6).real_value(),
                     halfline_quadrature(0.8, 0.9, 1.3, 6)) <= 1e-8);

  CHECK_THROWS_AS(prudnikov_halfline(0.0, 1.0, 1.0, 2), DomainError);
  CHECK_THROWS_AS(prudnikov_halfline(-1.0, 1.0, 1.0, 2), DomainError);
  // b = c = 1, p = 1.5: argument 1/sqrt(1.5*0.5) > 1; p = 0.5 gives a real argument below one
  CHECK_NOTHROW(prudnikov_halfline(1.5, 1.0, 1.0, 3));
  CHECK_THROWS_AS(prudnikov_halfline(1.0, 0.2, 2.0, 3), DomainError);
}

TEST_CASE("norm_sq_phi / psi ground states") {
  const auto p = testing::case_d();
  const auto conv = NormalizationConvention::make(p);
  CHECK(norm_sq_phi(p, 0, conv).real_value() == doctest::Approx(std::sqrt(7 * std::numbers::pi)).epsilon(1e-14));
  CHECK(norm_sq_phi(p, 0, conv).real_value() == doctest::Approx(4.6894).epsilon(1e-4));
  CHECK(norm_sq_psi(p, 0, conv).real_value() ==
        doctest::Approx(std::norm(conv.n_psi) * std::sqrt(5 * std::numbers::pi)).epsilon(1e-14));
  // the half-line constant is a factor two short of the measured norm
  CHECK(norm_sq_phi(p, 0, conv, halfline_norm_constant()).real_value() ==
        doctest::Approx(std::sqrt(7 * std::numbers::pi) / 2).epsilon(1e-14));
}

TEST_CASE("norms match the oracle") {
  for (const auto& params : {testing::case_d(), constrained_family(2.0, 1.0)}) {
    const auto conv = NormalizationConvention::make(params);
    const auto oracle = quad_norm_series(params, conv, 60);
    const auto [phi, psi] = closed_form_norm_series(params, conv, 60);
    for (int n = 0; n <= 60; ++n) {
      const double dphi = std::abs(phi.log_at(n) - oracle.phi.log_at(n));
      const double dpsi = std::abs(psi.log_at(n) - oracle.psi.log_at(n));
      if (n <= 20) {
        CHECK(std::abs(std::expm1(dphi)) <= 1e-8);
        CHECK(std::abs(std::expm1(dpsi)) <= 1e-8);
      }
      CHECK(dphi <= 1e-6);
      CHECK(dpsi <= 1e-6);
    }
    CHECK(phi.source == NormSource::ClosedForm);
    CHECK(oracle.phi.source == NormSource::Oracle);
  }
}

TEST_CASE("constrained norms collapse to geometric series") {
  const auto p = constrained_family(2.0, 1.0);
  const auto conv = NormalizationConvention::make(p);
  const auto [phi, psi] = closed_form_norm_series(p, conv, 100);
  for (int n = 1; n <= 100; ++n) {
    CHECK(phi.log_at(n) - phi.log_at(n - 1) == doctest::Approx(std::log(1.0 / 3.0)).epsilon(1e-12));
    CHECK(psi.log_at(n) - psi.log_at(n - 1) == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  }
}

TEST_CASE("general formula equals the collapsed one when the anomaly vanishes") {
  for (double be : {1.2, std::sqrt(2.0), 2.0, 3.5}) {
    const auto p = constrained_family(be, 1.0);
    const auto conv = NormalizationConvention::make(p);
    const double de = 1.0, ga = p.gamma.real();
    const double log0 = std::log(kSqrtPi) + std::log(std::sqrt((be + de) / (be - de)));
    for (int n = 0; n <= 100; ++n) {
      const double direct = log0 + n * std::log(ga / be);
      CHECK(std::abs(norm_sq_phi(p, n, conv).log_abs - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("closed forms are gated to real ordered parameters") {
  const auto sw = swanson(SwansonParams(0.3));
  const auto conv = NormalizationConvention::make(sw);
  CHECK_THROWS_AS(norm_sq_phi(sw, 3, conv), UseOracleError);
  CHECK_THROWS_AS(norm_sq_psi(sw, 3, conv), UseOracleError);
  CHECK_THROWS_AS(asymptotics(sw), UseOracleError);
  CHECK_THROWS_AS(norm_product_trend(sw, 10), UseOracleError);
}

TEST_CASE("asymptotics case d") {
  const auto rep = asymptotics(testing::case_d());
  CHECK(std::abs(rep.x - 2.0 / 3.0) <= 1e-12);
  CHECK(std::abs(rep.y - 2.1) <= 1e-12);
  CHECK(std::abs(rep.product_base - 1.4) <= 1e-12);
  CHECK(std::abs(rep.s - 6.0 / std::sqrt(35.0)) <= 1e-12);
  CHECK(rep.phi_trend == Trend::Vanishes);
  CHECK(rep.psi_trend == Trend::Diverges);
  CHECK(rep.product_trend == Trend::Diverges);
  CHECK(rep.a_const.has_value());
  const double an = std::abs(rep.anomaly);
  CHECK(std::abs(rep.product_base - (1 + an) / (1 - an)) <= 1e-12);
}

TEST_CASE("three-case table") {
  struct Row {
    double beta;
    Trend phi, psi;
  };
  for (const Row& r : {Row{std::sqrt(2.0), Trend::Bounded, Trend::Bounded},
                       Row{1.2, Trend::Diverges, Trend::Vanishes},
                       Row{2.0, Trend::Vanishes, Trend::Diverges}}) {
    const auto rep = asymptotics(constrained_family(r.beta, 1.0));
    CHECK(rep.phi_trend == r.phi);
    CHECK(rep.psi_trend == r.psi);
    CHECK(rep.product_trend == Trend::Bounded);
    CHECK_FALSE(rep.a_const.has_value());
  }
  const auto two = asymptotics(constrained_family(2.0, 1.0));
  CHECK(two.x == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(two.y == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("asymptotic law shape for case d") {
  const auto p = testing::case_d();
  const auto rep = asymptotics(p);
  const auto conv = NormalizationConvention::make(p);
  double prev = 1e300;
  for (int n : {50, 100, 200}) {
    const double model = n * std::log(rep.x) - 0.5 * std::log(double(n)) + std::log(rep.a_phi);
    const double dev = std::abs(norm_sq_phi(p, n, conv).log_abs - model);
    CHECK(dev < 0.1);
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("norm product trend") {
  const auto r = norm_product_trend(constrained_family(1.2, 1.0), 100);
  CHECK(r.anomaly_zero);
  CHECK(r.max_rel_variation <= 1e-10);

  const auto d = norm_product_trend(testing::case_d(), 200);
  REQUIRE(d.fitted_slope.has_value());
  CHECK(std::abs(*d.fitted_slope - std::log(1.4)) <= 1e-2);
  // frozen high-precision reference for the fitted slope over [50, 200]
  CHECK(*d.fitted_slope == doctest::Approx(0.3276825227872526).epsilon(1e-9));
  CHECK(d.expected_slope == doctest::Approx(std::log(1.4)).epsilon(1e-12));

  const auto conv = NormalizationConvention::make(testing::case_d());
  CHECK(norm_sq_phi(testing::case_d(), 200, conv).log_abs / 200 ==
        doctest::Approx(-0.4107014767343966).epsilon(1e-9));

  const auto bos = norm_product_trend(standard_bosons(), 50);
  for (double v : bos.log_product) CHECK(std::abs(v) <= 1e-14);
}

TEST_CASE("non-Riesz signature for asymmetric constrained families") {
  for (double be : {1.2, 2.0}) {
    const auto p = constrained_family(be, 1.0);
    const auto [phi, psi] = closed_form_norm_series(p, NormalizationConvention::make(p), 100);
    const double lo = std::min(phi.log_at(100), psi.log_at(100));
    const double hi = std::max(phi.log_at(100), psi.log_at(100));
    CHECK(lo < -10.0);
    CHECK(hi > 10.0);
  }
}

TEST_CASE("prefactor calibration") {
  const auto p = testing::case_d();
  const auto cal = calibrate_prefactor(p, NormalizationConvention::make(p));
  CHECK(cal.rel_dev_phi <= 1e-8);
  CHECK(cal.rel_dev_psi <= 1e-8);
  CHECK(cal.measured_constant() == doctest::Approx(kSqrtPi).epsilon(1e-8));
  CHECK(std::abs(cal.measured_phi / cal.halfline_phi - 2.0) <= 1e-8);
}

TEST_CASE("fitted_slope and trend thresholds") {
  CHECK(fitted_slope({0, 1, 2, 3}, {1, 3, 5, 7}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(fitted_slope({1}, {1}), DomainError);
  CHECK(classify_trend(1.0 + 1e-13) == Trend::Bounded);
  CHECK(classify_trend(1.0 + 1e-11) == Trend::Diverges);
  CHECK(classify_trend(1.0 - 1e-11) == Trend::Vanishes);
  CHECK(to_string(Trend::Bounded) == "bounded");
}

}
