#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace pbgbt;

TEST_SUITE("specialfns") {

TEST_CASE("hermite_coeffs small degrees") {
  const auto h0 = hermite_coeffs<Complex>(0);
  REQUIRE(h0.size() == 1);
  CHECK(h0[0] == Complex{1.0, 0.0});

  const auto h3 = hermite_coeffs<Complex>(3);
  REQUIRE(h3.size() == 4);
  CHECK(h3[0] == Complex{0.0, 0.0});
  CHECK(h3[1] == Complex{-12.0, 0.0});
  CHECK(h3[2] == Complex{0.0, 0.0});
  CHECK(h3[3] == Complex{8.0, 0.0});
}

TEST_CASE("hermite_coeffs n=10 at x=1 matches value recurrence") {
  const auto h = hermite_coeffs<Complex>(10);
  Complex acc{};
  for (std::size_t i = h.size(); i-- > 0;) acc = acc + h[i];
  const auto [log_abs, sign] = testing::hermite_value(10, 1.0);
  CHECK(testing::rel(acc.real(), sign * std::exp(log_abs)) <= 1e-13);
  CHECK(acc.imag() == 0.0);
}

TEST_CASE("hermite coefficients agree with the value recurrence up to n=200") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-5.0, 5.0);
  std::vector<double> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(unif(rng));
  double worst = 0.0;
  for (int n = 0; n <= 200; n += 1) {
    const auto h = hermite_coeffs<ExtComplex>(n);
    for (double x : xs) {
      ExtComplex acc(0);
      const ExtComplex xx(x);
      for (std::size_t i = h.size(); i-- > 0;) acc = acc * xx + h[i];
      const auto [log_abs, sign] = testing::hermite_value(n, x);
      const double coeff_val = static_cast<double>(acc.real());
      const double d = std::log(std::abs(coeff_val)) - log_abs;
      worst = std::max(worst, std::abs(std::expm1(d)));
      CHECK(((coeff_val < 0) ? -1 : 1) == sign);
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("hermite_coeffs degree cap") {
  CHECK_NOTHROW(hermite_coeffs<Complex>(kMaxPolynomialDegree));
  CHECK_THROWS_AS(hermite_coeffs<Complex>(kMaxPolynomialDegree + 1), ConfigurationError);
  CHECK_THROWS_AS(hermite_coeffs<Complex>(-1), DomainError);
}

TEST_CASE("legendre_eval values") {
  CHECK(legendre_eval(0, 1.5).real_value() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(legendre_eval(1, 1.5).real_value() == doctest::Approx(1.5).epsilon(1e-15));
  const double s = 6.0 / std::sqrt(35.0);
  CHECK(legendre_eval(2, s).real_value() == doctest::Approx((3 * s * s - 1) / 2).epsilon(1e-14));
  CHECK(legendre_eval(2, s).real_value() == doctest::Approx(1.04286).epsilon(1e-5));
  for (int n : {3, 7, 15, 40})
    CHECK(legendre_eval(n, 1.3).real_value() ==
          doctest::Approx(testing::legendre_plain(n, 1.3)).epsilon(1e-13));
}

TEST_CASE("legendre_eval domain") {
  CHECK_THROWS_AS(legendre_eval(3, 0.9), DomainError);
  CHECK(legendre_eval(50, 1.0 - 1e-13).real_value() == doctest::Approx(1.0));
  CHECK(legendre_eval(400, 1.0).log_abs == doctest::Approx(0.0));
}

TEST_CASE("legendre positivity in log scale") {
  for (double x : {1.0, 1.0000001, 1.014185, 1.1, 2.0, 10.0})
    for (int n = 0; n <= 500; n += 7) CHECK(legendre_eval(n, x).log_abs >= -1e-14);
}

TEST_CASE("legendre_asymptotic") {
  const double r100 = std::exp(legendre_asymptotic(100, 1.1).log_abs - legendre_eval(100, 1.1).log_abs);
  CHECK(std::abs(r100 - 1.0) <= 1e-2);
  const double r500 =
      std::exp(legendre_asymptotic(500, 1.014185).log_abs - legendre_eval(500, 1.014185).log_abs);
  CHECK(std::abs(r500 - 1.0) <= 1e-2);
  CHECK(std::isfinite(legendre_asymptotic(1, 1.0 + 1e-12).log_abs));
  CHECK_THROWS_AS(legendre_asymptotic(10, 1.0), DomainError);
  CHECK_THROWS_AS(legendre_asymptotic(0, 2.0), DomainError);

  for (double x : {1.014185, 1.1, 2.0}) {
    double prev = 1e300;
    for (int n : {50, 100, 200, 400}) {
      const double err =
          std::abs(std::expm1(legendre_asymptotic(n, x).log_abs - legendre_eval(n, x).log_abs));
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("gaussian_moment values") {
  const double sp = std::sqrt(std::numbers::pi);
  CHECK(gaussian_moment<Complex>(0, Complex{1.0, 0.0}).real() == doctest::Approx(sp).epsilon(1e-15));
  CHECK(gaussian_moment<Complex>(2, Complex{1.0, 0.0}).real() ==
        doctest::Approx(sp / 2).epsilon(1e-15));
  CHECK(std::abs(gaussian_moment<Complex>(1, Complex{2.0, 1.0})) == 0.0);
  CHECK_THROWS_AS(gaussian_moment<Complex>(0, Complex{0.0, 1.0}), NonIntegrableError);
  CHECK_THROWS_AS(gaussian_moment<Complex>(2, Complex{-1.0, 0.0}), NonIntegrableError);
  const auto ext = gaussian_moment<ExtComplex>(4, ExtComplex(1));
  CHECK(to_complex(ext).real() == doctest::Approx(3 * sp / 4).epsilon(1e-15));
}

TEST_CASE("gaussian_moment matches quadrature") {
  for (Complex sigma : {Complex{1.0, 0.0}, Complex{1.0 / 7.0, 0.0}, Complex{2.0, 1.0}}) {
    for (int m = 0; m <= 40; m += 2) {
      GaussPolyd f{{Complex{1.0, 0.0}}, std::conj(sigma)};
      PolyCoeffs<Complex> xm(static_cast<std::size_t>(m) + 1, Complex{});
      xm.back() = 1.0;
      GaussPolyd g{xm, sigma};
      const auto exact = gaussian_moment<Complex>(m, sigma);
      const auto q = quad_inner(f, g);
      CHECK(std::abs(q.value - exact) <= 1e-10 * std::abs(exact));
    }
  }
}

TEST_CASE("hermite_basis_function") {
  const auto e0 = hermite_basis_function<Complex>(0);
  REQUIRE(e0.poly.size() == 1);
  CHECK(e0.poly[0].real() == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
  CHECK(e0.kappa == Complex{1.0, 0.0});

  const auto e3 = hermite_basis_function<ExtComplex>(3);
  CHECK(std::abs(to_complex(inner_product(e3, e3)) - 1.0) <= 1e-12);
  const auto e2 = hermite_basis_function<ExtComplex>(2);
  const auto e4 = hermite_basis_function<ExtComplex>(4);
  CHECK(std::abs(to_complex(inner_product(e2, e4))) <= 1e-12);

  double worst = 0.0;
  std::vector<GaussPolyx> basis;
  for (int n = 0; n <= 30; ++n) basis.push_back(hermite_basis_function<ExtComplex>(n));
  for (int n = 0; n <= 30; ++n)
    for (int m = 0; m <= 30; ++m) {
      const auto ip = to_complex(inner_product(basis[std::size_t(n)], basis[std::size_t(m)]));
      worst = std::max(worst, std::abs(ip - (n == m ? 1.0 : 0.0)));
    }
  CHECK(worst <= 1e-12);
}

TEST_CASE("LogMagnitude arithmetic") {
  const auto a = LogMagnitude::from_value(-2.0);
  const auto b = LogMagnitude::from_log(800.0);
  const auto p = a * b;
  CHECK(p.log_abs == doctest::Approx(800.0 + std::log(2.0)));
  CHECK(p.phase.real() == doctest::Approx(-1.0));
  CHECK(LogMagnitude::from_value(0.0).zero);
  CHECK((LogMagnitude::from_value(0.0) * b).zero);
  CHECK_THROWS_AS(b / LogMagnitude::from_value(0.0), DomainError);
  CHECK((b / b).real_value() == doctest::Approx(1.0));
}

}
