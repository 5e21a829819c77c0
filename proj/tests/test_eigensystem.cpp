#include <doctest.h>

#include "helpers.hpp"

using namespace pbgbt;

namespace {

// N_phi (2^n n!)^{-1/2} H_n(c x) e^{-k x^2/2}, coefficients in extended precision
GaussPolyx scaled_hermite(int n, ExtComplex norm, ExtComplex c, ExtComplex k) {
  auto h = hermite_coeffs<ExtComplex>(n);
  ExtReal fact(1);
  for (int j = 1; j <= n; ++j) fact *= ExtReal(2 * j);
  const ExtComplex pre = norm / ExtComplex(sqrt(fact));
  ExtComplex cp(1);
  for (auto& coef : h) {
    coef *= pre * cp;
    cp *= c;
  }
  return {std::move(h), k};
}

double max_abs_dev_from_identity(const Eigen::MatrixXcd& g) {
  return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("eigensystem") {

TEST_CASE("ground states") {
  const auto p = testing::case_d();
  const auto [phi0, psi0] = ground_states(p, NormalizationConvention::make(p));
  CHECK(std::abs(to_complex(phi0.kappa) - 1.0 / 7.0) <= 1e-15);
  CHECK(std::abs(to_complex(psi0.kappa) - 1.0 / 5.0) <= 1e-15);

  const auto bos = standard_bosons();
  const auto [b0, c0] = ground_states(bos, NormalizationConvention::make(bos, ConventionKind::Symmetric));
  const auto e0 = hermite_basis_function<ExtComplex>(0);
  CHECK(coefficient_residual(b0, e0) <= 1e-15);
  CHECK(coefficient_residual(c0, e0) <= 1e-15);

  try {
    ground_states(testing::case_a(), NormalizationConvention::make(testing::case_a()));
    FAIL("expected NotPseudoBosonicError");
  } catch (const NotPseudoBosonicError& e) {
    CHECK_FALSE(e.phi0_fails());
    CHECK(e.psi0_fails());
    CHECK(std::string(e.what()).find("Psi_0") != std::string::npos);
  }
  CHECK_THROWS_AS(build_family(testing::case_b(), 3), NotPseudoBosonicError);
  CHECK_THROWS_AS(build_family(testing::case_c(), 3), NotPseudoBosonicError);
}

TEST_CASE("normalization conventions") {
  const auto p = testing::case_d();
  const auto def = NormalizationConvention::make(p);
  CHECK(def.n_phi == Complex{1.0, 0.0});
  CHECK(def.product_defect(p) <= 1e-15);
  const auto sym = NormalizationConvention::make(p, ConventionKind::Symmetric);
  CHECK(std::abs(sym.n_phi - sym.n_psi) <= 1e-15);
  CHECK(sym.product_defect(p) <= 1e-15);

  const auto sw = swanson(SwansonParams(0.3));
  CHECK(NormalizationConvention::make(sw).product_defect(sw) <= 1e-15);
  CHECK_THROWS_AS(NormalizationConvention::make(sw, ConventionKind::Symmetric), ConfigurationError);
  CHECK(to_string(ConventionKind::Symmetric) == "symmetric");
}

TEST_CASE("build_family") {
  const auto fam = build_family(testing::case_d(), 2);
  CHECK(fam.phi[2].degree() == 2);
  CHECK(std::abs(to_complex(fam.phi[2].kappa) - 1.0 / 7.0) <= 1e-15);

  const auto bos = build_family(standard_bosons(), 5, ConventionKind::Symmetric);
  CHECK(coefficient_residual(bos.phi[5], hermite_basis_function<ExtComplex>(5)) <= 1e-14);

  CHECK_THROWS_AS(build_family(testing::case_d(), kMaxFamilyIndex + 1), ConfigurationError);
}

TEST_CASE("swanson members match the H_n(e^{i theta} x) form") {
  const double th = 0.3;
  const auto p = swanson(SwansonParams(th));
  const auto fam = build_family(p, 4);
  const ExtComplex eith = from_complex<ExtComplex>(std::polar(1.0, th));
  const ExtComplex e2ith = from_complex<ExtComplex>(std::polar(1.0, 2 * th));
  const auto expected = scaled_hermite(4, from_complex<ExtComplex>(fam.convention.n_phi), eith, e2ith);
  CHECK(coefficient_residual(fam.phi[4], expected) <= 1e-12);
}

TEST_CASE("closed forms") {
  const auto p = testing::case_d();
  const auto conv = NormalizationConvention::make(p);
  const auto fam = build_family(p, 3);
  CHECK(coefficient_residual(closed_form_phi(p, 0, conv), fam.phi[0]) <= 1e-15);
  CHECK(coefficient_residual(closed_form_psi(p, 0, conv), fam.psi[0]) <= 1e-15);
  CHECK(coefficient_residual(closed_form_phi(p, 1, conv), fam.phi[1]) <= 1e-14);

  // phi_1 by hand: N_phi sqrt(P/Q)/sqrt(2) * 2 x / sqrt(PQ), P = 5/3, Q = 7/2
  const double P = 5.0 / 3.0, Q = 3.5;
  const double c1 = std::sqrt(P / Q) / std::sqrt(2.0) * 2.0 / std::sqrt(P * Q);
  const auto phi1 = closed_form_phi(p, 1, conv);
  CHECK(std::abs(to_complex(phi1.poly[1]) - c1) <= 1e-15);

  const auto q = constrained_family(2.0, 1.0);
  const auto qc = NormalizationConvention::make(q);
  const double be = 2.0, de = 1.0;
  const double scale = std::pow(be * be - de * de, -1.5);
  const auto two_param =
      scaled_hermite(3, ExtComplex(scale), ExtComplex(std::sqrt((be - de) / (be + de))),
                     ExtComplex((be - de) / (be + de)));
  CHECK(coefficient_residual(closed_form_phi(q, 3, qc), two_param) <= 1e-14);

  for (const auto& params : {testing::case_d(), constrained_family(2.0, 1.0),
                             constrained_family(1.2, 1.0), swanson(SwansonParams(0.1)),
                             swanson(SwansonParams(0.3))}) {
    CHECK(closed_form_residual(build_family(params, 50)) <= 1e-10);
  }
}

TEST_CASE("ladder relations") {
  const auto rep = verify_ladder(build_family(testing::case_d(), 50));
  CHECK(rep.max_residual <= 1e-10);
  CHECK(rep.ground_states_annihilated);
  CHECK(rep.relations.size() == 4);
  const auto bos = verify_ladder(build_family(standard_bosons(), 30));
  CHECK(bos.max_residual <= 1e-40);
}

TEST_CASE("number operator") {
  const auto p = testing::case_d();
  const auto fam = build_family(p, 50);
  const auto ops = make_operators<ExtComplex>(p);
  const auto n7 = apply_ladder(ops.b, apply_ladder(ops.a, fam.phi[7]));
  CHECK(coefficient_residual(n7, ExtComplex(7) * fam.phi[7]) <= 1e-10);
  CHECK(apply_ladder(ops.b, apply_ladder(ops.a, fam.phi[0])).is_zero());

  const auto rep = number_operator_check(fam);
  CHECK(rep.max_phi_residual <= 1e-10);
  CHECK(rep.max_psi_residual <= 1e-10);
  CHECK(rep.eigenvalues_simple);
  CHECK_FALSE(rep.symmetry_residual.has_value());

  const auto q = number_operator_check(build_family(constrained_family(2.0, 1.0), 20), 7, 5);
  REQUIRE(q.symmetry_residual.has_value());
  CHECK(*q.symmetry_residual <= 1e-10);
  // with a nonzero anomaly N is not symmetric
  CHECK(number_operator_symmetry_defect(p, 7, 5) > 1e-3);
}

TEST_CASE("biorthonormality") {
  CHECK(max_abs_dev_from_identity(biorthonormality_matrix(build_family(testing::case_d(), 30), 30)) <=
        1e-10);
  CHECK(max_abs_dev_from_identity(
            biorthonormality_matrix(build_family(constrained_family(2.0, 1.0), 30), 30)) <= 1e-10);
  CHECK(max_abs_dev_from_identity(
            biorthonormality_matrix(build_family(standard_bosons(), 30, ConventionKind::Symmetric), 30)) <=
        1e-15);
  const auto sw = build_family(swanson(SwansonParams(0.3)), 30);
  CHECK(max_abs_dev_from_identity(biorthonormality_matrix(sw, 20)) <= 1e-9);
  CHECK(max_abs_dev_from_identity(biorthonormality_matrix(sw, 30)) <= 1e-9);
  CHECK_THROWS_AS(biorthonormality_matrix(sw, 31), DomainError);
}

TEST_CASE("proportionality laws") {
  for (double be : {2.0, 1.2, std::sqrt(2.0)})
    CHECK(constrained_proportionality_residual(build_family(constrained_family(be, 1.0), 40), 40) <=
          1e-10);
  for (double th : {0.1, 0.3, -0.5})
    CHECK(swanson_mirror_residual(th, 40) <= 1e-10);
}

}
