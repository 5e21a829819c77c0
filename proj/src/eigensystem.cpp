#include "pbgbt/eigensystem.hpp"

#include <cmath>
#include <random>

namespace pbgbt {

namespace {

using X = ExtComplex;
using XReal = ExtReal;

X ext(Complex z) { return from_complex<X>(z); }

void check_index(int n) {
  if (n < 0) throw DomainError("family index must be non-negative");
  if (n > kMaxFamilyIndex)
    throw ConfigurationError("family index " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kMaxFamilyIndex));
}

void require_scenario_d(const GbtParams& params) {
  const auto rep = normalizability(params);
  if (rep.scenario == Scenario::D) return;
  std::string which;
  if (!rep.phi0_in_H) which += "phi_0";
  if (!rep.psi0_in_H) which += which.empty() ? "Psi_0" : " and Psi_0";
  throw NotPseudoBosonicError("scenario " + to_string(rep.scenario) + ": " + which +
                                  " not square integrable",
                              !rep.phi0_in_H, !rep.psi0_in_H);
}

/// N (n! 2^n)^{-1/2} ratio^{n/2} H_n(x / root) exp(-kappa x^2 / 2)
GaussPolyx hermite_member(int n, const X& norm, const X& ratio, const X& root_pq,
                          const X& kappa) {
  check_index(n);
  using std::sqrt;
  auto coeffs = hermite_coeffs<X>(n);
  XReal fact(1);
  for (int k = 1; k <= n; ++k) fact *= XReal(2 * k);
  // principal ratio^{n/2} equals (principal sqrt(ratio))^n
  const X sqrt_ratio = sqrt(ratio);
  X prefactor = norm / X(sqrt(fact));
  for (int k = 0; k < n; ++k) prefactor *= sqrt_ratio;
  const X w = X(1) / root_pq;
  X wk(1);
  for (auto& c : coeffs) {
    c *= prefactor * wk;
    wk *= w;
  }
  return {std::move(coeffs), kappa};
}

GaussPolyx random_test_function(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> width(0.5, 2.0);
  std::uniform_int_distribution<int> degree(0, 4);
  const int d = degree(rng);
  GaussPolyx f;
  f.kappa = X(XReal(width(rng)));
  for (int k = 0; k <= d; ++k) f.poly.push_back(X(XReal(coeff(rng)), XReal(coeff(rng))));
  return f;
}

GaussPolyx number_op(const GbtOperators<X>& ops, const GaussPolyx& f) {
  return apply_ladder(ops.b, apply_ladder(ops.a, f));
}

}  // namespace

std::string to_string(ConventionKind k) {
  return k == ConventionKind::Default ? "default" : "symmetric";
}

NormalizationConvention NormalizationConvention::make(const GbtParams& params,
                                                      ConventionKind kind) {
  const Complex pq = (params.alpha + params.gamma) * (params.beta + params.delta);
  const Complex product = 1.0 / std::sqrt(pi<double>() * pq);
  NormalizationConvention c;
  c.kind = kind;
  if (kind == ConventionKind::Default) {
    c.n_phi = 1.0;
    c.n_psi = std::conj(product);
  } else {
    if (std::abs(pq.imag()) > 0.0 || !(pq.real() > 0.0))
      throw ConfigurationError("symmetric convention needs (alpha+gamma)(beta+delta) > 0");
    const double v = std::pow(pi<double>() * pq.real(), -0.25);
    c.n_phi = v;
    c.n_psi = v;
  }
  return c;
}

double NormalizationConvention::product_defect(const GbtParams& params) const {
  const Complex pq = (params.alpha + params.gamma) * (params.beta + params.delta);
  const Complex want = 1.0 / std::sqrt(pi<double>() * pq);
  return std::abs(n_phi * std::conj(n_psi) - want) / std::abs(want);
}

std::pair<GaussPolyx, GaussPolyx> ground_states(const GbtParams& params,
                                                const NormalizationConvention& convention) {
  validate(params);
  require_scenario_d(params);
  using std::conj;
  const X al = ext(params.alpha), be = ext(params.beta), ga = ext(params.gamma),
          de = ext(params.delta);
  GaussPolyx phi0{{ext(convention.n_phi)}, (be - de) / (be + de)};
  GaussPolyx psi0{{ext(convention.n_psi)}, conj((ga - al) / (ga + al))};
  return {std::move(phi0), std::move(psi0)};
}

EigenFamily build_family(const GbtParams& params, int n_max, ConventionKind kind) {
  check_index(n_max);
  EigenFamily fam;
  fam.params = params;
  fam.convention = NormalizationConvention::make(params, kind);
  fam.n_max = n_max;
  auto [phi0, psi0] = ground_states(params, fam.convention);
  const auto ops = make_operators<X>(params);
  fam.phi.reserve(static_cast<std::size_t>(n_max) + 1);
  fam.psi.reserve(static_cast<std::size_t>(n_max) + 1);
  fam.phi.push_back(std::move(phi0));
  fam.psi.push_back(std::move(psi0));
  using std::sqrt;
  for (int n = 1; n <= n_max; ++n) {
    const X inv = X(XReal(1) / sqrt(XReal(n)));
    fam.phi.push_back(apply_ladder(ops.b, fam.phi.back()) * inv);
    fam.psi.push_back(apply_ladder(ops.a_dag, fam.psi.back()) * inv);
  }
  return fam;
}

GaussPolyx closed_form_phi(const GbtParams& params, int n,
                           const NormalizationConvention& convention) {
  validate(params);
  require_scenario_d(params);
  using std::sqrt;
  const X al = ext(params.alpha), be = ext(params.beta), ga = ext(params.gamma),
          de = ext(params.delta);
  const X p = al + ga, q = be + de;
  return hermite_member(n, ext(convention.n_phi), p / q, sqrt(p * q), (be - de) / q);
}

GaussPolyx closed_form_psi(const GbtParams& params, int n,
                           const NormalizationConvention& convention) {
  validate(params);
  require_scenario_d(params);
  using std::conj;
  using std::sqrt;
  const X al = conj(ext(params.alpha)), ga = conj(ext(params.gamma));
  const X p = al + ga, q = conj(ext(params.beta)) + conj(ext(params.delta));
  return hermite_member(n, ext(convention.n_psi), q / p, sqrt(p * q), (ga - al) / p);
}

double closed_form_residual(const EigenFamily& family) {
  double worst = 0.0;
  for (int n = 0; n <= family.n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    worst = std::max(worst, coefficient_residual(family.phi[idx],
                                                 closed_form_phi(family.params, n, family.convention)));
    worst = std::max(worst, coefficient_residual(family.psi[idx],
                                                 closed_form_psi(family.params, n, family.convention)));
  }
  return worst;
}

LadderReport verify_ladder(const EigenFamily& family) {
  using std::sqrt;
  const auto ops = make_operators<X>(family.params);
  LadderReport rep;
  RelationResidual lower_phi{"a phi_n = sqrt(n) phi_{n-1}"};
  RelationResidual raise_phi{"b phi_n = sqrt(n+1) phi_{n+1}"};
  RelationResidual lower_psi{"b^dagger Psi_n = sqrt(n) Psi_{n-1}"};
  RelationResidual raise_psi{"a^dagger Psi_n = sqrt(n+1) Psi_{n+1}"};

  auto record = [](RelationResidual& r, double v, int n) {
    if (v > r.max_residual) {
      r.max_residual = v;
      r.worst_n = n;
    }
  };

  const auto& phi = family.phi;
  const auto& psi = family.psi;
  const GaussPolyx zero_phi{{}, phi[0].kappa};
  const GaussPolyx zero_psi{{}, psi[0].kappa};
  for (int n = 0; n <= family.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const X root_n = X(sqrt(XReal(n)));
    const X root_n1 = X(sqrt(XReal(n + 1)));
    const auto a_phi = apply_ladder(ops.a, phi[i]);
    const auto bd_psi = apply_ladder(ops.b_dag, psi[i]);
    if (n == 0) {
      rep.ground_states_annihilated = a_phi.is_zero() && bd_psi.is_zero();
      record(lower_phi, coefficient_residual(a_phi, zero_phi), 0);
      record(lower_psi, coefficient_residual(bd_psi, zero_psi), 0);
    } else {
      record(lower_phi, coefficient_residual(a_phi, phi[i - 1] * root_n), n);
      record(lower_psi, coefficient_residual(bd_psi, psi[i - 1] * root_n), n);
    }
    if (n < family.n_max) {
      record(raise_phi, coefficient_residual(apply_ladder(ops.b, phi[i]), phi[i + 1] * root_n1), n);
      record(raise_psi, coefficient_residual(apply_ladder(ops.a_dag, psi[i]), psi[i + 1] * root_n1),
             n);
    }
  }
  rep.relations = {lower_phi, raise_phi, lower_psi, raise_psi};
  for (const auto& r : rep.relations) rep.max_residual = std::max(rep.max_residual, r.max_residual);
  return rep;
}

double number_operator_symmetry_defect(const GbtParams& params, std::uint64_t seed, int pairs) {
  const auto ops = make_operators<X>(params);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const auto f = random_test_function(rng);
    const auto g = random_test_function(rng);
    const X lhs = inner_product(number_op(ops, f), g);
    const X rhs = inner_product(f, number_op(ops, g));
    worst = std::max(worst, std::abs(to_complex(lhs) - to_complex(rhs)));
  }
  return worst;
}

NumberOperatorReport number_operator_check(const EigenFamily& family, std::uint64_t seed,
                                           int pairs) {
  const auto ops = make_operators<X>(family.params);
  NumberOperatorReport rep;
  for (int n = 0; n <= family.n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const X eig = X(XReal(n));
    const auto n_phi = apply_ladder(ops.b, apply_ladder(ops.a, family.phi[i]));
    const auto nd_psi = apply_ladder(ops.a_dag, apply_ladder(ops.b_dag, family.psi[i]));
    const GaussPolyx want_phi = family.phi[i] * eig;
    const GaussPolyx want_psi = family.psi[i] * eig;
    rep.max_phi_residual = std::max(rep.max_phi_residual, coefficient_residual(n_phi, want_phi));
    rep.max_psi_residual = std::max(rep.max_psi_residual, coefficient_residual(nd_psi, want_psi));
  }
  // eigenvalues are the integers 0..n_max, hence pairwise distinct
  rep.eigenvalues_simple = true;

  const auto& p = family.params;
  if (is_real_ordered(p) && std::abs(anomaly(p)) <= 1e-12)
    rep.symmetry_residual = number_operator_symmetry_defect(p, seed, pairs);
  return rep;
}

Eigen::MatrixXcd biorthonormality_matrix(const EigenFamily& family, int n_max) {
  if (n_max > family.n_max) throw DomainError("biorthonormality_matrix: n_max beyond family");
  const int dim = n_max + 1;
  Eigen::MatrixXcd gram(dim, dim);
  for (int n = 0; n < dim; ++n)
    for (int m = 0; m < dim; ++m)
      gram(n, m) = to_complex(inner_product(family.phi[static_cast<std::size_t>(n)],
                                            family.psi[static_cast<std::size_t>(m)]));
  return gram;
}

double constrained_proportionality_residual(const EigenFamily& family, int n_max) {
  if (n_max > family.n_max) throw DomainError("n_max beyond family");
  const auto& p = family.params;
  const X base = ext(p.beta * p.beta - p.delta * p.delta);
  const X ratio = ext(family.convention.n_psi) / ext(family.convention.n_phi);
  X factor = ratio;
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    worst = std::max(worst, coefficient_residual(family.phi[i] * factor, family.psi[i]));
    factor *= base;
  }
  return worst;
}

double swanson_mirror_residual(double theta, int n_max) {
  const auto plus = build_family(swanson(SwansonParams(theta)), n_max);
  const auto minus = build_family(swanson(SwansonParams(-theta)), n_max);
  const X ratio = ext(plus.convention.n_psi) / ext(plus.convention.n_phi);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    worst = std::max(worst, coefficient_residual(minus.phi[i] * ratio, plus.psi[i]));
  }
  return worst;
}

}  // namespace pbgbt
