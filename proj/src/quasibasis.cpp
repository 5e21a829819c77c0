#include "pbgbt/quasibasis.hpp"

#include <cmath>

namespace pbgbt {

namespace {

constexpr double kAnomalyZero = 1e-12;

QuasiBasisCheck finish(QuasiBasisCheck chk, const std::vector<Complex>& lhs,
                       const std::vector<Complex>& rhs) {
  Complex acc{};
  for (std::size_t n = 0; n < lhs.size(); ++n) {
    acc += lhs[n] * rhs[n];
    chk.partial_sums.push_back(acc);
  }
  chk.final_error = std::abs(acc - chk.target);
  chk.converged = chk.final_error <= chk.tolerance;
  return chk;
}

}  // namespace

DomainSpec DomainSpec::from_params(const GbtParams& params) {
  const double w = std::abs(anomaly(params));
  if (!(w < 1.0)) throw DomainError("DomainSpec: |alpha beta - gamma delta| must be < 1");
  return {w};
}

std::string to_string(Ordering o) { return o == Ordering::PhiFirst ? "phi_first" : "psi_first"; }

QuasiBasisCheck partial_sums(const EigenFamily& family, const GaussPolyd& f, const GaussPolyd& g,
                             int n_max, Ordering ordering, double tolerance) {
  if (n_max > family.n_max) throw DomainError("partial_sums: n_max beyond family");
  const auto fx = convert<ExtComplex>(f);
  const auto gx = convert<ExtComplex>(g);
  const auto domain = DomainSpec::from_params(family.params);

  QuasiBasisCheck chk;
  chk.ordering = ordering;
  chk.tolerance = tolerance;
  chk.f_in_domain = domain_membership(f, domain);
  chk.g_in_domain = domain_membership(g, domain);
  chk.target = to_complex(inner_product(fx, gx));

  const auto& left = ordering == Ordering::PhiFirst ? family.phi : family.psi;
  const auto& right = ordering == Ordering::PhiFirst ? family.psi : family.phi;
  std::vector<Complex> lhs, rhs;
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    try {
      lhs.push_back(to_complex(inner_product(fx, left[i])));
      rhs.push_back(to_complex(inner_product(right[i], gx)));
    } catch (const NonIntegrableError& e) {
      throw NonIntegrableError("partial_sums: pairing not integrable at n = " + std::to_string(n) +
                               " (" + e.what() + ")");
    }
  }
  return finish(std::move(chk), lhs, rhs);
}

QuasiBasisCheck partial_sums(const EigenFamily& family, const RealFunction& f,
                             const RealFunction& g, int n_max, Ordering ordering, double tolerance,
                             bool asserted_in_domain) {
  if (n_max > family.n_max) throw DomainError("partial_sums: n_max beyond family");
  QuasiBasisCheck chk;
  chk.ordering = ordering;
  chk.tolerance = tolerance;
  chk.f_in_domain = chk.g_in_domain = asserted_in_domain;
  chk.target = quad_inner(f, g).value;

  const bool phi_left = ordering == Ordering::PhiFirst;
  std::vector<Complex> lhs, rhs;
  for (int n = 0; n <= n_max; ++n) {
    auto member = [&, n](bool phi_side) {
      return [&, n, phi_side](double x) {
        const auto v = evaluate_members(family.params, family.convention, n, x);
        return phi_side ? v.phi.back() : v.psi.back();
      };
    };
    try {
      lhs.push_back(quad_inner(f, member(phi_left)).value);
      rhs.push_back(quad_inner(member(!phi_left), g).value);
    } catch (const NonIntegrableError& e) {
      throw NonIntegrableError("partial_sums: pairing not integrable at n = " + std::to_string(n) +
                               " (" + e.what() + ")");
    }
  }
  return finish(std::move(chk), lhs, rhs);
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::NotPseudoBosonic: return "NOT_PSEUDO_BOSONIC";
    case VerdictKind::RieszLikeCollapse: return "RIESZ_LIKE_COLLAPSE";
    case VerdictKind::BiorthogonalBasesNotRiesz: return "BIORTHOGONAL_BASES_NOT_RIESZ";
    case VerdictKind::QuasiBasesOnly: return "QUASI_BASES_ONLY";
    case VerdictKind::UndeterminedClosedForm: return "UNDETERMINED_CLOSED_FORM";
  }
  return "?";
}

OracleGrowthEvidence oracle_growth_evidence(const GbtParams& params, int n_from, int n_to) {
  const auto conv = NormalizationConvention::make(params);
  const auto series = quad_norm_series(params, conv, n_to);
  OracleGrowthEvidence ev;
  ev.n_from = n_from;
  ev.n_to = n_to;
  ev.phi_strictly_increasing = ev.psi_strictly_increasing = true;
  for (int n = 0; n <= n_to; ++n) {
    ev.log_phi.push_back(series.phi.log_at(n));
    ev.log_psi.push_back(series.psi.log_at(n));
  }
  for (int n = n_from + 1; n <= n_to; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (!(ev.log_phi[i] > ev.log_phi[i - 1])) ev.phi_strictly_increasing = false;
    if (!(ev.log_psi[i] > ev.log_psi[i - 1])) ev.psi_strictly_increasing = false;
  }
  return ev;
}

BasisVerdict verdict(const GbtParams& params, const NormalizabilityReport& norm,
                     const std::optional<AsymptoticsReport>& asym) {
  BasisVerdict v;
  if (norm.scenario != Scenario::D) {
    v.kind = VerdictKind::NotPseudoBosonic;
    v.rationale_codes.push_back("SCENARIO_" + to_string(norm.scenario));
    if (!norm.phi0_in_H) v.rationale_codes.push_back("PHI0_NOT_SQUARE_INTEGRABLE");
    if (!norm.psi0_in_H) v.rationale_codes.push_back("PSI0_NOT_SQUARE_INTEGRABLE");
    return v;
  }
  v.rationale_codes.push_back("SCENARIO_D");
  if (!is_real_ordered(params) || !asym) {
    v.kind = VerdictKind::UndeterminedClosedForm;
    v.rationale_codes.push_back("NOT_REAL_ORDERED");
    v.rationale_codes.push_back("CLOSED_FORM_NORMS_NOT_APPLICABLE");
    return v;
  }
  if (std::abs(asym->anomaly) <= kAnomalyZero) {
    v.rationale_codes.push_back("ANOMALY_ZERO");
    if (asym->phi_trend == Trend::Bounded && asym->psi_trend == Trend::Bounded) {
      v.kind = VerdictKind::RieszLikeCollapse;
      v.rationale_codes.push_back("X_EQ_Y_EQ_1");
      v.rationale_codes.push_back("STANDARD_BOGOLIUBOV_B_EQ_A_DAGGER");
    } else {
      v.kind = VerdictKind::BiorthogonalBasesNotRiesz;
      v.rationale_codes.push_back("NORMS_ASYMMETRIC_ONE_DIVERGES_ONE_VANISHES");
      v.rationale_codes.push_back("NORM_PRODUCT_CONSTANT");
    }
    return v;
  }
  v.kind = VerdictKind::QuasiBasesOnly;
  v.rationale_codes.push_back("ANOMALY_NONZERO");
  v.rationale_codes.push_back("NORM_PRODUCT_DIVERGES_XY_GT_1");
  v.rationale_codes.push_back("DOMAIN_D_PROPER_DENSE_SUBSET");
  return v;
}

BasisVerdict verdict(const GbtParams& params, bool with_oracle_evidence) {
  validate(params);
  const auto norm = normalizability(params);
  std::optional<AsymptoticsReport> asym;
  if (norm.scenario == Scenario::D && is_real_ordered(params)) asym = asymptotics(params);
  auto v = verdict(params, norm, asym);
  if (v.kind == VerdictKind::UndeterminedClosedForm && with_oracle_evidence) {
    v.oracle_evidence = oracle_growth_evidence(params);
    if (v.oracle_evidence->phi_strictly_increasing && v.oracle_evidence->psi_strictly_increasing)
      v.rationale_codes.push_back("ORACLE_BOTH_NORMS_INCREASING");
  }
  return v;
}

}  // namespace pbgbt
