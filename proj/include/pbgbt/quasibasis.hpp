#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbgbt/norms.hpp"
#include "pbgbt/oracle.hpp"

namespace pbgbt {

/// D = { f in L^2 : exp(weight x^2 / 2) f in L^2 }, weight = |alpha beta - gamma delta|.
struct DomainSpec {
  double weight_exponent = 0.0;

  static DomainSpec from_params(const GbtParams& params);
};

/// Exact for Gaussian polynomials: Re(kappa) > weight. The boundary
/// Re(kappa) == weight is outside D.
template <typename Scalar>
bool domain_membership(const GaussPoly<Scalar>& f, const DomainSpec& spec) {
  using std::real;
  if (f.is_zero()) return true;
  return to_double(RealOf<Scalar>(real(f.kappa))) > spec.weight_exponent;
}

enum class Ordering { PhiFirst, PsiFirst };

std::string to_string(Ordering o);

struct QuasiBasisCheck {
  Ordering ordering = Ordering::PhiFirst;
  std::vector<Complex> partial_sums;  ///< S_0 .. S_{N_max}
  Complex target;                     ///< <f, g>
  double tolerance = 1e-6;
  bool converged = false;
  double final_error = 0.0;
  /// Domain membership; exact for Gaussian polynomials, asserted by the
  /// caller for sampled functions.
  bool f_in_domain = false;
  bool g_in_domain = false;
};

/// S_N = sum_{n<=N} <f, phi_n><Psi_n, g>   (PhiFirst)
///     = sum_{n<=N} <f, Psi_n><phi_n, g>   (PsiFirst)
/// Inner products are exact moment sums.
QuasiBasisCheck partial_sums(const EigenFamily& family, const GaussPolyd& f, const GaussPolyd& g,
                             int n_max, Ordering ordering, double tolerance = 1e-6);

/// Sampled test functions; inner products by adaptive quadrature against the
/// pointwise family values. Membership in D is the caller's claim.
QuasiBasisCheck partial_sums(const EigenFamily& family, const RealFunction& f,
                             const RealFunction& g, int n_max, Ordering ordering,
                             double tolerance = 1e-6, bool asserted_in_domain = true);

enum class VerdictKind {
  NotPseudoBosonic,
  RieszLikeCollapse,
  BiorthogonalBasesNotRiesz,
  QuasiBasesOnly,
  UndeterminedClosedForm,
};

std::string to_string(VerdictKind k);

/// Monotone growth of the quadrature norm series, used where closed forms
/// do not apply.
struct OracleGrowthEvidence {
  int n_from = 0;
  int n_to = 0;
  bool phi_strictly_increasing = false;
  bool psi_strictly_increasing = false;
  std::vector<double> log_phi;
  std::vector<double> log_psi;
};

OracleGrowthEvidence oracle_growth_evidence(const GbtParams& params, int n_from = 5, int n_to = 40);

struct BasisVerdict {
  VerdictKind kind = VerdictKind::UndeterminedClosedForm;
  std::vector<std::string> rationale_codes;
  std::optional<OracleGrowthEvidence> oracle_evidence;
};

/// Decided from (scenario, anomaly, x, y) alone.
BasisVerdict verdict(const GbtParams& params, const NormalizabilityReport& normalizability,
                     const std::optional<AsymptoticsReport>& asymptotics);

/// Computes its own evidence; attaches oracle growth evidence for complex
/// parameters in scenario D.
BasisVerdict verdict(const GbtParams& params, bool with_oracle_evidence = true);

}  // namespace pbgbt
