#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pbgbt/gbt.hpp"

namespace pbgbt {

inline constexpr int kMaxFamilyIndex = 200;

enum class ConventionKind { Default, Symmetric };

std::string to_string(ConventionKind k);

/// N_phi and N_Psi. Only N_phi conj(N_Psi) = (pi (alpha+gamma)(beta+delta))^{-1/2}
/// is fixed by <Psi_0, phi_0> = 1; the split between the two is a choice.
struct NormalizationConvention {
  Complex n_phi{1.0, 0.0};
  Complex n_psi{1.0, 0.0};
  ConventionKind kind = ConventionKind::Default;

  /// Default: N_phi = 1. Symmetric: N_phi = N_Psi = (pi P Q)^{-1/4}, which
  /// needs a positive real P Q.
  static NormalizationConvention make(const GbtParams& params,
                                      ConventionKind kind = ConventionKind::Default);

  /// |N_phi conj(N_Psi) - (pi P Q)^{-1/2}| relative.
  double product_defect(const GbtParams& params) const;
};

/// Biorthogonal eigenfamilies phi_n = b^n phi_0 / sqrt(n!) and
/// Psi_n = (a^dagger)^n Psi_0 / sqrt(n!). Immutable once built.
struct EigenFamily {
  GbtParams params;
  NormalizationConvention convention;
  std::vector<GaussPolyx> phi;
  std::vector<GaussPolyx> psi;
  int n_max = 0;
};

/// phi_0 and Psi_0, annihilated by a and b^dagger. Throws NotPseudoBosonicError
/// unless both are square integrable.
std::pair<GaussPolyx, GaussPolyx> ground_states(const GbtParams& params,
                                                const NormalizationConvention& convention);

EigenFamily build_family(const GbtParams& params, int n_max,
                         ConventionKind kind = ConventionKind::Default);

/// N_phi (n! 2^n)^{-1/2} ((alpha+gamma)/(beta+delta))^{n/2}
///   H_n(x / sqrt((alpha+gamma)(beta+delta))) exp(-x^2 (beta-delta)/(2(beta+delta)))
GaussPolyx closed_form_phi(const GbtParams& params, int n,
                           const NormalizationConvention& convention);

/// closed_form_phi with delta -> conj(alpha), beta -> conj(gamma), N_phi -> N_Psi.
GaussPolyx closed_form_psi(const GbtParams& params, int n,
                           const NormalizationConvention& convention);

/// Largest coefficient residual between the iterated and closed-form members.
double closed_form_residual(const EigenFamily& family);

struct RelationResidual {
  std::string relation;
  double max_residual = 0.0;
  int worst_n = 0;
};

struct LadderReport {
  std::vector<RelationResidual> relations;
  double max_residual = 0.0;
  bool ground_states_annihilated = false;
};

/// a phi_n = sqrt(n) phi_{n-1}, b phi_n = sqrt(n+1) phi_{n+1},
/// b^dagger Psi_n = sqrt(n) Psi_{n-1}, a^dagger Psi_n = sqrt(n+1) Psi_{n+1}.
LadderReport verify_ladder(const EigenFamily& family);

struct NumberOperatorReport {
  double max_phi_residual = 0.0;  ///< N phi_n = n phi_n with N = b a
  double max_psi_residual = 0.0;  ///< N^dagger Psi_n = n Psi_n with N^dagger = a^dagger b^dagger
  bool eigenvalues_simple = true;
  /// max |<Nf,g> - <f,Ng>| over random pairs; set when the family is real
  /// ordered with vanishing anomaly, where N is expected to be symmetric.
  std::optional<double> symmetry_residual;
};

NumberOperatorReport number_operator_check(const EigenFamily& family, std::uint64_t seed = 7,
                                           int pairs = 5);

/// max |<Nf,g> - <f,Ng>| over random Gaussian test pairs, regardless of regime.
double number_operator_symmetry_defect(const GbtParams& params, std::uint64_t seed, int pairs);

/// Gram matrix <phi_n, Psi_m>, n, m <= n_max.
Eigen::MatrixXcd biorthonormality_matrix(const EigenFamily& family, int n_max);

/// Constrained family: Psi_n = (beta^2 - delta^2)^n (N_Psi / N_phi) phi_n.
double constrained_proportionality_residual(const EigenFamily& family, int n_max);

/// Swanson: Psi_n^theta = (N_Psi / N_phi) phi_n^{-theta}.
double swanson_mirror_residual(double theta, int n_max);

}  // namespace pbgbt
