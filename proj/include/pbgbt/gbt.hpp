#pragma once

#include <string>

#include "pbgbt/gausspoly.hpp"

namespace pbgbt {

/// Entries of the transformation a = beta c - delta c^dagger,
/// b = -alpha c + gamma c^dagger.
struct GbtParams {
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex delta;

  Complex determinant() const { return beta * gamma - alpha * delta; }
  bool is_real(double tol = 0.0) const;

  friend bool operator==(const GbtParams&, const GbtParams&) = default;
};

inline constexpr double kDeterminantTolerance = 1e-12;

struct ValidatedParams {
  GbtParams params;
  Complex determinant;
  /// (gamma, -alpha) == (conj beta, -conj delta) to 1e-12 relative: the
  /// ordinary bosonic case.
  bool b_is_a_dagger = false;
};

/// Throws DeterminantError or DegenerateExponentError.
ValidatedParams validate(const GbtParams& params);

enum class Scenario { A, B, C, D };

std::string to_string(Scenario s);

struct NormalizabilityReport {
  bool phi0_in_H = false;
  bool psi0_in_H = false;
  Scenario scenario = Scenario::C;
  /// Re((beta-delta)/(beta+delta)) and Re((gamma-alpha)/(gamma+alpha)).
  double re_phi_exponent = 0.0;
  double re_psi_exponent = 0.0;
};

/// Strict positivity of both exponent real parts; zero is not normalizable.
NormalizabilityReport normalizability(const GbtParams& params);

/// Swanson angle, restricted to (-pi/4, pi/4) without zero.
class SwansonParams {
 public:
  explicit SwansonParams(double theta);
  double theta() const { return theta_; }

 private:
  double theta_;
};

/// beta = gamma = cos(theta), alpha = delta = -i sin(theta).
GbtParams swanson(const SwansonParams& theta);

/// Real family with alpha beta = gamma delta: gamma = beta/(beta^2-delta^2),
/// alpha = delta/(beta^2-delta^2). Requires beta > delta > 0.
GbtParams constrained_family(double beta, double delta);

/// alpha beta - gamma delta. Also checks
/// (beta^2-delta^2)(gamma^2-alpha^2) = 1 - (alpha beta - gamma delta)^2
/// up to the determinant defect, throwing Error on failure.
Complex anomaly(const GbtParams& params);

/// Real entries with beta -/+ delta > 0 and gamma -/+ alpha > 0: every factor
/// of the closed-form norms is then a positive real. Includes the boundary
/// alpha = delta = 0 (standard bosons).
bool is_real_ordered(const GbtParams& params);

/// Parameter sets that realize scenarios A-D, plus the identity map.
GbtParams scenario_example(Scenario s);
GbtParams standard_bosons();

/// a, b and their formal adjoints in the x-representation.
template <typename Scalar>
struct GbtOperators {
  LadderOperator<Scalar> a;
  LadderOperator<Scalar> b;
  LadderOperator<Scalar> a_dag;
  LadderOperator<Scalar> b_dag;
};

template <typename Scalar = Complex>
GbtOperators<Scalar> make_operators(const GbtParams& p) {
  using std::conj;
  using std::sqrt;
  using Real = RealOf<Scalar>;
  const Scalar al = from_complex<Scalar>(p.alpha);
  const Scalar be = from_complex<Scalar>(p.beta);
  const Scalar ga = from_complex<Scalar>(p.gamma);
  const Scalar de = from_complex<Scalar>(p.delta);
  const Scalar s = Scalar(Real(1) / sqrt(Real(2)));
  return {
      {s * (be - de), s * (be + de)},
      {s * (ga - al), -s * (ga + al)},
      {s * (conj(be) - conj(de)), -s * (conj(be) + conj(de))},
      {s * (conj(ga) - conj(al)), s * (conj(ga) + conj(al))},
  };
}

}  // namespace pbgbt
