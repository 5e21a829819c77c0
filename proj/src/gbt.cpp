#include "pbgbt/gbt.hpp"

#include <cmath>
#include <sstream>

namespace pbgbt {

namespace {

std::string format(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

}  // namespace

bool GbtParams::is_real(double tol) const {
  return std::abs(alpha.imag()) <= tol && std::abs(beta.imag()) <= tol &&
         std::abs(gamma.imag()) <= tol && std::abs(delta.imag()) <= tol;
}

ValidatedParams validate(const GbtParams& params) {
  const Complex det = params.determinant();
  if (std::abs(det - 1.0) > kDeterminantTolerance)
    throw DeterminantError("det(T) = beta gamma - alpha delta = " + format(det) + " != 1", det);
  if (params.beta + params.delta == Complex{})
    throw DegenerateExponentError("beta + delta = 0: phi_0 exponent undefined");
  if (params.gamma + params.alpha == Complex{})
    throw DegenerateExponentError("gamma + alpha = 0: Psi_0 exponent undefined");
  const double scale = std::abs(params.beta) + std::abs(params.delta);
  const bool dagger =
      std::abs(params.gamma - std::conj(params.beta)) <= kDeterminantTolerance * scale &&
      std::abs(params.alpha - std::conj(params.delta)) <= kDeterminantTolerance * scale;
  return {params, det, dagger};
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::A: return "A";
    case Scenario::B: return "B";
    case Scenario::C: return "C";
    case Scenario::D: return "D";
  }
  return "?";
}

NormalizabilityReport normalizability(const GbtParams& p) {
  NormalizabilityReport r;
  r.re_phi_exponent = ((p.beta - p.delta) / (p.beta + p.delta)).real();
  r.re_psi_exponent = ((p.gamma - p.alpha) / (p.gamma + p.alpha)).real();
  r.phi0_in_H = r.re_phi_exponent > 0.0;
  r.psi0_in_H = r.re_psi_exponent > 0.0;
  if (r.phi0_in_H && r.psi0_in_H)
    r.scenario = Scenario::D;
  else if (r.phi0_in_H)
    r.scenario = Scenario::A;
  else if (r.psi0_in_H)
    r.scenario = Scenario::B;
  else
    r.scenario = Scenario::C;
  return r;
}

SwansonParams::SwansonParams(double theta) : theta_(theta) {
  const double quarter = pi<double>() / 4.0;
  if (!(theta > -quarter && theta < quarter) || theta == 0.0)
    throw RangeError("Swanson theta must lie in (-pi/4, pi/4) \\ {0}");
}

GbtParams swanson(const SwansonParams& theta) {
  const double c = std::cos(theta.theta());
  const double s = std::sin(theta.theta());
  const Complex minus_i_sin{0.0, -s};
  return {minus_i_sin, {c, 0.0}, {c, 0.0}, minus_i_sin};
}

GbtParams constrained_family(double beta, double delta) {
  if (!(beta > delta && delta > 0.0))
    throw OrderingError("constrained_family requires beta > delta > 0");
  const double d2 = (beta - delta) * (beta + delta);
  return {delta / d2, beta, beta / d2, delta};
}

Complex anomaly(const GbtParams& p) {
  const Complex an = p.alpha * p.beta - p.gamma * p.delta;
  const Complex lhs = (p.beta * p.beta - p.delta * p.delta) * (p.gamma * p.gamma - p.alpha * p.alpha);
  const Complex rhs = 1.0 - an * an;
  // the identity is exact up to det^2 - 1
  const Complex det = p.determinant();
  const double scale = 1.0 + std::abs(lhs) + std::abs(rhs);
  if (std::abs(lhs - rhs - (det * det - 1.0)) > 1e-12 * scale)
    throw Error("anomaly: product identity violated");
  return an;
}

bool is_real_ordered(const GbtParams& p) {
  if (!p.is_real()) return false;
  const double al = p.alpha.real(), be = p.beta.real(), ga = p.gamma.real(), de = p.delta.real();
  return be - de > 0.0 && be + de > 0.0 && ga - al > 0.0 && ga + al > 0.0;
}

GbtParams scenario_example(Scenario s) {
  switch (s) {
    case Scenario::A: return {1.0, 2.0, 1.0, 1.0};
    case Scenario::B: return {1.0, 1.0, 2.0, 1.0};
    case Scenario::C: return {-1.5, 0.25, 1.0, 0.5};
    case Scenario::D: return {2.0 / 3.0, 2.0, 1.0, 1.5};
  }
  return standard_bosons();
}

GbtParams standard_bosons() { return {0.0, 1.0, 1.0, 0.0}; }

}  // namespace pbgbt
