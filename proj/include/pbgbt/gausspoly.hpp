#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "pbgbt/specialfns.hpp"

namespace pbgbt {

/// p(x) exp(-kappa x^2 / 2) with p held exactly as coefficients.
/// The empty / all-zero coefficient list is the zero function for any kappa.
template <typename Scalar>
struct GaussPoly {
  using Real = RealOf<Scalar>;

  PolyCoeffs<Scalar> poly;
  Scalar kappa{1};

  GaussPoly() = default;
  GaussPoly(PolyCoeffs<Scalar> p, Scalar k) : poly(std::move(p)), kappa(std::move(k)) {}

  /// Degree of p; -1 for the zero function.
  int degree() const {
    for (std::size_t i = poly.size(); i-- > 0;)
      if (poly[i] != Scalar(0)) return static_cast<int>(i);
    return -1;
  }

  bool is_zero() const { return degree() < 0; }

  bool square_integrable() const {
    using std::real;
    return is_zero() || real(kappa) > 0;
  }

  Scalar operator()(const Real& x) const {
    using std::exp;
    Scalar acc(0);
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * Scalar(x) + poly[i];
    return acc * exp(-kappa * Scalar(x * x) / Scalar(2));
  }

  Scalar max_abs_coeff() const {
    using std::abs;
    Real m(0);
    for (const auto& c : poly) m = std::max<Real>(m, Real(abs(c)));
    return Scalar(m);
  }

  GaussPoly& operator*=(const Scalar& s) {
    for (auto& c : poly) c *= s;
    return *this;
  }

  friend GaussPoly operator*(const Scalar& s, GaussPoly f) { return f *= s; }
  friend GaussPoly operator*(GaussPoly f, const Scalar& s) { return f *= s; }
};

using GaussPolyd = GaussPoly<Complex>;
using GaussPolyx = GaussPoly<ExtComplex>;

template <typename To, typename From>
GaussPoly<To> convert(const GaussPoly<From>& f) {
  if constexpr (std::is_same_v<To, From>) {
    return f;
  } else {
    GaussPoly<To> out;
    out.poly.reserve(f.poly.size());
    if constexpr (std::is_same_v<From, Complex>) {
      for (const auto& c : f.poly) out.poly.push_back(from_complex<To>(c));
      out.kappa = from_complex<To>(f.kappa);
    } else {
      for (const auto& c : f.poly) out.poly.push_back(to_complex(c));
      out.kappa = to_complex(f.kappa);
    }
    return out;
  }
}

/// mu x + nu d/dx.
template <typename Scalar>
struct LadderOperator {
  Scalar x_coeff;
  Scalar d_coeff;

  LadderOperator(Scalar mu, Scalar nu) : x_coeff(std::move(mu)), d_coeff(std::move(nu)) {
    if (x_coeff == Scalar(0) && d_coeff == Scalar(0))
      throw DomainError("LadderOperator: both coefficients are zero");
  }
};

template <typename Scalar>
LadderOperator<Scalar> adjoint(const LadderOperator<Scalar>& op) {
  using std::conj;
  return {conj(op.x_coeff), -conj(op.d_coeff)};
}

/// (mu x + nu d/dx)[p e^{-k x^2/2}] = ((mu - nu k) x p + nu p') e^{-k x^2/2}.
/// A leading factor mu - nu k at rounding level is snapped to an exact zero so
/// annihilators kill their ground state exactly.
template <typename Scalar>
GaussPoly<Scalar> apply_ladder(const LadderOperator<Scalar>& op, const GaussPoly<Scalar>& f) {
  using Real = RealOf<Scalar>;
  using std::abs;
  const int deg = f.degree();
  if (deg < 0) return {{}, f.kappa};

  Scalar shift = op.x_coeff - op.d_coeff * f.kappa;
  const Real scale = Real(abs(op.x_coeff)) + Real(abs(op.d_coeff * f.kappa));
  if (Real(abs(shift)) <= Real(64) * std::numeric_limits<Real>::epsilon() * scale)
    shift = Scalar(0);

  PolyCoeffs<Scalar> out(static_cast<std::size_t>(deg) + 2, Scalar(0));
  for (int k = 0; k <= deg; ++k) {
    const auto& c = f.poly[static_cast<std::size_t>(k)];
    if (shift != Scalar(0)) out[static_cast<std::size_t>(k) + 1] += shift * c;
    if (k > 0) out[static_cast<std::size_t>(k) - 1] += op.d_coeff * Scalar(Real(k)) * c;
  }
  while (!out.empty() && out.back() == Scalar(0)) out.pop_back();
  return {std::move(out), f.kappa};
}

/// <f, g> = int conj(f) g dx, evaluated exactly through Gaussian moments.
template <typename Scalar>
Scalar inner_product(const GaussPoly<Scalar>& f, const GaussPoly<Scalar>& g) {
  using std::conj;
  using std::real;
  const int df = f.degree();
  const int dg = g.degree();
  if (df < 0 || dg < 0) return Scalar(0);
  const Scalar sigma = (conj(f.kappa) + g.kappa) / Scalar(2);
  if (!(real(sigma) > 0))
    throw NonIntegrableError("inner_product: Re(conj(kappa_f) + kappa_g) <= 0");
  const auto moments = gaussian_moments<Scalar>(df + dg, sigma);

  // collect conj(p_i) q_j by total degree, then weight by the moment
  std::vector<Scalar> conv(static_cast<std::size_t>(df + dg) + 1, Scalar(0));
  for (int i = 0; i <= df; ++i) {
    const Scalar pi_conj = conj(f.poly[static_cast<std::size_t>(i)]);
    if (pi_conj == Scalar(0)) continue;
    for (int j = (i % 2); j <= dg; j += 2)
      conv[static_cast<std::size_t>(i + j)] += pi_conj * g.poly[static_cast<std::size_t>(j)];
  }
  Scalar acc(0);
  for (int m = 0; m <= df + dg; m += 2)
    acc += conv[static_cast<std::size_t>(m)] * moments[static_cast<std::size_t>(m)];
  return acc;
}

/// Coefficientwise residual |f - g|_max / |g|_max (absolute when g is zero).
/// Different widths make the residual infinite.
template <typename Scalar>
double coefficient_residual(const GaussPoly<Scalar>& f, const GaussPoly<Scalar>& g,
                            double kappa_tol = 1e-12) {
  using std::abs;
  using Real = RealOf<Scalar>;
  if (!f.is_zero() && !g.is_zero() &&
      to_double(Real(abs(f.kappa - g.kappa))) > kappa_tol * (1.0 + to_double(Real(abs(g.kappa)))))
    return std::numeric_limits<double>::infinity();
  const std::size_t n = std::max(f.poly.size(), g.poly.size());
  Real diff(0), ref(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar a = i < f.poly.size() ? f.poly[i] : Scalar(0);
    const Scalar b = i < g.poly.size() ? g.poly[i] : Scalar(0);
    diff = std::max<Real>(diff, Real(abs(a - b)));
    ref = std::max<Real>(ref, Real(abs(b)));
  }
  return to_double(ref > 0 ? Real(diff / ref) : diff);
}

/// Scalar lambda with (AB - BA) f = lambda f. For first-order operators
/// [mu_A x + nu_A D, mu_B x + nu_B D] = nu_A mu_B - mu_A nu_B; the explicit
/// residual is checked against that value before returning it.
template <typename Scalar>
Scalar commutator_check(const LadderOperator<Scalar>& a, const LadderOperator<Scalar>& b,
                        const GaussPoly<Scalar>& f, double tol = 1e-10) {
  if (f.is_zero()) throw DomainError("commutator_check: f is identically zero");
  const Scalar lambda = a.d_coeff * b.x_coeff - a.x_coeff * b.d_coeff;
  const auto ab = apply_ladder(a, apply_ladder(b, f));
  const auto ba = apply_ladder(b, apply_ladder(a, f));
  const std::size_t n = std::max({ab.poly.size(), ba.poly.size(), f.poly.size()});
  GaussPoly<Scalar> resid{PolyCoeffs<Scalar>(n, Scalar(0)), f.kappa};
  for (std::size_t i = 0; i < n; ++i) {
    if (i < ab.poly.size()) resid.poly[i] += ab.poly[i];
    if (i < ba.poly.size()) resid.poly[i] -= ba.poly[i];
    if (i < f.poly.size()) resid.poly[i] -= lambda * f.poly[i];
  }
  using std::abs;
  using Real = RealOf<Scalar>;
  const Real worst = Real(abs(resid.max_abs_coeff()));
  const Real scale = Real(abs(f.max_abs_coeff())) * (Real(1) + Real(abs(lambda)));
  if (to_double(Real(worst / scale)) > tol)
    throw Error("commutator_check: (AB-BA)f is not proportional to f");
  return lambda;
}

/// e_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)).
template <typename Scalar = Complex>
GaussPoly<Scalar> hermite_basis_function(int n) {
  using Real = RealOf<Scalar>;
  using std::sqrt;
  auto coeffs = hermite_coeffs<Scalar>(n);
  // 2^n n! built incrementally to stay exact in the scalar's precision
  Real norm_sq = sqrt(pi<Real>());
  for (int k = 1; k <= n; ++k) norm_sq *= Real(2 * k);
  const Scalar inv = Scalar(Real(1) / sqrt(norm_sq));
  for (auto& c : coeffs) c *= inv;
  return {std::move(coeffs), Scalar(1)};
}

}  // namespace pbgbt
