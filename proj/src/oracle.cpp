#include "pbgbt/oracle.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace pbgbt {

namespace {

constexpr double kBoundaryRatio = 1e-18;

/// ln|p_k(t)| and sign for the orthonormal Hermite polynomials (weight
/// exp(-t^2)), k = n-1 and n, with running rescaling against overflow.
struct OrthoPair {
  double prev = 0.0;  // p_{n-1} / scale
  double cur = 0.0;   // p_n / scale
  double log_scale = 0.0;
};

OrthoPair orthonormal_hermite(int n, double t) {
  OrthoPair r;
  double pm1 = 0.0;
  double p = std::pow(pi<double>(), -0.25);
  for (int k = 0; k < n; ++k) {
    const double next = std::sqrt(2.0 / (k + 1)) * t * p - std::sqrt(double(k) / (k + 1)) * pm1;
    pm1 = p;
    p = next;
    const double mag = std::abs(p);
    if (mag > 1e200) {
      pm1 /= mag;
      p /= mag;
      r.log_scale += std::log(mag);
    }
  }
  r.prev = pm1;
  r.cur = p;
  return r;
}

HermiteRule compute_rule(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("hermite_rule: eigenvalue solve failed");

  HermiteRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.scaled_weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double t = solver.eigenvalues()(i);
    // polish with Newton on p_n, p_n' = sqrt(2n) p_{n-1}
    for (int it = 0; it < 4; ++it) {
      const auto pr = orthonormal_hermite(n, t);
      t -= pr.cur / (std::sqrt(2.0 * n) * pr.prev);
    }
    const auto pr = orthonormal_hermite(n, t);
    const double log_p = std::log(std::abs(pr.prev)) + pr.log_scale;
    rule.nodes[static_cast<std::size_t>(i)] = t;
    // w_i = 1 / (n p_{n-1}(t_i)^2); stored as w_i exp(t_i^2)
    rule.scaled_weights[static_cast<std::size_t>(i)] = std::exp(t * t - std::log(double(n)) - 2.0 * log_p);
  }
  return rule;
}

double peak_abs(const RealFunction& F, double lo, double hi) {
  double peak = 0.0;
  constexpr int samples = 400;
  for (int i = 0; i <= samples; ++i) peak = std::max(peak, std::abs(F(lo + (hi - lo) * i / samples)));
  return peak;
}

double find_radius(const RealFunction& F, Line line) {
  double radius = 4.0;
  for (int iter = 0; iter < 40; ++iter) {
    const double lo = line == Line::Full ? -radius : 0.0;
    const double peak = peak_abs(F, lo, radius);
    double edge = std::abs(F(radius));
    if (line == Line::Full) edge = std::max(edge, std::abs(F(-radius)));
    if (peak == 0.0) return radius;
    if (edge <= kBoundaryRatio * peak) return radius;
    radius *= 1.5;
    if (radius > 1e5) break;
  }
  throw NonIntegrableError("quadrature: integrand does not decay below 1e-18 of its peak");
}

Complex adaptive(const RealFunction& F, double lo, double hi, double tol, double* err) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(F, lo, hi, 20, tol, err);
}

constexpr int kMaxRuleNodes = 2000;

int auto_nodes(int total_degree) { return std::max(32, total_degree / 2 + 40); }

}  // namespace

void QuadratureSpec::check() const {
  if (node_count != 0 && node_count < 16)
    throw ConfigurationError("QuadratureSpec: node_count must be >= 16");
  if (truncation_radius < 0.0) throw ConfigurationError("QuadratureSpec: negative radius");
  if (!(target_rel_tol > 0.0)) throw ConfigurationError("QuadratureSpec: tolerance must be > 0");
}

const HermiteRule& hermite_rule(int n) {
  if (n < 1 || n > kMaxRuleNodes) throw ConfigurationError("hermite_rule: node count out of range");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HermiteRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<HermiteRule>(compute_rule(n));
  return *slot;
}

QuadResult quad_integral(const RealFunction& F, const QuadratureSpec& spec, Line line) {
  spec.check();
  const double radius = spec.truncation_radius > 0.0 ? spec.truncation_radius : find_radius(F, line);
  const double lo = line == Line::Full ? -radius : 0.0;
  double e1 = 0.0, e2 = 0.0;
  const Complex coarse = adaptive(F, lo, radius, std::sqrt(spec.target_rel_tol), &e1);
  const Complex fine = adaptive(F, lo, radius, spec.target_rel_tol, &e2);
  return {fine, std::abs(fine - coarse), 0};
}

QuadResult quad_inner(const RealFunction& f, const RealFunction& g, const QuadratureSpec& spec,
                      Line line) {
  return quad_integral([&](double x) { return std::conj(f(x)) * g(x); }, spec, line);
}

QuadResult quad_inner(const GaussPolyx& f, const GaussPolyx& g, const QuadratureSpec& spec,
                      Line line) {
  spec.check();
  if (f.is_zero() || g.is_zero()) return {Complex{}, 0.0, 0};
  const Complex kf = to_complex(f.kappa), kg = to_complex(g.kappa);
  const Complex sigma = (std::conj(kf) + kg) / 2.0;
  if (!(sigma.real() > 0.0)) throw NonIntegrableError("quad_inner: product does not decay");

  // polynomial parts in extended precision, Gaussian in double
  auto poly_product = [&](double x) {
    const ExtReal xe(x);
    ExtComplex pf(0), pg(0);
    for (std::size_t i = f.poly.size(); i-- > 0;) pf = pf * ExtComplex(xe) + f.poly[i];
    for (std::size_t i = g.poly.size(); i-- > 0;) pg = pg * ExtComplex(xe) + g.poly[i];
    using std::conj;
    return to_complex(conj(pf) * pg);
  };
  auto integrand = [&](double x) { return poly_product(x) * std::exp(-sigma * x * x); };

  if (line == Line::Half || spec.rule == QuadratureRule::AdaptiveTruncated)
    return quad_integral(integrand, spec, line);

  const double c = sigma.real();
  const Complex osc{0.0, sigma.imag()};
  double magnitude = 0.0;
  auto rule_sum = [&](int nodes) {
    const auto& rule = hermite_rule(nodes);
    Complex acc{};
    magnitude = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = rule.nodes[i] / std::sqrt(c);
      // exp(-c x^2) = exp(-t^2) is absorbed into the weight
      const Complex term = rule.scaled_weights[i] * std::exp(-rule.nodes[i] * rule.nodes[i]) *
                           poly_product(x) * std::exp(-osc * x * x);
      acc += term;
      magnitude += std::abs(term);
    }
    magnitude /= std::sqrt(c);
    return acc / std::sqrt(c);
  };
  // rounding in the node sum bounds what any node count can resolve
  auto floor_of = [&] { return 64.0 * std::numeric_limits<double>::epsilon() * magnitude; };

  if (spec.node_count > 0) {
    const Complex q1 = rule_sum(spec.node_count);
    const Complex q2 = rule_sum(2 * spec.node_count);
    return {q2, std::max(std::abs(q2 - q1), floor_of()), 2 * spec.node_count};
  }
  // oscillating widths (Im sigma != 0) need more nodes than the degree suggests
  int n = auto_nodes(f.degree() + g.degree());
  Complex q1 = rule_sum(n);
  for (;;) {
    const Complex q2 = rule_sum(2 * n);
    const double err = std::max(std::abs(q2 - q1), floor_of());
    if (err <= spec.target_rel_tol * std::abs(q2) || err <= floor_of() || 4 * n > kMaxRuleNodes)
      return {q2, err, 2 * n};
    n *= 2;
    q1 = q2;
  }
}

QuadResult quad_inner(const GaussPolyd& f, const GaussPolyd& g, const QuadratureSpec& spec,
                      Line line) {
  return quad_inner(convert<ExtComplex>(f), convert<ExtComplex>(g), spec, line);
}

MemberValues evaluate_members(const GbtParams& params, const NormalizationConvention& conv,
                              int n_max, double x) {
  const auto ops = make_operators<Complex>(params);
  const Complex k_phi = (params.beta - params.delta) / (params.beta + params.delta);
  const Complex k_psi = std::conj((params.gamma - params.alpha) / (params.gamma + params.alpha));

  // (f_n, f_n') stepped by f_{n+1} = R f_n / sqrt(n+1); f_n'' from L R f_n = n f_n
  auto run = [&](const LadderOperator<Complex>& raise, const LadderOperator<Complex>& lower,
                 Complex f0, Complex kappa) {
    std::vector<Complex> out(static_cast<std::size_t>(n_max) + 1);
    Complex f = f0 * std::exp(-kappa * x * x / 2.0);
    Complex df = -kappa * x * f;
    const Complex mr = raise.x_coeff, nr = raise.d_coeff, ml = lower.x_coeff, nl = lower.d_coeff;
    for (int n = 0; n <= n_max; ++n) {
      out[static_cast<std::size_t>(n)] = f;
      if (n == n_max) break;
      const Complex d2f = (double(n) * f - mr * ml * x * x * f - (mr * nl + nr * ml) * x * df -
                           nr * ml * f) /
                          (nr * nl);
      const double s = 1.0 / std::sqrt(double(n + 1));
      const Complex next = (mr * x * f + nr * df) * s;
      const Complex dnext = (mr * f + mr * x * df + nr * d2f) * s;
      f = next;
      df = dnext;
    }
    return out;
  };
  return {run(ops.b, ops.a, conv.n_phi, k_phi), run(ops.a_dag, ops.b_dag, conv.n_psi, k_psi)};
}

OracleNormSeries quad_norm_series(const GbtParams& params, const NormalizationConvention& conv,
                                  int n_max, const QuadratureSpec& spec) {
  spec.check();
  if (n_max < 0) throw DomainError("quad_norm_series: negative n_max");
  const double c_phi = ((params.beta - params.delta) / (params.beta + params.delta)).real();
  const double c_psi = ((params.gamma - params.alpha) / (params.gamma + params.alpha)).real();
  if (!(c_phi > 0.0) || !(c_psi > 0.0))
    throw NonIntegrableError("quad_norm_series: ground states not square integrable");

  const int n1 = spec.node_count > 0 ? spec.node_count : auto_nodes(2 * n_max);
  const auto size = static_cast<std::size_t>(n_max) + 1;

  // |f_n|^2 = |poly|^2 exp(-Re(kappa) x^2): Hermite nodes scaled by Re(kappa)
  auto norms = [&](int nodes, double c, bool phi_side) {
    const auto& rule = hermite_rule(nodes);
    std::vector<double> acc(size, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = rule.nodes[i];
      const double x = t / std::sqrt(c);
      const auto vals = evaluate_members(params, conv, n_max, x);
      const auto& v = phi_side ? vals.phi : vals.psi;
      for (std::size_t n = 0; n < size; ++n) acc[n] += rule.scaled_weights[i] * std::norm(v[n]);
    }
    for (auto& a : acc) a /= std::sqrt(c);
    return acc;
  };

  OracleNormSeries out;
  out.phi.params = out.psi.params = params;
  out.phi.source = out.psi.source = NormSource::Oracle;
  const auto phi1 = norms(n1, c_phi, true), phi2 = norms(2 * n1, c_phi, true);
  const auto psi1 = norms(n1, c_psi, false), psi2 = norms(2 * n1, c_psi, false);
  for (std::size_t n = 0; n < size; ++n) {
    out.phi.values.push_back(LogMagnitude::from_value(phi2[n]));
    out.psi.values.push_back(LogMagnitude::from_value(psi2[n]));
    out.phi_error.push_back(std::abs(phi2[n] - phi1[n]) / phi2[n]);
    out.psi_error.push_back(std::abs(psi2[n] - psi1[n]) / psi2[n]);
  }
  return out;
}

OracleNormSeries quad_norm_series(const EigenFamily& family, int n_max, const QuadratureSpec& spec) {
  if (n_max > family.n_max) throw DomainError("quad_norm_series: n_max beyond family");
  return quad_norm_series(family.params, family.convention, n_max, spec);
}

}  // namespace pbgbt
