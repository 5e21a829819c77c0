#include "pbgbt/report.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <iomanip>
#include <sstream>

namespace pbgbt {

using nlohmann::json;

namespace {

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigurationError("field '" + field + "': expected a number or [re, im]");
}

json gauss_json(const GaussPolyd& f) {
  json coeffs = json::array();
  for (const auto& c : f.poly) coeffs.push_back(cjson(c));
  return {{"coeffs", coeffs}, {"kappa", cjson(f.kappa)}};
}

GaussPolyd gauss_from(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("kappa"))
    throw ConfigurationError("field '" + field + "': expected {coeffs: [...], kappa: [re, im]}");
  GaussPolyd f;
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i)
    f.poly.push_back(complex_from(j["coeffs"][i], field + ".coeffs[" + std::to_string(i) + "]"));
  f.kappa = complex_from(j["kappa"], field + ".kappa");
  return f;
}

json grid_json(const Grid& g) { return json::array({g.start, g.stop, g.count}); }

Grid grid_from(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3)
    throw ConfigurationError("field '" + field + "': expected [start, stop, count]");
  Grid g{j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
  if (g.count < 1) throw ConfigurationError("field '" + field + "': count must be >= 1");
  return g;
}

json params_json(const GbtParams& p) {
  return {{"alpha", cjson(p.alpha)},
          {"beta", cjson(p.beta)},
          {"gamma", cjson(p.gamma)},
          {"delta", cjson(p.delta)}};
}

json check_json(const std::string& name, bool passed, double value, double tolerance,
                const std::string& source) {
  return {{"name", name},
          {"passed", passed},
          {"value", value},
          {"tolerance", tolerance},
          {"source", source}};
}

json asymptotics_json(const AsymptoticsReport& a) {
  json j = {{"x", a.x},
            {"y", a.y},
            {"s", a.s},
            {"anomaly", a.anomaly},
            {"a_phi", a.a_phi},
            {"a_psi", a.a_psi},
            {"a_phi_halfline_constant", a.a_phi_halfline},
            {"a_psi_halfline_constant", a.a_psi_halfline},
            {"product_base", a.product_base},
            {"phi_trend", to_string(a.phi_trend)},
            {"psi_trend", to_string(a.psi_trend)},
            {"product_trend", to_string(a.product_trend)},
            {"convention", to_string(a.convention)},
            {"source", "closed_form"}};
  j["a_const"] = a.a_const ? json(*a.a_const) : json(nullptr);
  return j;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

int quasi_nmax(const RunConfig& cfg) { return std::min(cfg.quasi.n_max, kMaxFamilyIndex); }

json base_report(const RunConfig& cfg) {
  return {{"tool", "pbgbt"}, {"artifact_version", kVersion}, {"mode", to_string(cfg.mode)},
          {"inputs", to_json(cfg)}};
}

void run_classify(const RunConfig& cfg, RunOutput& out) {
  out.report["classification"] = classify_json(cfg.source.resolve(), cfg.convention);
}

void run_spectrum(const RunConfig& cfg, RunOutput& out) {
  const auto params = cfg.source.resolve();
  validate(params);
  out.csv = spectrum_csv(params, cfg.convention, cfg.n_max);
  const auto conv = NormalizationConvention::make(params, cfg.convention);
  json s = {{"n_max", cfg.n_max}, {"convention", to_string(cfg.convention)}};
  if (is_real_ordered(params)) {
    const auto [phi, psi] = closed_form_norm_series(params, conv, cfg.n_max);
    const int lo = cfg.n_max >= 100 ? 50 : cfg.n_max / 2;
    std::vector<double> ns, lp, ls, lprod;
    for (int n = lo; n <= cfg.n_max; ++n) {
      ns.push_back(n);
      lp.push_back(phi.log_at(n));
      ls.push_back(psi.log_at(n));
      lprod.push_back(phi.log_at(n) + psi.log_at(n));
    }
    if (ns.size() >= 2)
      s["closed_form_slopes"] = {{"fit_from", lo},
                                 {"phi", fitted_slope(ns, lp)},
                                 {"psi", fitted_slope(ns, ls)},
                                 {"product", fitted_slope(ns, lprod)}};
    const auto cal = calibrate_prefactor(params, conv);
    s["prefactor_calibration"] = {{"measured_phi", cal.measured_phi},
                                  {"measured_psi", cal.measured_psi},
                                  {"full_line_phi", cal.derived_phi},
                                  {"full_line_psi", cal.derived_psi},
                                  {"half_line_phi", cal.halfline_phi},
                                  {"half_line_psi", cal.halfline_psi},
                                  {"rel_dev_phi", cal.rel_dev_phi},
                                  {"rel_dev_psi", cal.rel_dev_psi},
                                  {"measured_constant", cal.measured_constant()},
                                  {"source", "oracle"}};
  }
  s["columns"] = kCsvHeader;
  out.report["spectrum"] = s;
}

void run_verify(const RunConfig& cfg, RunOutput& out) {
  const auto params = cfg.source.resolve();
  json checks = json::array();
  auto add = [&](const std::string& name, double value, double tol, const std::string& src) {
    checks.push_back(check_json(name, value <= tol, value, tol, src));
  };

  const auto val = validate(params);
  add("determinant_is_one", std::abs(val.determinant - 1.0), kDeterminantTolerance, "closed_form");
  const auto norm = normalizability(params);
  checks.push_back(check_json("scenario_D", norm.scenario == Scenario::D,
                              norm.scenario == Scenario::D ? 0.0 : 1.0, 0.0, "closed_form"));
  if (norm.scenario == Scenario::D) {
    const int n_alg = std::min(cfg.n_max, 50);
    const auto fam = build_family(params, std::max(n_alg, std::min(cfg.n_max, 60)), cfg.convention);
    const auto ops = make_operators<ExtComplex>(params);
    double comm = 0.0;
    try {
      for (int n = 0; n <= n_alg; ++n)
        comm = std::max(comm, std::abs(to_complex(commutator_check(
                                           ops.a, ops.b, fam.phi[static_cast<std::size_t>(n)])) -
                                       1.0));
    } catch (const Error&) {
      comm = std::numeric_limits<double>::infinity();
    }
    add("commutator_ab_is_identity", comm, cfg.tol.algebra, "exact_algebra");
    const auto lad = verify_ladder(fam);
    add("ladder_relations", lad.max_residual, cfg.tol.algebra, "exact_algebra");
    const auto num = number_operator_check(fam, cfg.seed);
    add("number_operator_phi", num.max_phi_residual, cfg.tol.algebra, "exact_algebra");
    add("number_operator_psi", num.max_psi_residual, cfg.tol.algebra, "exact_algebra");
    if (num.symmetry_residual)
      add("number_operator_symmetric", *num.symmetry_residual, cfg.tol.algebra, "exact_algebra");

    const int n_gram = std::min(cfg.n_max, 30);
    const auto gram = biorthonormality_matrix(fam, n_gram);
    const double gram_dev =
        (gram - Eigen::MatrixXcd::Identity(n_gram + 1, n_gram + 1)).cwiseAbs().maxCoeff();
    add("biorthonormality", gram_dev, params.is_real() ? cfg.tol.algebra : cfg.tol.gram_complex,
        "exact_algebra");
    add("closed_form_matches_iteration", closed_form_residual(fam), cfg.tol.algebra,
        "exact_algebra");

    if (is_real_ordered(params)) {
      const auto conv = fam.convention;
      const auto cal = calibrate_prefactor(params, conv);
      add("prefactor_full_line_constant", std::max(cal.rel_dev_phi, cal.rel_dev_psi),
          cfg.tol.norm_rel, "oracle");
      const int n_norm = std::min(cfg.n_max, 60);
      const auto oracle = quad_norm_series(params, conv, n_norm);
      const auto [phi, psi] = closed_form_norm_series(params, conv, n_norm);
      double rel = 0.0, logdev = 0.0;
      for (int n = 0; n <= n_norm; ++n) {
        const double d_phi = std::abs(phi.log_at(n) - oracle.phi.log_at(n));
        const double d_psi = std::abs(psi.log_at(n) - oracle.psi.log_at(n));
        if (n <= 20) rel = std::max(rel, std::expm1(std::max(d_phi, d_psi)));
        logdev = std::max({logdev, d_phi, d_psi});
      }
      add("closed_form_norms_vs_oracle_rel_n_le_20", rel, cfg.tol.norm_rel, "oracle");
      add("closed_form_norms_vs_oracle_log_n_le_60", logdev, cfg.tol.norm_log, "oracle");
      if (std::abs(anomaly(params)) <= 1e-12) {
        const auto trend = norm_product_trend(params, std::min(cfg.n_max, 100));
        add("norm_product_constant", trend.max_rel_variation, cfg.tol.algebra, "closed_form");
        add("psi_proportional_to_phi", constrained_proportionality_residual(fam, std::min(fam.n_max, 40)),
            cfg.tol.algebra, "exact_algebra");
      }
    }
    if (cfg.source.kind == ParamsSource::Kind::Swanson) {
      add("swanson_mirror_symmetry", swanson_mirror_residual(cfg.source.theta, std::min(cfg.n_max, 40)),
          cfg.tol.algebra, "exact_algebra");
      const auto ev = oracle_growth_evidence(params);
      checks.push_back(check_json("oracle_norms_increase_5_to_40",
                                  ev.phi_strictly_increasing && ev.psi_strictly_increasing,
                                  ev.log_phi.back(), 0.0, "oracle"));
    }
  }
  bool all = true;
  for (const auto& c : checks) all = all && c["passed"].get<bool>();
  out.report["checks"] = checks;
  out.report["all_passed"] = all;
  if (!all) out.exit_code = exit_code::check_failed;
}

void run_quasi(const RunConfig& cfg, RunOutput& out) {
  const auto params = cfg.source.resolve();
  const int n = quasi_nmax(cfg);
  const auto fam = build_family(params, n, cfg.convention);
  const auto a = partial_sums(fam, cfg.quasi.f, cfg.quasi.g, n, Ordering::PhiFirst, cfg.tol.quasi);
  const auto b = partial_sums(fam, cfg.quasi.f, cfg.quasi.g, n, Ordering::PsiFirst, cfg.tol.quasi);
  std::ostringstream csv;
  csv << "N,phi_first_re,phi_first_im,psi_first_re,psi_first_im,abs_error_phi_first,abs_error_psi_first\n";
  for (int k = 0; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    csv << k << ',' << fmt(a.partial_sums[i].real()) << ',' << fmt(a.partial_sums[i].imag()) << ','
        << fmt(b.partial_sums[i].real()) << ',' << fmt(b.partial_sums[i].imag()) << ','
        << fmt(std::abs(a.partial_sums[i] - a.target)) << ','
        << fmt(std::abs(b.partial_sums[i] - b.target)) << '\n';
  }
  out.csv = csv.str();
  const double agree = std::abs(a.partial_sums.back() - b.partial_sums.back());
  out.report["quasi"] = {{"target", cjson(a.target)},
                         {"n_max", n},
                         {"f_in_domain", a.f_in_domain},
                         {"g_in_domain", a.g_in_domain},
                         {"domain_weight", DomainSpec::from_params(params).weight_exponent},
                         {"phi_first_error", a.final_error},
                         {"psi_first_error", b.final_error},
                         {"orderings_difference", agree},
                         {"tolerance", cfg.tol.quasi},
                         {"converged", a.converged && b.converged},
                         {"source", "exact_algebra"}};
  if (!(a.f_in_domain && a.g_in_domain)) out.report["quasi"]["note"] = "f or g outside D: no convergence claim";
  if (!(a.converged && b.converged)) out.exit_code = exit_code::check_failed;
}

void run_sweep(const RunConfig& cfg, RunOutput& out) {
  std::vector<ParamsSource> points;
  if (cfg.sweep.kind == SweepConfig::Kind::Swanson) {
    for (int i = 0; i < cfg.sweep.theta.count; ++i) {
      ParamsSource s;
      s.kind = ParamsSource::Kind::Swanson;
      s.theta = cfg.sweep.theta.at(i);
      points.push_back(s);
    }
  } else {
    for (int i = 0; i < cfg.sweep.beta.count; ++i)
      for (int k = 0; k < cfg.sweep.delta.count; ++k) {
        ParamsSource s;
        s.kind = ParamsSource::Kind::Constrained;
        s.beta = cfg.sweep.beta.at(i);
        s.delta = cfg.sweep.delta.at(k);
        points.push_back(s);
      }
  }

  auto job = [conv = cfg.convention](ParamsSource src) -> json {
    json row;
    if (src.kind == ParamsSource::Kind::Swanson)
      row["theta"] = src.theta;
    else
      row["beta"] = src.beta, row["delta"] = src.delta;
    try {
      row["classification"] = classify_json(src.resolve(), conv);
    } catch (const Error& e) {
      row["error"] = e.what();
    }
    return row;
  };
  std::vector<std::future<json>> futures;
  for (const auto& p : points) futures.push_back(std::async(std::launch::async, job, p));
  json rows = json::array();
  std::ostringstream csv;
  csv << "index,theta,beta,delta,scenario,verdict\n";
  int idx = 0;
  bool any_error = false;
  for (auto& f : futures) {
    auto row = f.get();
    const bool err = row.contains("error");
    any_error = any_error || err;
    csv << idx << ',' << (row.contains("theta") ? fmt(row["theta"].get<double>()) : "") << ','
        << (row.contains("beta") ? fmt(row["beta"].get<double>()) : "") << ','
        << (row.contains("delta") ? fmt(row["delta"].get<double>()) : "") << ','
        << (err ? "" : row["classification"]["scenario"].get<std::string>()) << ','
        << (err ? "ERROR" : row["classification"]["verdict"]["kind"].get<std::string>()) << '\n';
    rows.push_back(std::move(row));
    ++idx;
  }
  out.csv = csv.str();
  out.report["sweep"] = rows;
  if (any_error) out.exit_code = exit_code::numerical;
}

}  // namespace

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Classify: return "classify";
    case Mode::Spectrum: return "spectrum";
    case Mode::Verify: return "verify";
    case Mode::Quasi: return "quasi";
    case Mode::Sweep: return "sweep";
  }
  return "?";
}

Mode mode_from_string(const std::string& s) {
  if (s == "classify") return Mode::Classify;
  if (s == "spectrum") return Mode::Spectrum;
  if (s == "verify") return Mode::Verify;
  if (s == "quasi") return Mode::Quasi;
  if (s == "sweep") return Mode::Sweep;
  throw ConfigurationError("field 'mode': unknown mode '" + s + "'");
}

GbtParams ParamsSource::resolve() const {
  switch (kind) {
    case Kind::Explicit: return explicit_params;
    case Kind::Swanson: return swanson(SwansonParams(theta));
    case Kind::Constrained: return constrained_family(beta, delta);
  }
  return explicit_params;
}

void RunConfig::check() const {
  if (n_max < 0 || n_max > kMaxFamilyIndex)
    throw ConfigurationError("field 'n_max': must lie in [0, " + std::to_string(kMaxFamilyIndex) + "]");
  if (format != "json" && format != "csv")
    throw ConfigurationError("field 'format': expected json or csv");
  if (quasi.n_max < 0 || quasi.n_max > kMaxFamilyIndex)
    throw ConfigurationError("field 'quasi.n_max': out of range");
  if (mode == Mode::Sweep && sweep.kind == SweepConfig::Kind::None)
    throw ConfigurationError("field 'sweep': sweep mode needs a theta or beta/delta grid");
  if (convention == ConventionKind::Symmetric && mode != Mode::Sweep) {
    // surfaces the real-PQ requirement as a configuration problem
    NormalizationConvention::make(source.resolve(), convention);
  }
}

namespace {

RunConfig parse_config(const json& input) {
  const json& j = input.contains("inputs") ? input["inputs"] : input;
  if (!j.is_object()) throw ConfigurationError("config: expected a JSON object");
  RunConfig cfg;
  if (j.contains("mode")) cfg.mode = mode_from_string(j["mode"].get<std::string>());
  if (j.contains("params")) {
    const auto& p = j["params"];
    int sources = 0;
    if (p.contains("swanson")) {
      ++sources;
      cfg.source.kind = ParamsSource::Kind::Swanson;
      cfg.source.theta = p["swanson"].at("theta").get<double>();
    }
    if (p.contains("constrained")) {
      ++sources;
      cfg.source.kind = ParamsSource::Kind::Constrained;
      cfg.source.beta = p["constrained"].at("beta").get<double>();
      cfg.source.delta = p["constrained"].at("delta").get<double>();
    }
    if (p.contains("alpha") || p.contains("beta") || p.contains("gamma") || p.contains("delta")) {
      ++sources;
      for (const char* k : {"alpha", "beta", "gamma", "delta"})
        if (!p.contains(k)) throw ConfigurationError(std::string("field 'params.") + k + "': missing");
      cfg.source.kind = ParamsSource::Kind::Explicit;
      cfg.source.explicit_params = {complex_from(p["alpha"], "params.alpha"),
                                    complex_from(p["beta"], "params.beta"),
                                    complex_from(p["gamma"], "params.gamma"),
                                    complex_from(p["delta"], "params.delta")};
    }
    if (sources != 1)
      throw ConfigurationError("field 'params': give exactly one of explicit, swanson, constrained");
  }
  if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("convention")) {
    const auto c = j["convention"].get<std::string>();
    if (c == "default")
      cfg.convention = ConventionKind::Default;
    else if (c == "symmetric")
      cfg.convention = ConventionKind::Symmetric;
    else
      throw ConfigurationError("field 'convention': expected default or symmetric");
  }
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (t.contains("algebra")) cfg.tol.algebra = t["algebra"].get<double>();
    if (t.contains("gram_complex")) cfg.tol.gram_complex = t["gram_complex"].get<double>();
    if (t.contains("norm_rel")) cfg.tol.norm_rel = t["norm_rel"].get<double>();
    if (t.contains("norm_log")) cfg.tol.norm_log = t["norm_log"].get<double>();
    if (t.contains("quasi")) cfg.tol.quasi = t["quasi"].get<double>();
  }
  if (j.contains("quasi")) {
    const auto& q = j["quasi"];
    if (q.contains("f")) cfg.quasi.f = gauss_from(q["f"], "quasi.f");
    if (q.contains("g")) cfg.quasi.g = gauss_from(q["g"], "quasi.g");
    if (q.contains("n_max")) cfg.quasi.n_max = q["n_max"].get<int>();
  }
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    if (s.contains("theta")) {
      cfg.sweep.kind = SweepConfig::Kind::Swanson;
      cfg.sweep.theta = grid_from(s["theta"], "sweep.theta");
    } else if (s.contains("beta") && s.contains("delta")) {
      cfg.sweep.kind = SweepConfig::Kind::Constrained;
      cfg.sweep.beta = grid_from(s["beta"], "sweep.beta");
      cfg.sweep.delta = grid_from(s["delta"], "sweep.delta");
    } else if (!s.is_null()) {
      throw ConfigurationError("field 'sweep': expected theta or beta+delta grids");
    }
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    if (o.contains("path")) cfg.out_path = o["path"].get<std::string>();
    if (o.contains("format")) cfg.format = o["format"].get<std::string>();
  }
  cfg.check();
  return cfg;
}

}  // namespace

RunConfig config_from_json(const json& input) {
  try {
    return parse_config(input);
  } catch (const json::exception& e) {
    throw ConfigurationError(std::string("config: ") + e.what());
  }
}

json to_json(const RunConfig& cfg) {
  json j;
  j["mode"] = to_string(cfg.mode);
  switch (cfg.source.kind) {
    case ParamsSource::Kind::Explicit: j["params"] = params_json(cfg.source.explicit_params); break;
    case ParamsSource::Kind::Swanson: j["params"] = {{"swanson", {{"theta", cfg.source.theta}}}}; break;
    case ParamsSource::Kind::Constrained:
      j["params"] = {{"constrained", {{"beta", cfg.source.beta}, {"delta", cfg.source.delta}}}};
      break;
  }
  j["n_max"] = cfg.n_max;
  j["seed"] = cfg.seed;
  j["convention"] = to_string(cfg.convention);
  j["tolerances"] = {{"algebra", cfg.tol.algebra},
                     {"gram_complex", cfg.tol.gram_complex},
                     {"norm_rel", cfg.tol.norm_rel},
                     {"norm_log", cfg.tol.norm_log},
                     {"quasi", cfg.tol.quasi}};
  j["quasi"] = {{"f", gauss_json(cfg.quasi.f)}, {"g", gauss_json(cfg.quasi.g)}, {"n_max", cfg.quasi.n_max}};
  switch (cfg.sweep.kind) {
    case SweepConfig::Kind::None: j["sweep"] = nullptr; break;
    case SweepConfig::Kind::Swanson: j["sweep"] = {{"theta", grid_json(cfg.sweep.theta)}}; break;
    case SweepConfig::Kind::Constrained:
      j["sweep"] = {{"beta", grid_json(cfg.sweep.beta)}, {"delta", grid_json(cfg.sweep.delta)}};
      break;
  }
  j["output"] = {{"path", cfg.out_path}, {"format", cfg.format}};
  return j;
}

json classify_json(const GbtParams& params, ConventionKind convention, bool with_oracle_evidence) {
  json c;
  c["params"] = params_json(params);
  const auto val = validate(params);
  c["determinant"] = cjson(val.determinant);
  c["b_is_a_dagger"] = val.b_is_a_dagger;
  const auto norm = normalizability(params);
  c["scenario"] = to_string(norm.scenario);
  c["normalizability"] = {{"phi0_in_H", norm.phi0_in_H},
                          {"psi0_in_H", norm.psi0_in_H},
                          {"re_phi_exponent", norm.re_phi_exponent},
                          {"re_psi_exponent", norm.re_psi_exponent},
                          {"source", "closed_form"}};
  json failing = json::array();
  if (!norm.phi0_in_H) failing.push_back("Re((beta-delta)/(beta+delta)) > 0");
  if (!norm.psi0_in_H) failing.push_back("Re((gamma-alpha)/(gamma+alpha)) > 0");
  c["failing_constraints"] = failing;
  c["anomaly"] = cjson(anomaly(params));
  std::optional<AsymptoticsReport> asym;
  if (norm.scenario == Scenario::D && is_real_ordered(params)) {
    asym = asymptotics(params, NormalizationConvention::make(params, convention));
    c["asymptotics"] = asymptotics_json(*asym);
  } else {
    c["asymptotics"] = nullptr;
  }
  auto v = verdict(params, norm, asym);
  if (v.kind == VerdictKind::UndeterminedClosedForm && with_oracle_evidence) {
    v.oracle_evidence = oracle_growth_evidence(params);
    if (v.oracle_evidence->phi_strictly_increasing && v.oracle_evidence->psi_strictly_increasing)
      v.rationale_codes.push_back("ORACLE_BOTH_NORMS_INCREASING");
  }
  c["verdict"] = {{"kind", to_string(v.kind)}, {"rationale", v.rationale_codes}};
  if (v.oracle_evidence)
    c["verdict"]["oracle_evidence"] = {{"n_from", v.oracle_evidence->n_from},
                                       {"n_to", v.oracle_evidence->n_to},
                                       {"phi_strictly_increasing", v.oracle_evidence->phi_strictly_increasing},
                                       {"psi_strictly_increasing", v.oracle_evidence->psi_strictly_increasing},
                                       {"source", "oracle"}};
  return c;
}

std::string spectrum_csv(const GbtParams& params, ConventionKind convention, int n_max) {
  const auto conv = NormalizationConvention::make(params, convention);
  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  auto emit = [&](const NormSeries& phi, const NormSeries& psi) {
    for (int n = 0; n <= n_max; ++n)
      csv << n << ',' << fmt(phi.log_at(n)) << ',' << fmt(psi.log_at(n)) << ','
          << fmt(phi.log_at(n) + psi.log_at(n)) << ',' << to_string(phi.source) << '\n';
  };
  if (is_real_ordered(params) && normalizability(params).scenario == Scenario::D) {
    const auto [phi, psi] = closed_form_norm_series(params, conv, n_max);
    emit(phi, psi);
  }
  const auto oracle = quad_norm_series(params, conv, n_max);
  emit(oracle.phi, oracle.psi);
  return csv.str();
}

RunOutput run(const RunConfig& cfg) {
  cfg.check();
  RunOutput out;
  out.report = base_report(cfg);
  try {
    switch (cfg.mode) {
      case Mode::Classify: run_classify(cfg, out); break;
      case Mode::Spectrum: run_spectrum(cfg, out); break;
      case Mode::Verify: run_verify(cfg, out); break;
      case Mode::Quasi: run_quasi(cfg, out); break;
      case Mode::Sweep: run_sweep(cfg, out); break;
    }
  } catch (const ConfigurationError&) {
    throw;
  } catch (const Error& e) {
    out.report["error"] = {{"category", "numerical"}, {"message", e.what()}};
    out.exit_code = exit_code::numerical;
  }
  return out;
}

}  // namespace pbgbt
