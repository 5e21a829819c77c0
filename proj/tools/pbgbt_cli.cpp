#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pbgbt/report.hpp"

namespace {

using pbgbt::Complex;

Complex parse_complex(const std::string& text, const std::string& flag) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw pbgbt::ConfigurationError(flag + ": expected re[,im], got '" + text + "'");
  if (is >> comma) {
    if (comma != ',' || !(is >> im))
      throw pbgbt::ConfigurationError(flag + ": expected re[,im], got '" + text + "'");
  }
  if (!is.eof() && is.peek() != EOF)
    throw pbgbt::ConfigurationError(flag + ": trailing characters in '" + text + "'");
  return {re, im};
}

std::pair<double, double> parse_pair(const std::string& text, const std::string& flag) {
  const auto z = parse_complex(text, flag);
  return {z.real(), z.imag()};
}

pbgbt::Grid parse_grid(const std::string& text, const std::string& flag) {
  std::istringstream is(text);
  pbgbt::Grid g;
  char c1 = 0, c2 = 0;
  if (!(is >> g.start >> c1 >> g.stop >> c2 >> g.count) || c1 != ',' || c2 != ',' || g.count < 1)
    throw pbgbt::ConfigurationError(flag + ": expected start,stop,count");
  return g;
}

struct Flags {
  std::string config;
  std::string alpha, beta, gamma, delta;
  std::optional<double> theta;
  std::string constrained;
  std::optional<int> n_max;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  std::string convention;
  std::string sweep_theta, sweep_beta, sweep_delta;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file (a previous report is accepted)");
  sub->add_option("--alpha", f.alpha, "alpha as re,im");
  sub->add_option("--beta", f.beta, "beta as re,im");
  sub->add_option("--gamma", f.gamma, "gamma as re,im");
  sub->add_option("--delta", f.delta, "delta as re,im");
  sub->add_option("--theta", f.theta, "Swanson angle");
  sub->add_option("--constrained", f.constrained, "constrained family beta,delta");
  sub->add_option("--n-max", f.n_max, "largest family index (<= 200)");
  sub->add_option("--seed", f.seed, "seed for randomized checks");
  sub->add_option("--out", f.out, "output file (default stdout)");
  sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--convention", f.convention, "default or symmetric")
      ->check(CLI::IsMember({"default", "symmetric"}));
}

pbgbt::RunConfig build_config(const std::string& mode, const Flags& f) {
  nlohmann::json j = nlohmann::json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw pbgbt::ConfigurationError("--config: cannot open '" + f.config + "'");
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw pbgbt::ConfigurationError("--config: " + std::string(e.what()));
    }
    if (j.contains("inputs")) j = j["inputs"];
  }
  j["mode"] = mode;

  const bool explicit_given = !f.alpha.empty() || !f.beta.empty() || !f.gamma.empty() || !f.delta.empty();
  const int sources = int(explicit_given) + int(f.theta.has_value()) + int(!f.constrained.empty());
  if (sources > 1)
    throw pbgbt::ConfigurationError("params: give exactly one of --alpha..--delta, --theta, --constrained");
  auto cj = [](Complex z) { return nlohmann::json::array({z.real(), z.imag()}); };
  if (explicit_given) {
    if (f.alpha.empty() || f.beta.empty() || f.gamma.empty() || f.delta.empty())
      throw pbgbt::ConfigurationError("params: --alpha, --beta, --gamma and --delta go together");
    j["params"] = {{"alpha", cj(parse_complex(f.alpha, "--alpha"))},
                   {"beta", cj(parse_complex(f.beta, "--beta"))},
                   {"gamma", cj(parse_complex(f.gamma, "--gamma"))},
                   {"delta", cj(parse_complex(f.delta, "--delta"))}};
  } else if (f.theta) {
    j["params"] = {{"swanson", {{"theta", *f.theta}}}};
  } else if (!f.constrained.empty()) {
    const auto [b, d] = parse_pair(f.constrained, "--constrained");
    j["params"] = {{"constrained", {{"beta", b}, {"delta", d}}}};
  }
  if (f.n_max) j["n_max"] = *f.n_max;
  if (f.seed) j["seed"] = *f.seed;
  if (!f.convention.empty()) j["convention"] = f.convention;
  if (!f.sweep_theta.empty()) {
    const auto g = parse_grid(f.sweep_theta, "--theta-grid");
    j["sweep"] = {{"theta", {g.start, g.stop, g.count}}};
  } else if (!f.sweep_beta.empty() || !f.sweep_delta.empty()) {
    if (f.sweep_beta.empty() || f.sweep_delta.empty())
      throw pbgbt::ConfigurationError("sweep: --beta-grid and --delta-grid go together");
    const auto b = parse_grid(f.sweep_beta, "--beta-grid");
    const auto d = parse_grid(f.sweep_delta, "--delta-grid");
    j["sweep"] = {{"beta", {b.start, b.stop, b.count}}, {"delta", {d.start, d.stop, d.count}}};
  }
  if (!j.contains("output")) j["output"] = nlohmann::json::object();
  if (!f.out.empty()) j["output"]["path"] = f.out;
  if (!f.format.empty()) j["output"]["format"] = f.format;
  return pbgbt::config_from_json(j);
}

std::string resolve_path(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(pbgbt::kOutputDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p.string();
}

int emit(const pbgbt::RunConfig& cfg, const pbgbt::RunOutput& out) {
  std::string body;
  if (cfg.format == "csv") {
    if (out.csv.empty()) {
      std::cerr << "error: mode " << pbgbt::to_string(cfg.mode) << " has no CSV output\n";
      return pbgbt::exit_code::usage;
    }
    body = out.csv;
  } else {
    body = out.report.dump(2) + "\n";
  }
  const auto path = resolve_path(cfg.out_path);
  if (path.empty()) {
    std::cout << body;
  } else {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream os(path);
    if (!os) {
      std::cerr << "error: cannot write '" << path << "'\n";
      return pbgbt::exit_code::usage;
    }
    os << body;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-bosons from generalized Bogoliubov transformations"};
  app.set_version_flag("--version", std::string(pbgbt::kVersion));
  app.require_subcommand(1);

  Flags flags;
  for (const char* name : {"classify", "spectrum", "verify", "quasi", "sweep"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, flags);
    if (std::string(name) == "sweep") {
      sub->add_option("--theta-grid", flags.sweep_theta, "Swanson grid start,stop,count");
      sub->add_option("--beta-grid", flags.sweep_beta, "constrained beta grid start,stop,count");
      sub->add_option("--delta-grid", flags.sweep_delta, "constrained delta grid start,stop,count");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : pbgbt::exit_code::usage;
  }

  const std::string mode = app.get_subcommands().front()->get_name();
  try {
    const auto cfg = build_config(mode, flags);
    const auto out = pbgbt::run(cfg);
    return emit(cfg, out);
  } catch (const pbgbt::ConfigurationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return pbgbt::exit_code::usage;
  } catch (const pbgbt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pbgbt::exit_code::numerical;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: config: " << e.what() << "\n";
    return pbgbt::exit_code::usage;
  }
}
