#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "pbgbt/quasibasis.hpp"

namespace pbgbt {

inline constexpr const char* kVersion = PBGBT_VERSION;
inline constexpr const char* kCsvHeader = "n,log_norm_phi_sq,log_norm_psi_sq,log_product,source";
inline constexpr const char* kOutputDirEnv = "PBGBT_OUTPUT_DIR";

enum class Mode { Classify, Spectrum, Verify, Quasi, Sweep };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

/// Exactly one way of naming the transformation.
struct ParamsSource {
  enum class Kind { Explicit, Swanson, Constrained };
  Kind kind = Kind::Explicit;
  GbtParams explicit_params = standard_bosons();
  double theta = 0.0;
  double beta = 0.0;
  double delta = 0.0;

  GbtParams resolve() const;
};

struct Tolerances {
  double algebra = 1e-10;       ///< coefficient residuals, Gram matrix (real params)
  double gram_complex = 1e-9;   ///< Gram matrix for complex params
  double norm_rel = 1e-8;       ///< closed form vs quadrature, n <= 20
  double norm_log = 1e-6;       ///< closed form vs quadrature in log scale, n <= 60
  double quasi = 1e-6;          ///< |S_N - <f,g>|
};

struct QuasiConfig {
  GaussPolyd f{{Complex{1.0, 0.0}}, Complex{1.0, 0.0}};
  GaussPolyd g{{Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}}, Complex{1.0, 0.0}};
  int n_max = 60;
};

/// Linear grid: count points from start to stop inclusive.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  double at(int i) const { return count <= 1 ? start : start + (stop - start) * i / (count - 1); }
};

struct SweepConfig {
  enum class Kind { None, Swanson, Constrained };
  Kind kind = Kind::None;
  Grid theta;
  Grid beta;
  Grid delta;
};

struct RunConfig {
  Mode mode = Mode::Classify;
  ParamsSource source;
  int n_max = 60;
  std::uint64_t seed = 7;
  ConventionKind convention = ConventionKind::Default;
  Tolerances tol;
  QuasiConfig quasi;
  SweepConfig sweep;
  std::string out_path;
  std::string format = "json";  ///< json | csv

  /// Throws ConfigurationError with a field diagnostic.
  void check() const;
};

/// Accepts either a bare config or a report (its "inputs" member).
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& cfg);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int check_failed = 3;
inline constexpr int numerical = 4;
}  // namespace exit_code

struct RunOutput {
  nlohmann::json report;
  std::string csv;  ///< spectrum / quasi / sweep tables
  int exit_code = exit_code::ok;
};

/// Runs one job. Numerical failures are recorded in the report and the exit
/// code; only configuration problems throw.
RunOutput run(const RunConfig& cfg);

/// The classification block shared by classify and sweep.
nlohmann::json classify_json(const GbtParams& params, ConventionKind convention,
                             bool with_oracle_evidence = true);

std::string spectrum_csv(const GbtParams& params, ConventionKind convention, int n_max);

}  // namespace pbgbt
