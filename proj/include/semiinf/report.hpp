#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiinf/problems.hpp"

namespace semiinf {

enum class ReferenceId { T1, T2, T3, T4, T5, T6, T7, AhmadSlope, KobayashiSlope };

/// Published reference values, one row per abscissa (or lambda for slope tables).
///
/// `slopes` holds the trailing f'(0) row where the table has one.
struct ReferenceTable {
  ReferenceId id;
  std::string caption;
  std::vector<std::string> columns;
  std::vector<std::pair<double, std::vector<double>>> rows;
  std::map<std::string, double> slopes;

  int column_index(const std::string& name) const;
  double value(double abscissa, const std::string& column) const;
};

const ReferenceTable& reference_table(ReferenceId id);
std::string to_string(ReferenceId id);

enum class ProblemKind { Fluid, ThomasFermi, Cone };
enum class MethodKind { Mglf, Hermite, Sinc };

std::string to_string(ProblemKind p);
std::string to_string(MethodKind m);

/// Everything needed to run and (optionally) verify one case.
///
/// Method- and problem-specific parameters are optional so that a missing key is
/// detectable; to_spec() checks completeness for the chosen pairing.
struct RunConfig {
  std::string preset;
  std::optional<ProblemKind> problem;
  std::optional<MethodKind> method;
  std::optional<int> n;
  std::optional<double> alpha;
  std::optional<double> scale_L;
  std::optional<double> map_k;
  std::optional<double> mesh_h;
  std::optional<double> seed_lambda;
  std::optional<double> seed_beta;
  std::optional<double> b1;
  std::optional<double> b2;
  std::optional<double> b3;
  std::optional<double> cone_lambda;
  std::vector<double> abscissas;
  std::string out;
  std::optional<double> tol;
  bool verify = false;

  ProblemSpec to_spec() const;
  /// Missing required keys for the configured pairing, in canonical order.
  std::vector<std::string> missing_keys() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Ordered (key, value) overrides, as collected from command-line flags.
using FlagList = std::vector<std::pair<std::string, std::string>>;

/// Builds a RunConfig from key=value text and flag overrides.
///
/// Precedence: preset < text < flags. `#` starts a comment. Aliases k, h, L map to
/// map-k, mesh-h, scale-L. Throws UsageError naming the offending token.
RunConfig parse_config(const std::string& text, const FlagList& flags = {});

/// key=value text that parse_config turns back into an equal RunConfig.
std::string canonical_text(const RunConfig& cfg);

/// Names accepted by parse_config's `preset` key.
std::vector<std::string> preset_names();
/// Group names ("table3", ...) expand to several presets.
std::vector<std::string> expand_preset_group(const std::string& name);
RunConfig preset_config(const std::string& name);

struct SolutionRow {
  double abscissa;
  double f;
  double fprime;
  double residual;
};

struct SolutionTable {
  std::vector<SolutionRow> rows;
  double slope = 0.0;
  double max_nodal_residual = 0.0;
  int iterations = 0;
};

/// Solves the configured case and tabulates f, f', and the governing residual.
SolutionTable run_case(const RunConfig& cfg);

std::string format_csv(const SolutionTable& table);
/// Writes format_csv(table) to `path`. Throws IoError or ConfigurationError (empty table).
void emit_csv(const SolutionTable& table, const std::string& path);

struct RowError {
  double abscissa;
  std::string column;
  double value;
  double reference;
  double error;
};

struct VerifyReport {
  std::string reference_caption;
  std::string column;
  double tolerance = 0.0;
  double max_abs_error = 0.0;
  std::vector<RowError> row_errors;  ///< every compared row
  std::optional<RowError> slope_error;
  double slope_tolerance = 0.0;
  bool pass = false;

  std::vector<RowError> failures() const;
  std::string to_text() const;
};

/// Compares a table against the reference bound to cfg.preset.
///
/// Throws ConfigurationError when the config has no matching reference.
VerifyReport verify(const RunConfig& cfg, const SolutionTable& table);

/// Stable process exit codes.
enum ExitCode : int { kExitOk = 0, kExitVerifyFail = 1, kExitUsage = 2, kExitSolver = 3 };

}  // namespace semiinf
