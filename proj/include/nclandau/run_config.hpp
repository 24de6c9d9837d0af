#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nclandau/landau_model.hpp"
#include "nclandau/nc_params.hpp"
#include "nclandau/spectrum.hpp"

namespace nclandau {

enum class NCMode { commutative, space, phase };
enum class SweepParameter { theta, alpha, B };
enum class OutputFormat { csv, json };

std::string_view to_string(NCMode mode);
std::string_view to_string(SweepParameter parameter);

struct SweepSpec {
  SweepParameter parameter = SweepParameter::theta;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;

  /// Uniformly spaced values from start to stop inclusive.
  std::vector<double> values() const;
};

struct QuantumSpec {
  int max_N = 2;
  MRange m_range{-2, 2};
  double k = 0.0;
};

struct OracleSpec {
  bool enabled = true;
  int n_points = 4000;
  double rho_max_factor = 12.0;  // rho_max = factor / sqrt(zeta_sq)
};

struct OutputSpec {
  OutputFormat format = OutputFormat::csv;
  std::string path;  // empty: standard output
};

struct WavefunctionSpec {
  int n_rho = 0;
  int m = 0;
  int samples = 200;
  std::optional<double> rho_max;  // default 12 / sqrt(zeta_sq)
};

/// Everything a CLI run needs. Physics inherits LandauConfig invariants;
/// theta_bar is derived from (theta, alpha) in phase mode.
struct RunConfig {
  LandauConfig physics;
  NCMode mode = NCMode::commutative;
  double theta = 0.0;
  double alpha = 1.0;
  /// Diagnostic only: replaces the derived theta_bar. Honoured by `verify`,
  /// rejected by every other command.
  std::optional<double> theta_bar_override;
  std::optional<SweepSpec> sweep;
  QuantumSpec quantum;
  OracleSpec oracle;
  OutputSpec output;
  WavefunctionSpec wavefunction;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  /// Deformation parameters for the configured mode (ignores the override).
  NCParams nc_params() const;
  /// As nc_params(), with theta_bar replaced by the override when present.
  NCParams nc_params_for_verify() const;
};

/// Command-line values that take precedence over the config file.
struct ConfigOverrides {
  std::optional<double> q, mu, B, c, hbar;
  std::optional<std::string> mode;
  std::optional<double> theta, alpha, theta_bar_override;
  std::optional<std::string> sweep_parameter;
  std::optional<double> sweep_start, sweep_stop;
  std::optional<int> sweep_steps;
  std::optional<int> max_N, m_lo, m_hi;
  std::optional<double> k;
  std::optional<bool> oracle_enabled;
  std::optional<int> n_points;
  std::optional<double> rho_max_factor;
  std::optional<std::string> format, output_path;
  std::optional<int> n_rho, m, samples;
  std::optional<double> rho_max;
};

/// Precedence: overrides > JSON document > preset defaults. Preset defaults
/// (q = mu = c = hbar = 1, B = 2) fill missing physics fields when
/// `use_preset` is set or when no document is given; otherwise every physics
/// field must be present. Throws ConfigError on malformed or invalid input.
RunConfig build_run_config(const std::optional<std::string>& json_text, bool use_preset,
                           const ConfigOverrides& overrides);

/// Reads `path` and forwards to build_run_config.
RunConfig load_run_config(const std::optional<std::string>& path, bool use_preset,
                          const ConfigOverrides& overrides);

}  // namespace nclandau
