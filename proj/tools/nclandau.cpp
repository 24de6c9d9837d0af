// nclandau: Landau levels on noncommutative space and phase space.
//
//   nclandau spectrum     --preset natural --mode space --theta 1 --max-N 2
//   nclandau verify       --config run.json
//   nclandau sweep        --config sweep.json --output sweep.csv
//   nclandau wavefunction --preset natural --n-rho 1 --m 0 --samples 2000
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nclandau/commands.hpp"
#include "nclandau/errors.hpp"
#include "nclandau/run_config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::optional<std::string> config_path;
  std::optional<std::string> preset;
  nclandau::ConfigOverrides overrides;
};

void add_common_options(CLI::App& app, Options& o) {
  app.add_option("--config", o.config_path, "JSON run configuration");
  app.add_option("--preset", o.preset, "Default physics preset")->check(CLI::IsMember({"natural"}));

  auto& v = o.overrides;
  app.add_option("--q", v.q, "Charge");
  app.add_option("--mu", v.mu, "Mass");
  app.add_option("--B", v.B, "Magnetic field");
  app.add_option("--c", v.c, "Speed of light");
  app.add_option("--hbar", v.hbar, "Reduced Planck constant");
  app.add_option("--mode", v.mode, "commutative | space | phase");
  app.add_option("--theta", v.theta, "Position noncommutativity");
  app.add_option("--alpha", v.alpha, "Phase-space scaling constant in (0, 1]");
  app.add_option("--theta-bar-override", v.theta_bar_override,
                 "verify only: replace the derived theta_bar");
  app.add_option("--sweep-parameter", v.sweep_parameter, "theta | alpha | B");
  app.add_option("--sweep-start", v.sweep_start);
  app.add_option("--sweep-stop", v.sweep_stop);
  app.add_option("--sweep-steps", v.sweep_steps);
  app.add_option("--max-N", v.max_N, "Largest 2 n_rho + |m|");
  app.add_option("--m-lo", v.m_lo);
  app.add_option("--m-hi", v.m_hi);
  app.add_option("--k", v.k, "Wavenumber along the field");
  app.add_option("--oracle", v.oracle_enabled, "Run the finite-difference oracle in verify");
  app.add_option("--n-points", v.n_points, "Oracle grid size");
  app.add_option("--rho-max-factor", v.rho_max_factor, "Oracle extent in units of 1/zeta");
  app.add_option("--format", v.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", v.output_path, "Output file (default: stdout)");
  app.add_option("--n-rho", v.n_rho);
  app.add_option("--m", v.m);
  app.add_option("--samples", v.samples);
  app.add_option("--rho-max", v.rho_max);
}

template <typename Emit>
void emit(const nclandau::RunConfig& config, Emit&& body) {
  if (config.output.path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream out(config.output.path, std::ios::binary);
  if (!out) throw nclandau::ConfigError("output.path", "cannot open '" + config.output.path + "'");
  body(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau levels on noncommutative space and phase space"};
  app.require_subcommand(1);
  app.fallthrough();
  Options options;
  add_common_options(app, options);

  auto* spectrum = app.add_subcommand("spectrum", "Tabulate Landau levels");
  auto* verify = app.add_subcommand("verify", "Run algebra, coefficient and oracle checks");
  auto* sweep = app.add_subcommand("sweep", "Effective parameters along a parameter sweep");
  auto* wavefunction = app.add_subcommand("wavefunction", "Sample a normalized radial wavefunction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const bool preset = options.preset.has_value();
    const nclandau::RunConfig config =
        nclandau::load_run_config(options.config_path, preset, options.overrides);

    if (verify->parsed()) {
      const auto report = nclandau::cmd_verify(config);
      emit(config, [&](std::ostream& out) { nclandau::write_verify_report(report, out); });
      if (!config.output.path.empty()) nclandau::write_verify_report(report, std::cout);
      return report.pass ? kExitOk : kExitVerifyFailed;
    }

    nclandau::Table table;
    if (spectrum->parsed()) {
      table = nclandau::cmd_spectrum(config);
    } else if (sweep->parsed()) {
      table = nclandau::cmd_sweep(config);
    } else if (wavefunction->parsed()) {
      table = nclandau::cmd_wavefunction(config, config.wavefunction.n_rho, config.wavefunction.m,
                                         config.wavefunction.samples);
    }
    emit(config, [&](std::ostream& out) { nclandau::write_table(table, config.output.format, out); });
    return kExitOk;
  } catch (const nclandau::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nclandau::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nclandau::DegenerateRegimeError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
