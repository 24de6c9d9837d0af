#include "nclandau/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "nclandau/errors.hpp"
#include "nclandau/landau_model.hpp"
#include "nclandau/nc_maps.hpp"
#include "nclandau/radial_oracle.hpp"
#include "nclandau/spectrum.hpp"
#include "nclandau/wavefunctions.hpp"

namespace nclandau {

// ---- formatting -------------------------------------------------------------

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string csv_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  std::string s = std::get<std::string>(cell);
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  return out + "\"";
}

std::string json_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) {
    return std::isfinite(*d) ? format_double(*d) : "null";
  }
  return json_string(std::get<std::string>(cell));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  out << "# nclandau " << table.schema << " v1: " << join(table.columns, ",") << '\n';
  for (const auto& [key, value] : table.metadata) {
    out << "# " << key << '=' << format_double(value) << '\n';
  }
  out << join(table.columns, ",") << '\n';
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& cell : row) cells.push_back(csv_cell(cell));
    out << join(cells, ",") << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  out << "[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n  {" : "\n  {");
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out << ", ";
      out << json_string(table.columns[c]) << ": " << json_cell(table.rows[r][c]);
    }
    out << "}";
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    write_json(table, out);
  } else {
    write_csv(table, out);
  }
}

// ---- commands ---------------------------------------------------------------

namespace {

void reject_override(const RunConfig& config, const char* command) {
  if (config.theta_bar_override) {
    throw ConfigError("nc.theta_bar_override",
                      std::string("theta_bar is derived in '") + command +
                          "'; the override is only accepted by 'verify'");
  }
}

BoppMap map_for(const NCParams& params) {
  return params.is_space_limit() ? bopp_space(params) : bopp_phase(params);
}

}  // namespace

Table cmd_spectrum(const RunConfig& config) {
  reject_override(config, "spectrum");
  config.validate();
  const NCParams params = config.nc_params();
  const auto eff = effective_oscillator(config.physics, params);
  const auto eff0 = effective_oscillator(config.physics, NCParams::commutative(config.physics.hbar));

  Table table;
  table.schema = "spectrum";
  table.columns = {"n_rho", "m", "k", "E_xy", "E_lz", "E_par", "E_total", "delta_E_vs_commutative"};
  for (const auto& e : enumerate_levels(eff, config.physics, config.quantum.max_N,
                                        config.quantum.m_range, config.quantum.k)) {
    const double delta = e.e_total - energy(e.qn, eff0, config.physics).e_total;
    table.rows.push_back({std::int64_t{e.qn.n_rho}, std::int64_t{e.qn.m}, e.qn.k, e.e_xy, e.e_lz,
                          e.e_par, e.e_total, delta});
  }
  return table;
}

unsigned sweep_thread_count() {
  if (const char* env = std::getenv("NCLANDAU_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Table cmd_sweep(const RunConfig& config) {
  reject_override(config, "sweep");
  config.validate();
  if (!config.sweep) throw ConfigError("sweep", "missing sweep block");
  const SweepSpec& sweep = *config.sweep;
  const std::vector<double> values = sweep.values();

  Table table;
  table.schema = "sweep";
  table.columns = {"parameter",  "parameter_value", "theta",    "alpha",
                   "theta_bar",  "mu_eff",          "omega_eff", "E_ground",
                   "delta_E_ground", "status"};
  table.rows.resize(values.size());

  auto evaluate = [&](std::size_t i) {
    RunConfig point = config;
    switch (sweep.parameter) {
      case SweepParameter::theta: point.theta = values[i]; break;
      case SweepParameter::alpha: point.alpha = values[i]; break;
      case SweepParameter::B: point.physics.B = values[i]; break;
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<Cell> row = {std::string(to_string(sweep.parameter)), values[i], point.theta,
                             point.alpha, nan, nan, nan, nan, nan, std::string("ok")};
    try {
      point.validate();
      const NCParams params = point.nc_params();
      row[4] = params.theta_bar();
      const auto eff = effective_oscillator(point.physics, params);
      const QuantumNumbers ground{0, 0, config.quantum.k};
      row[5] = eff.mu_eff;
      row[6] = eff.omega_eff;
      row[7] = energy(ground, eff, point.physics).e_total;
      row[8] = landau_correction(point.physics, params, ground);
    } catch (const std::exception& e) {
      row[9] = std::string("error: ") + e.what();
    }
    table.rows[i] = std::move(row);
  };

  const unsigned threads =
      std::min<unsigned>(sweep_thread_count(), static_cast<unsigned>(values.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < values.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < values.size(); i = next++) evaluate(i);
      });
    }
  }
  return table;
}

Table cmd_wavefunction(const RunConfig& config, int n_rho, int m, int samples) {
  reject_override(config, "wavefunction");
  config.validate();
  if (n_rho < 0) throw ConfigError("wavefunction.n_rho", "must be non-negative");
  if (samples < 2) throw ConfigError("wavefunction.samples", "must be at least 2");
  const auto eff = effective_oscillator(config.physics, config.nc_params());
  const RadialWavefunction wf = normalize(n_rho, m, eff.zeta_sq);
  const double rho_max =
      config.wavefunction.rho_max.value_or(12.0 / std::sqrt(eff.zeta_sq));

  Table table;
  table.schema = "wavefunction";
  table.columns = {"rho", "R_normalized"};
  table.metadata = {{"n_rho", n_rho}, {"m", m}, {"zeta_sq", eff.zeta_sq}, {"norm", wf.norm}};
  for (int i = 0; i < samples; ++i) {
    const double rho = i + 1 == samples ? rho_max : rho_max * i / (samples - 1);
    table.rows.push_back({rho, radial_eval(wf, rho)});
  }
  return table;
}

VerifyReport cmd_verify(const RunConfig& config) {
  config.validate();
  const NCParams params = config.nc_params_for_verify();
  const LandauConfig& cfg = config.physics;
  VerifyReport report;

  auto run = [&report](const std::string& name, auto&& check) {
    try {
      auto [pass, detail] = check();
      report.checks.push_back({name, pass, std::move(detail)});
    } catch (const std::exception& e) {
      report.checks.push_back({name, false, e.what()});
    }
  };

  const BoppMap map = map_for(params);

  run("algebra", [&] {
    const AlgebraReport algebra = verify_algebra(map, params);
    std::ostringstream detail;
    detail << "max_deviation=" << format_double(algebra.max_deviation)
           << " tolerance=" << format_double(AlgebraReport::kTolerance);
    for (const auto& c : algebra.checks) {
      if (c.deviation > AlgebraReport::kTolerance) {
        detail << " failing " << c.label << " deviation=" << format_double(c.deviation);
      }
    }
    return std::pair{algebra.pass, detail.str()};
  });

  std::optional<EffectiveOscillator> closed;
  run("coefficient_matching", [&] {
    closed = effective_oscillator(cfg, params);
    const EffectiveOscillator read = decompose(build_hamiltonian(cfg, map), cfg);
    const double fields[][2] = {{read.mu_eff, closed->mu_eff},
                                {read.omega_eff, closed->omega_eff},
                                {read.zeta_sq, closed->zeta_sq},
                                {read.a_coef, closed->a_coef},
                                {read.b_coef, closed->b_coef}};
    double worst = 0.0;
    for (const auto& f : fields) worst = std::max(worst, std::abs(f[0] - f[1]) / std::abs(f[1]));
    std::ostringstream detail;
    detail << "max_rel_diff=" << format_double(worst) << " tolerance=1e-12"
           << " mu_eff=" << format_double(closed->mu_eff)
           << " omega_eff=" << format_double(closed->omega_eff);
    return std::pair{worst <= 1e-12, detail.str()};
  });

  for (int m = 0; m <= 2; ++m) {
    const std::string name = "oracle_m" + std::to_string(m);
    if (!config.oracle.enabled) {
      report.checks.push_back({name, true, "skipped (oracle disabled)"});
      continue;
    }
    run(name, [&] {
      if (!closed) throw StructuralError("no closed-form oscillator available");
      const RadialGrid grid{config.oracle.rho_max_factor / std::sqrt(closed->zeta_sq),
                            config.oracle.n_points};
      const OracleReport r = compare(*closed, m, grid, cfg, 2);
      std::ostringstream detail;
      detail << "max_rel_error=" << format_double(r.max_rel_error)
             << " tolerance=" << format_double(OracleReport::kTolerance)
             << " n_points=" << grid.n_points;
      for (const auto& e : r.entries) {
        detail << " n" << e.n_rho << ":" << format_double(e.oracle) << "/"
               << format_double(e.closed_form);
      }
      return std::pair{r.pass, detail.str()};
    });
  }

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const VerifyCheck& c) { return c.pass; });
  return report;
}

void write_verify_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " " << c.detail << '\n';
  }
  out << (report.pass ? "verify: all checks passed" : "verify: FAILED") << '\n';
}

}  // namespace nclandau
