#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "nclandau/commands.hpp"
#include "nclandau/errors.hpp"

using namespace nclandau;
namespace fs = std::filesystem;

namespace {

RunConfig preset(const ConfigOverrides& o = {}) { return build_run_config(std::nullopt, true, o); }

double num(const Cell& c) { return std::get<double>(c); }

std::string render(const Table& t, OutputFormat f = OutputFormat::csv) {
  std::ostringstream out;
  write_table(t, f, out);
  return out.str();
}

// Parses the numeric body of a CSV written by write_csv: skips '#' lines and the header.
std::vector<std::vector<double>> read_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("format_double") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(NAN) == "nan");
  CHECK(format_double(-INFINITY) == "-inf");
}

TEST_CASE("write_csv and write_json") {
  Table t{"demo", {"a", "b", "c"}, {{std::int64_t{1}, 0.5, std::string("x,y")}, {std::int64_t{-2}, NAN, std::string("ok")}},
          {{"zeta_sq", 2.0}}};
  const std::string csv = render(t);
  CHECK(csv == "# nclandau demo v1: a,b,c\n# zeta_sq=2\na,b,c\n1,0.5,x;y\n-2,nan,ok\n");
  const auto parsed = nlohmann::json::parse(render(t, OutputFormat::json));
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0]["a"] == 1);
  CHECK(parsed[0]["c"] == "x,y");
  CHECK(parsed[1]["b"].is_null());
  CHECK(render(Table{"empty", {"a"}, {}, {}}, OutputFormat::json) == "[]\n");
}

TEST_CASE("cmd_spectrum") {
  SUBCASE("commutative preset, max_N = 2") {
    const auto t = cmd_spectrum(preset());
    CHECK(t.columns == std::vector<std::string>{"n_rho", "m", "k", "E_xy", "E_lz", "E_par", "E_total",
                                                "delta_E_vs_commutative"});
    REQUIRE(t.rows.size() == 6);
    CHECK(num(t.rows[0][6]) == 1.0);
    for (const auto& row : t.rows) CHECK(num(row[7]) == 0.0);
  }
  SUBCASE("NC space theta = 1: ground shift 0.5") {
    ConfigOverrides o;
    o.theta = 1.0;
    const auto t = cmd_spectrum(preset(o));
    CHECK(std::get<std::int64_t>(t.rows[0][0]) == 0);
    CHECK(std::get<std::int64_t>(t.rows[0][1]) == 0);
    CHECK(num(t.rows[0][7]) == 0.5);
  }
  SUBCASE("override is rejected") {
    ConfigOverrides o;
    o.theta = 1.0;
    o.alpha = 0.8;
    o.theta_bar_override = 1.0;
    CHECK_THROWS_AS(cmd_spectrum(preset(o)), ConfigError);
  }
}

TEST_CASE("cmd_sweep") {
  SUBCASE("theta 0 -> 1 in NC space: delta_E_ground rises monotonically to 0.5") {
    ConfigOverrides o;
    o.mode = "space";
    o.sweep_parameter = "theta";
    o.sweep_start = 0.0;
    o.sweep_stop = 1.0;
    o.sweep_steps = 11;
    const auto t = cmd_sweep(preset(o));
    REQUIRE(t.rows.size() == 11);
    CHECK(num(t.rows.front()[8]) == 0.0);
    CHECK(num(t.rows.back()[8]) == 0.5);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      CHECK(num(t.rows[i][8]) > num(t.rows[i - 1][8]));
      // omega_eff = 1 + theta/2 at the preset.
      CHECK(num(t.rows[i][6]) == doctest::Approx(1.0 + num(t.rows[i][1]) / 2.0).epsilon(1e-14));
    }
  }
  SUBCASE("alpha 1 -> 0.8 in phase mode: theta_bar 0 -> 0.9216") {
    ConfigOverrides o;
    o.mode = "phase";
    o.theta = 1.0;
    o.sweep_parameter = "alpha";
    o.sweep_start = 1.0;
    o.sweep_stop = 0.8;
    o.sweep_steps = 5;
    const auto t = cmd_sweep(preset(o));
    CHECK(num(t.rows.front()[4]) == 0.0);
    CHECK(num(t.rows.back()[4]) == doctest::Approx(0.9216).epsilon(1e-14));
    for (const auto& row : t.rows) CHECK(std::get<std::string>(row[9]) == "ok");
  }
  SUBCASE("theta crossing 0 in phase mode yields row-level errors") {
    ConfigOverrides o;
    o.mode = "phase";
    o.theta = 1.0;
    o.alpha = 0.8;
    o.sweep_parameter = "theta";
    o.sweep_start = -1.0;
    o.sweep_stop = 1.0;
    o.sweep_steps = 5;
    const auto t = cmd_sweep(preset(o));
    REQUIRE(t.rows.size() == 5);
    CHECK(std::get<std::string>(t.rows[2][9]).rfind("error:", 0) == 0);
    CHECK(std::isnan(num(t.rows[2][7])));
    CHECK(std::get<std::string>(t.rows[4][9]) == "ok");
  }
  SUBCASE("single-point sweep is rejected") {
    ConfigOverrides o;
    o.mode = "space";
    o.sweep_parameter = "theta";
    o.sweep_start = 0.0;
    o.sweep_stop = 1.0;
    o.sweep_steps = 1;
    CHECK_THROWS_AS(preset(o), ConfigError);
  }
  SUBCASE("thread count does not change the output") {
    ConfigOverrides o;
    o.mode = "space";
    o.sweep_parameter = "theta";
    o.sweep_start = 0.0;
    o.sweep_stop = 3.0;
    o.sweep_steps = 64;
    const auto cfg = preset(o);
    ::setenv("NCLANDAU_THREADS", "1", 1);
    CHECK(sweep_thread_count() == 1);
    const std::string serial = render(cmd_sweep(cfg));
    ::setenv("NCLANDAU_THREADS", "8", 1);
    CHECK(sweep_thread_count() == 8);
    const std::string parallel = render(cmd_sweep(cfg));
    ::unsetenv("NCLANDAU_THREADS");
    CHECK(serial == parallel);
  }
}

TEST_CASE("cmd_wavefunction") {
  auto column = [](const Table& t) {
    std::vector<double> r;
    for (const auto& row : t.rows) r.push_back(num(row[1]));
    return r;
  };
  SUBCASE("ground state is strictly positive") {
    const auto t = cmd_wavefunction(preset(), 0, 0, 200);
    for (const double v : column(t)) CHECK(v > 0.0);
  }
  SUBCASE("n_rho = 1 has one sign change") {
    const auto r = column(cmd_wavefunction(preset(), 1, 0, 400));
    int changes = 0;
    for (std::size_t i = 1; i < r.size(); ++i) changes += (r[i] > 0) != (r[i - 1] > 0) && r[i] != 0.0;
    CHECK(changes == 1);
  }
  SUBCASE("CSV round trip integrates to one") {
    ConfigOverrides o;
    o.theta = 1.0;
    o.alpha = 0.8;
    const auto rows = read_csv(render(cmd_wavefunction(preset(o), 2, 1, 2000)));
    REQUIRE(rows.size() == 2000);
    double integral = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double f0 = rows[i - 1][1] * rows[i - 1][1] * rows[i - 1][0];
      const double f1 = rows[i][1] * rows[i][1] * rows[i][0];
      integral += 0.5 * (f0 + f1) * (rows[i][0] - rows[i - 1][0]);
    }
    CHECK(std::abs(integral - 1.0) <= 1e-3);
  }
  SUBCASE("metadata and validation") {
    const auto t = cmd_wavefunction(preset(), 0, 0, 10);
    CHECK(t.metadata.at(2).first == "zeta_sq");
    CHECK(t.metadata.at(3).second == doctest::Approx(std::sqrt(2.0)));
    CHECK(num(t.rows.front()[0]) == 0.0);
    CHECK(num(t.rows.back()[0]) == 12.0);
    CHECK_THROWS_AS(cmd_wavefunction(preset(), -1, 0, 10), ConfigError);
    CHECK_THROWS_AS(cmd_wavefunction(preset(), 0, 0, 1), ConfigError);
  }
}

TEST_CASE("cmd_verify") {
  SUBCASE("preset passes all checks") {
    const auto r = cmd_verify(preset());
    CHECK(r.pass);
    CHECK(r.checks.size() == 5);
  }
  SUBCASE("NC phase space passes") {
    ConfigOverrides o;
    o.theta = 1.0;
    o.alpha = 0.8;
    CHECK(cmd_verify(preset(o)).pass);
  }
  SUBCASE("corrupted theta_bar fails the algebra check") {
    ConfigOverrides o;
    o.theta = 1.0;
    o.alpha = 0.8;
    o.theta_bar_override = 1.0;
    const auto r = cmd_verify(preset(o));
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.checks[0].pass);
    CHECK(r.checks[0].name == "algebra");
  }
  SUBCASE("coarse oracle grid fails with a tolerance diagnostic") {
    ConfigOverrides o;
    o.n_points = 16;
    const auto r = cmd_verify(preset(o));
    CHECK_FALSE(r.pass);
    std::ostringstream out;
    write_verify_report(r, out);
    CHECK(out.str().find("FAIL oracle_m0") != std::string::npos);
    CHECK(out.str().find("tolerance=") != std::string::npos);
  }
}

#ifdef NCLANDAU_CLI_PATH
namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / ("nclandau_cli_" + std::to_string(::getpid()) + ".log");
  const std::string cmd = std::string(NCLANDAU_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(log)};
  fs::remove(log);
  return r;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("nclandau_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("CLI exit codes and determinism") {
  const fs::path dir = scratch_dir();
  SUBCASE("missing B is a configuration error naming B") {
    const fs::path cfg = dir / "missing_b.json";
    std::ofstream(cfg) << R"({"physics": {"q": 1, "mu": 1, "c": 1, "hbar": 1}})";
    const auto r = run_cli("spectrum --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("B") != std::string::npos);
  }
  SUBCASE("verify exit codes") {
    CHECK(run_cli("verify --preset natural").exit_code == 0);
    CHECK(run_cli("verify --preset natural --theta 1 --alpha 0.8 --theta-bar-override 1.0").exit_code == 1);
    CHECK(run_cli("spectrum --preset natural --theta 1 --alpha 0.8 --theta-bar-override 1.0").exit_code == 2);
    CHECK(run_cli("wavefunction --preset natural --n-rho -1").exit_code == 2);
    CHECK(run_cli("spectrum --no-such-flag").exit_code == 2);
  }
  SUBCASE("identical configs give byte-identical files") {
    const fs::path cfg = dir / "sweep.json";
    std::ofstream(cfg) << R"({"physics": {"q": 1, "mu": 1, "B": 2, "c": 1, "hbar": 1},
                            "nc": {"mode": "phase", "theta": 1.0, "alpha": 0.9},
                            "sweep": {"parameter": "alpha", "start": 1.0, "stop": 0.6, "steps": 9},
                            "quantum": {"max_N": 5}})";
    for (const char* cmd : {"spectrum", "sweep"}) {
      const fs::path a = dir / (std::string(cmd) + "_a.csv");
      const fs::path b = dir / (std::string(cmd) + "_b.csv");
      REQUIRE(run_cli(std::string(cmd) + " --config " + cfg.string() + " -o " + a.string()).exit_code == 0);
      REQUIRE(run_cli(std::string(cmd) + " --config " + cfg.string() + " -o " + b.string()).exit_code == 0);
      const std::string first = slurp(a);
      CHECK_FALSE(first.empty());
      CHECK(first == slurp(b));
      CHECK(first.rfind("# nclandau ", 0) == 0);
      CHECK(first.find('\r') == std::string::npos);
    }
  }
  fs::remove_all(dir);
}
#endif
