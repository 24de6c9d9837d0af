// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nclandau/commands.hpp"
#include "nclandau/landau_model.hpp"
#include "nclandau/nc_maps.hpp"
#include "nclandau/radial_oracle.hpp"
#include "nclandau/spectrum.hpp"
#include "nclandau/wavefunctions.hpp"

using namespace nclandau;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) { return format_double(v); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

const LandauConfig kPreset = LandauConfig::natural();

BoppMap map_for(const NCParams& p) { return p.is_space_limit() ? bopp_space(p) : bopp_phase(p); }

// 1. verify_algebra over >= 100 random valid parameter sets, < 1 s.
Outcome algebra_suite() {
  const auto t0 = Clock::now();
  std::mt19937 rng(20240601);
  std::uniform_real_distribution<double> log_theta(-2.0, 1.0), alpha(0.5, 1.0), hbar(0.1, 3.0);
  double worst = 0.0;
  int failures = 0;
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    const double h = hbar(rng);
    const NCParams p = i % 4 == 0 ? NCParams::space(h, std::pow(10.0, log_theta(rng)))
                                  : NCParams::phase(h, std::pow(10.0, log_theta(rng)), alpha(rng));
    const auto report = verify_algebra(map_for(p), p);
    worst = std::max(worst, report.max_deviation);
    failures += !report.pass;
  }
  const double elapsed = seconds_since(t0);
  return {failures == 0 && worst <= 1e-12 && elapsed < 1.0,
          std::to_string(trials) + " parameter sets, max_deviation=" + fmt(worst) +
              ", runtime=" + fmt(elapsed) + "s"};
}

// 2. alpha^2 + theta theta_bar / (4 hbar^2 alpha^2) = 1 on theta in [0.01, 10], alpha in [0.5, 1].
Outcome constraint_identity() {
  double worst = 0.0;
  int points = 0;
  for (int i = 0; i <= 100; ++i) {
    const double theta = 0.01 * std::pow(1000.0, i / 100.0);
    for (int j = 0; j <= 100; ++j) {
      const double alpha = 0.5 + 0.5 * j / 100.0;
      const double tb = theta_bar_from(theta, alpha, 1.0);
      worst = std::max(worst, std::abs(alpha * alpha + theta * tb / (4.0 * alpha * alpha) - 1.0));
      ++points;
    }
  }
  return {worst <= 1e-12, std::to_string(points) + " points, max |residual|=" + fmt(worst)};
}

// 3. decompose(build_hamiltonian) vs the closed form on a 10x10 grid plus checkpoints.
Outcome coefficient_matching() {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double theta = 0.01 * std::pow(1000.0, i / 9.0);
    for (int j = 0; j < 10; ++j) {
      const double alpha = 0.5 + 0.5 * j / 9.0;
      const NCParams p = NCParams::phase(1.0, theta, alpha);
      const auto read = decompose(build_hamiltonian(kPreset, map_for(p)), kPreset);
      const auto closed = effective_oscillator(kPreset, p);
      for (const auto& [a, b] : {std::pair{read.mu_eff, closed.mu_eff},
                                 {read.omega_eff, closed.omega_eff},
                                 {read.zeta_sq, closed.zeta_sq},
                                 {read.a_coef, closed.a_coef},
                                 {read.b_coef, closed.b_coef}}) {
        worst = std::max(worst, rel(a, b));
      }
    }
  }
  const auto space = decompose(build_hamiltonian(kPreset, bopp_space(NCParams::space(1.0, 1.0))), kPreset);
  const auto phase =
      decompose(build_hamiltonian(kPreset, bopp_phase(NCParams::phase(1.0, 1.0, 0.8))), kPreset);
  const bool checkpoints = rel(space.mu_eff, 4.0 / 9.0) <= 1e-12 && rel(space.omega_eff, 1.5) <= 1e-12 &&
                           std::abs(phase.mu_eff - 0.49246) <= 5e-6 &&
                           std::abs(phase.omega_eff - 1.96080) <= 5e-6;
  return {worst <= 1e-12 && checkpoints,
          "100 grid points, max_rel_diff=" + fmt(worst) + "; space mu=" + fmt(space.mu_eff) +
              " omega=" + fmt(space.omega_eff) + "; phase mu=" + fmt(phase.mu_eff) +
              " omega=" + fmt(phase.omega_eff)};
}

// 4. Finite-difference oracle in three regimes at the default grid, < 30 s, plus
//    the grid-halving factor.
Outcome spectrum_oracle() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  bool all_pass = true;
  double fmin = INFINITY, fmax = -INFINITY;
  for (const auto& p : {NCParams::commutative(1.0), NCParams::space(1.0, 1.0),
                        NCParams::phase(1.0, 1.0, 0.8)}) {
    const auto eff = effective_oscillator(kPreset, p);
    const RadialGrid grid = RadialGrid::defaults(eff);
    const RadialGrid half{grid.rho_max, grid.n_points / 2};
    for (int m = 0; m <= 2; ++m) {
      const auto fine = compare(eff, m, grid, kPreset, 2);
      const auto coarse = compare(eff, m, half, kPreset, 2);
      all_pass = all_pass && fine.pass;
      worst = std::max(worst, fine.max_rel_error);
      for (int n = 0; n <= 2; ++n) {
        const double factor = (coarse.entries[n].oracle - coarse.entries[n].closed_form) /
                              (fine.entries[n].oracle - fine.entries[n].closed_form);
        fmin = std::min(fmin, factor);
        fmax = std::max(fmax, factor);
      }
    }
  }
  const double elapsed = seconds_since(t0);
  const bool ok = all_pass && worst <= 1e-4 && fmin >= 3.5 && fmax <= 4.5 && elapsed < 30.0;
  return {ok, "3 regimes x m=0..2 x n_rho<=2, max_rel_error=" + fmt(worst) + ", halving factor in [" +
                  fmt(fmin) + ", " + fmt(fmax) + "], runtime=" + fmt(elapsed) + "s"};
}

// 5. Reduction chain through the closed-form path.
Outcome reduction_chain() {
  int mismatches = 0;
  for (const double theta : {0.0, 0.1, 0.5, 1.0, 3.0}) {
    const auto via_phase = effective_oscillator(kPreset, NCParams::make(1.0, theta, 0.0, 1.0));
    const auto via_space = effective_oscillator(kPreset, NCParams::space(1.0, theta));
    mismatches += via_phase.mu_eff != via_space.mu_eff || via_phase.omega_eff != via_space.omega_eff ||
                  via_phase.zeta_sq != via_space.zeta_sq;
    for (const auto& e : enumerate_levels(via_phase, kPreset, 6, {-6, 6}, 0.7)) {
      mismatches += e.e_total != energy(e.qn, via_space, kPreset).e_total;
    }
  }
  // theta = theta_bar = 0 against the commutative Landau formula, exactly.
  for (const LandauConfig cfg : {kPreset, LandauConfig{1.0, 1.0, 4.0, 1.0, 1.0},
                                 LandauConfig{2.0, 0.5, 1.5, 1.0, 1.0}}) {
    const auto eff = effective_oscillator(cfg, NCParams::commutative(cfg.hbar));
    const double w = cfg.larmor_frequency();
    for (const auto& e : enumerate_levels(eff, cfg, 8, {-8, 8}, 1.5)) {
      const double expected = (e.qn.principal() + 1 - e.qn.m) * cfg.hbar * w +
                              cfg.hbar * cfg.hbar * e.qn.k * e.qn.k / (2.0 * cfg.mu);
      mismatches += e.e_total != expected;
    }
  }
  // Generic units: omega_L is not a short dyadic, so the reference uses the
  // same 44-bit level quantum; the unrounded formula must agree to rounding.
  double generic_rel = 0.0;
  const LandauConfig generic{0.7, 1.9, 2.3, 1.1, 0.6};
  const auto eff = effective_oscillator(generic, NCParams::commutative(generic.hbar));
  mismatches += eff.omega_eff != generic.larmor_frequency() || eff.mu_eff != generic.mu;
  const double quantum = level_quantum(eff, generic);
  for (const auto& e : enumerate_levels(eff, generic, 8, {-8, 8}, 1.5)) {
    const double e_par = generic.hbar * generic.hbar * e.qn.k * e.qn.k / (2.0 * generic.mu);
    mismatches += e.e_total != (e.qn.principal() + 1 - e.qn.m) * quantum + e_par;
    const double unrounded = (e.qn.principal() + 1 - e.qn.m) * generic.hbar * generic.larmor_frequency() + e_par;
    generic_rel = std::max(generic_rel, rel(e.e_total, unrounded));
  }
  return {mismatches == 0 && generic_rel <= 1e-13,
          "bit-for-bit mismatches=" + std::to_string(mismatches) +
              ", generic-units max rel diff to unrounded formula=" + fmt(generic_rel)};
}

// 6. Exact degeneracy over m in [0, 50].
Outcome degeneracy() {
  int mismatches = 0, cases = 0;
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> theta(0.01, 5.0), alpha(0.5, 1.0), k(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const NCParams p = trial % 2 ? NCParams::phase(1.0, theta(rng), alpha(rng))
                                 : NCParams::space(1.0, theta(rng));
    const auto eff = effective_oscillator(kPreset, p);
    const double kk = k(rng);
    for (int n = 0; n <= 5; ++n) {
      const double ref = energy({n, 0, kk}, eff, kPreset).e_total;
      for (int m = 1; m <= 50; ++m, ++cases) mismatches += energy({n, m, kk}, eff, kPreset).e_total != ref;
    }
  }
  return {mismatches == 0,
          std::to_string(cases) + " comparisons, mismatches=" + std::to_string(mismatches)};
}

// 7. Orthonormality, node counts, discretized-operator residual.
Outcome wavefunction_suite() {
  double ortho = 0.0, residual = 0.0;
  int node_errors = 0;
  for (const auto& p : {NCParams::commutative(1.0), NCParams::phase(1.0, 1.0, 0.8)}) {
    const auto eff = effective_oscillator(kPreset, p);
    const double mu = eff.mu_eff, w = eff.omega_eff;
    for (int m = 0; m <= 2; ++m) {
      std::vector<RadialWavefunction> states;
      for (int n = 0; n <= 4; ++n) states.push_back(normalize(n, m, eff.zeta_sq));
      for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
          ortho = std::max(ortho, std::abs(overlap(states[a], states[b]) - (a == b ? 1.0 : 0.0)));
        }
        int changes = 0;
        double last = 0.0;
        const double extent = 10.0 / std::sqrt(eff.zeta_sq);
        for (int i = 1; i <= 10000; ++i) {
          const double v = radial_eval(states[a], extent * i / 10000.0);
          if (v != 0.0 && last != 0.0 && (v > 0) != (last > 0)) ++changes;
          if (v != 0.0) last = v;
        }
        node_errors += changes != a;

        const double h = 1e-3, e_xy = (2 * a + m + 1) * w;
        double worst = 0.0, scale = 0.0;
        for (double rho = 0.2; rho <= 3.0 / std::sqrt(eff.zeta_sq); rho += 0.01) {
          const double r0 = radial_eval(states[a], rho);
          const double rp = radial_eval(states[a], rho + h);
          const double rm = radial_eval(states[a], rho - h);
          const double lap = (rp - 2 * r0 + rm) / (h * h) + (rp - rm) / (2 * h * rho) -
                             m * m * r0 / (rho * rho);
          const double lhs = -lap / (2 * mu) + 0.5 * mu * w * w * rho * rho * r0;
          worst = std::max(worst, std::abs(lhs - e_xy * r0));
          scale = std::max(scale, std::abs(e_xy * r0));
        }
        residual = std::max(residual, worst / scale);
      }
    }
  }
  return {ortho <= 1e-8 && node_errors == 0 && residual <= 1e-4,
          "max |<n|n'> - delta|=" + fmt(ortho) + ", node errors=" + std::to_string(node_errors) +
              ", max residual=" + fmt(residual)};
}

// 8. Byte-identical output across runs; verify exit semantics.
Outcome cli_determinism() {
  auto render = [](const Table& t) {
    std::ostringstream s;
    write_csv(t, s);
    return s.str();
  };
  ConfigOverrides o;
  o.mode = "phase";
  o.theta = 1.0;
  o.alpha = 0.9;
  o.max_N = 6;
  o.sweep_parameter = "alpha";
  o.sweep_start = 1.0;
  o.sweep_stop = 0.6;
  o.sweep_steps = 21;
  const std::string cfg_text = R"({"physics": {"q": 1, "mu": 1, "B": 2, "c": 1, "hbar": 1}})";
  const bool spectrum_same = render(cmd_spectrum(build_run_config(cfg_text, false, o))) ==
                             render(cmd_spectrum(build_run_config(cfg_text, false, o)));
  const bool sweep_same = render(cmd_sweep(build_run_config(cfg_text, false, o))) ==
                          render(cmd_sweep(build_run_config(cfg_text, false, o)));
  const bool preset_ok = cmd_verify(build_run_config(std::nullopt, true, {})).pass;
  ConfigOverrides corrupt;
  corrupt.theta = 1.0;
  corrupt.alpha = 0.8;
  corrupt.theta_bar_override = 1.0;
  const bool corrupt_fails = !cmd_verify(build_run_config(std::nullopt, true, corrupt)).pass;
  return {spectrum_same && sweep_same && preset_ok && corrupt_fails,
          std::string("spectrum identical=") + (spectrum_same ? "yes" : "no") +
              ", sweep identical=" + (sweep_same ? "yes" : "no") +
              ", verify preset=" + (preset_ok ? "exit 0" : "exit 1") +
              ", verify corrupted theta_bar=" + (corrupt_fails ? "exit 1" : "exit 0")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 algebra suite", algebra_suite},
      {"2 constraint identity", constraint_identity},
      {"3 coefficient matching", coefficient_matching},
      {"4 spectrum oracle", spectrum_oracle},
      {"5 reduction chain", reduction_chain},
      {"6 degeneracy", degeneracy},
      {"7 wavefunction suite", wavefunction_suite},
      {"8 cli determinism", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("%s criterion %s: %s\n", r.pass ? "PASS" : "FAIL", name, r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
