#include "nclandau/radial_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "nclandau/errors.hpp"

namespace nclandau {

void RadialGrid::validate(double zeta_sq) const {
  if (n_points < kMinPoints) {
    throw ConfigError("n_points", "must be at least " + std::to_string(kMinPoints));
  }
  if (!(zeta_sq > 0.0)) throw ConfigError("zeta_sq", "must be positive");
  const double required = kMinExtent / std::sqrt(zeta_sq);
  if (!(rho_max >= required)) {
    throw ConfigError("rho_max", "must be at least 8/sqrt(zeta_sq) = " + std::to_string(required));
  }
}

RadialGrid RadialGrid::defaults(const EffectiveOscillator& eff) {
  return {12.0 / std::sqrt(eff.zeta_sq), 4000};
}

TridiagonalSystem discretize(const EffectiveOscillator& eff, int m, const RadialGrid& grid,
                             const LandauConfig& cfg) {
  grid.validate(eff.zeta_sq);
  const int n = grid.n_points;
  const double h = grid.spacing();
  const double kinetic = cfg.hbar * cfg.hbar / (2.0 * eff.mu_eff);
  const double stiffness = 0.5 * eff.mu_eff * eff.omega_eff * eff.omega_eff;
  const double m2 = static_cast<double>(m) * m;

  TridiagonalSystem sys;
  sys.diagonal.resize(n);
  sys.off_diagonal.resize(n - 1);
  for (int i = 0; i < n; ++i) {
    const double rho = grid.node(i);
    sys.diagonal[i] = 2.0 * kinetic / (h * h) + kinetic * m2 / (rho * rho) + stiffness * rho * rho;
  }
  for (int i = 0; i + 1 < n; ++i) {
    const double face = (i + 1) * h;
    sys.off_diagonal[i] =
        -kinetic / (h * h) * face / std::sqrt(grid.node(i) * grid.node(i + 1));
  }
  return sys;
}

std::size_t sturm_count(const TridiagonalSystem& sys, double lambda) {
  const std::size_t n = sys.dimension();
  constexpr double tiny = std::numeric_limits<double>::min();
  std::size_t negatives = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double coupling = i == 0 ? 0.0 : sys.off_diagonal[i - 1];
    pivot = sys.diagonal[i] - lambda - (i == 0 ? 0.0 : coupling * coupling / pivot);
    if (pivot == 0.0) pivot = -tiny;
    if (pivot < 0.0) ++negatives;
  }
  return negatives;
}

std::vector<double> lowest_eigenvalues(const TridiagonalSystem& sys, std::size_t count) {
  const std::size_t n = sys.dimension();
  if (n == 0 || sys.off_diagonal.size() + 1 != n) {
    throw ConfigError("system", "diagonal/off-diagonal sizes are inconsistent");
  }
  if (count < 1 || count > n) throw ConfigError("count", "must lie in [1, dimension]");

  // Gershgorin bounds enclose the whole spectrum.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? 0.0 : std::abs(sys.off_diagonal[i - 1]);
    const double right = i + 1 == n ? 0.0 : std::abs(sys.off_diagonal[i]);
    lo = std::min(lo, sys.diagonal[i] - left - right);
    hi = std::max(hi, sys.diagonal[i] + left + right);
  }
  const double pad = 1e-12 * std::max({std::abs(lo), std::abs(hi), 1.0});
  lo -= pad;
  hi += pad;

  std::vector<double> values(count);
  for (std::size_t k = 0; k < count; ++k) {
    // Smallest lambda with more than k eigenvalues below it.
    double a = lo;
    double b = hi;
    while (true) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(sys, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
    }
    values[k] = b;
  }
  return values;
}

OracleReport compare(const EffectiveOscillator& eff, int m, const RadialGrid& grid,
                     const LandauConfig& cfg, int n_max) {
  if (n_max < 0) throw ConfigError("n_max", "must be non-negative");
  const TridiagonalSystem sys = discretize(eff, m, grid, cfg);
  const auto eigenvalues = lowest_eigenvalues(sys, static_cast<std::size_t>(n_max) + 1);

  OracleReport report{m, grid, {}, 0.0, false};
  for (int n = 0; n <= n_max; ++n) {
    const double closed = (2.0 * n + std::abs(m) + 1.0) * cfg.hbar * eff.omega_eff;
    const double oracle = eigenvalues[n];
    const double rel = std::abs(oracle - closed) / std::abs(closed);
    report.entries.push_back({n, oracle, closed, rel});
    report.max_rel_error = std::max(report.max_rel_error, rel);
  }
  report.pass = report.max_rel_error <= OracleReport::kTolerance;
  return report;
}

}  // namespace nclandau
