#pragma once

#include <cstddef>
#include <vector>

#include "nclandau/landau_model.hpp"

namespace nclandau {

/// Cell-centred radial grid: n_points cells of width h = rho_max / n_points,
/// nodes at rho_i = (i + 1/2) h, i = 0 .. n_points-1. The wavefunction is
/// pinned to zero at rho_max and no flux crosses rho = 0.
struct RadialGrid {
  static constexpr int kMinPoints = 16;
  static constexpr double kMinExtent = 8.0;  // rho_max >= kMinExtent / zeta

  double rho_max;
  int n_points;

  double spacing() const { return rho_max / n_points; }
  double node(int i) const { return (i + 0.5) * spacing(); }

  /// Throws ConfigError if n_points < 16 or rho_max < 8 / sqrt(zeta_sq).
  void validate(double zeta_sq) const;

  /// n_points = 4000, rho_max = 12 / sqrt(zeta_sq).
  static RadialGrid defaults(const EffectiveOscillator& eff);
};

struct TridiagonalSystem {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size() == diagonal.size() - 1

  std::size_t dimension() const { return diagonal.size(); }
};

/// Discretizes the radial equation of channel m,
///   -(hbar^2/2mu_eff)(R'' + R'/rho - m^2 R/rho^2) + mu_eff omega_eff^2 rho^2 R / 2 = E R,
/// in the flux form (rho R')' with the symmetrizing substitution u_i = sqrt(rho_i) R_i:
///   diag_i = hbar^2/(mu h^2) + hbar^2 m^2/(2 mu rho_i^2) + mu w^2 rho_i^2 / 2,
///   off_i  = -hbar^2/(2 mu h^2) * rho_{i+1/2} / sqrt(rho_i rho_{i+1}).
TridiagonalSystem discretize(const EffectiveOscillator& eff, int m, const RadialGrid& grid,
                             const LandauConfig& cfg);

/// Number of eigenvalues strictly below `lambda` (Sturm sequence count).
std::size_t sturm_count(const TridiagonalSystem& sys, double lambda);

/// The `count` smallest eigenvalues in ascending order, by bisection on the
/// Sturm count down to machine resolution. Throws ConfigError for count
/// outside [1, dimension] or inconsistent vector sizes.
std::vector<double> lowest_eigenvalues(const TridiagonalSystem& sys, std::size_t count);

struct OracleEntry {
  int n_rho;
  double oracle;
  double closed_form;  // (2 n_rho + |m| + 1) hbar omega_eff
  double rel_error;
};

struct OracleReport {
  static constexpr double kTolerance = 1e-4;

  int m;
  RadialGrid grid;
  std::vector<OracleEntry> entries;
  double max_rel_error = 0.0;
  bool pass = false;
};

/// Finite-difference eigenvalues for n_rho = 0..n_max against the closed form.
OracleReport compare(const EffectiveOscillator& eff, int m, const RadialGrid& grid,
                     const LandauConfig& cfg, int n_max);

}  // namespace nclandau
