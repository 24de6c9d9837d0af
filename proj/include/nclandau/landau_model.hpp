#pragma once

#include <array>

#include "nclandau/nc_maps.hpp"
#include "nclandau/weyl_algebra.hpp"

namespace nclandau {

/// Physical inputs in one user-chosen consistent unit system.
struct LandauConfig {
  double q = 1.0;
  double mu = 1.0;
  double B = 2.0;
  double c = 1.0;
  double hbar = 1.0;

  /// q = mu = c = hbar = 1, B = 2, so that omega_L = 1.
  static LandauConfig natural() { return {}; }

  /// qB / (2 mu c), evaluated in the same order as the effective-oscillator
  /// path so that the commutative limit reproduces it exactly.
  double larmor_frequency() const { return 0.5 * (q * B / c) / mu; }

  /// Throws ConfigError naming the first invalid field. qB < 0 is rejected.
  void validate() const;

  friend bool operator==(const LandauConfig&, const LandauConfig&) = default;
};

/// The 2D oscillator the Bopp-shifted Landau Hamiltonian reduces to:
///   H = (a^2/2mu)(px^2+py^2) + (b^2/2mu)(x^2+y^2) - (ab/mu) l_z + pz^2/2mu.
struct EffectiveOscillator {
  double mu_eff;     // mu / a^2
  double omega_eff;  // a b / mu
  double zeta_sq;    // mu_eff omega_eff / hbar
  double a_coef;     // alpha + qB theta / (4 hbar alpha c)
  double b_coef;     // qB alpha / (2c) + theta_bar / (2 hbar alpha)
};

using Vec3 = std::array<double, 3>;

/// Symmetric gauge: A = (-B y/2, B x/2, 0).
Vec3 vector_potential(const LandauConfig& cfg, const Vec3& point);

/// (1/2mu)[(px^ + (qB/2c) y^)^2 + (py^ - (qB/2c) x^)^2 + pz^2], expanded and
/// normal-ordered.
OperatorPoly build_hamiltonian(const LandauConfig& cfg, const BoppMap& map);

/// Closed-form effective parameters. Throws DegenerateRegimeError when
/// a_coef <= 0 or b_coef <= 0, ConfigError on invalid inputs or when
/// cfg.hbar != params.hbar().
EffectiveOscillator effective_oscillator(const LandauConfig& cfg, const NCParams& params);

/// Reads the effective oscillator off an expanded Hamiltonian by coefficient
/// matching. Throws StructuralError unless h has exactly the symmetric-gauge
/// Landau form (equal px^2/py^2 and x^2/y^2 weights, opposite x py / y px
/// weights, pz^2 = 1/2mu, no other terms, all real) with the three readings of
/// omega_eff agreeing to 1e-12 relative.
EffectiveOscillator decompose(const OperatorPoly& h, const LandauConfig& cfg);

/// H_xy, H_lz = -omega_eff l_z and H_par = pz^2/2mu assembled from `eff`.
struct SectorHamiltonians {
  OperatorPoly h_xy;
  OperatorPoly h_lz;
  OperatorPoly h_par;
};

SectorHamiltonians split_sectors(const EffectiveOscillator& eff, const LandauConfig& cfg);

/// l_z = x py - y px.
OperatorPoly angular_momentum_z(double hbar);

}  // namespace nclandau
