#pragma once

#include <vector>

#include "nclandau/landau_model.hpp"

namespace nclandau {

struct QuantumNumbers {
  int n_rho = 0;  // radial quantum number, >= 0
  int m = 0;      // angular momentum quantum number
  double k = 0.0; // wavenumber along the field

  /// 2 n_rho + |m|.
  int principal() const;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

struct SpectrumEntry {
  QuantumNumbers qn;
  double e_xy;
  double e_lz;
  double e_par;
  double e_total;  // e_xy + e_lz + e_par, evaluated in that order
};

/// hbar * omega_eff rounded to kQuantumBits significant bits. Integer
/// multiples j * quantum are then exact for |j| < 2^(53 - kQuantumBits), which
/// makes e_xy + e_lz exact and the m >= 0 degeneracy hold bit-for-bit.
inline constexpr int kQuantumBits = 44;
double level_quantum(const EffectiveOscillator& eff, const LandauConfig& cfg);

/// e_xy = (N+1) hbar w, e_lz = -m hbar w, e_par = hbar^2 k^2 / 2mu.
SpectrumEntry energy(const QuantumNumbers& qn, const EffectiveOscillator& eff,
                     const LandauConfig& cfg);

struct MRange {
  int lo;
  int hi;
};

/// All (n_rho, m) with 2 n_rho + |m| <= max_N and m in range, sorted by
/// e_total and then (n_rho, m). An empty m range yields an empty list.
std::vector<SpectrumEntry> enumerate_levels(const EffectiveOscillator& eff,
                                            const LandauConfig& cfg, int max_N, MRange m_range,
                                            double k);

/// Energy shift of `qn` relative to the commutative Landau problem.
double landau_correction(const LandauConfig& cfg, const NCParams& params,
                         const QuantumNumbers& qn);

}  // namespace nclandau
