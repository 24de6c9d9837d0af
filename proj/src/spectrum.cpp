#include "nclandau/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

#include "nclandau/errors.hpp"

namespace nclandau {

int QuantumNumbers::principal() const { return 2 * n_rho + std::abs(m); }

double level_quantum(const EffectiveOscillator& eff, const LandauConfig& cfg) {
  const double u = cfg.hbar * eff.omega_eff;
  int exponent = 0;
  const double fraction = std::frexp(u, &exponent);
  return std::ldexp(std::nearbyint(std::ldexp(fraction, kQuantumBits)), exponent - kQuantumBits);
}

SpectrumEntry energy(const QuantumNumbers& qn, const EffectiveOscillator& eff,
                     const LandauConfig& cfg) {
  if (qn.n_rho < 0) throw ConfigError("n_rho", "must be non-negative");
  const double quantum = level_quantum(eff, cfg);
  SpectrumEntry e{};
  e.qn = qn;
  e.e_xy = static_cast<double>(qn.principal() + 1) * quantum;
  e.e_lz = static_cast<double>(-qn.m) * quantum;
  e.e_par = cfg.hbar * cfg.hbar * qn.k * qn.k / (2.0 * cfg.mu);
  e.e_total = e.e_xy + e.e_lz + e.e_par;
  return e;
}

std::vector<SpectrumEntry> enumerate_levels(const EffectiveOscillator& eff,
                                            const LandauConfig& cfg, int max_N, MRange m_range,
                                            double k) {
  if (max_N < 0) throw ConfigError("max_N", "must be non-negative");
  std::vector<SpectrumEntry> out;
  if (m_range.lo > m_range.hi) return out;
  const int m_lo = std::max(m_range.lo, -max_N);
  const int m_hi = std::min(m_range.hi, max_N);
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = 0; 2 * n + std::abs(m) <= max_N; ++n) {
      out.push_back(energy({n, m, k}, eff, cfg));
    }
  }
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return std::tie(a.e_total, a.qn.n_rho, a.qn.m) < std::tie(b.e_total, b.qn.n_rho, b.qn.m);
  });
  return out;
}

double landau_correction(const LandauConfig& cfg, const NCParams& params,
                         const QuantumNumbers& qn) {
  const auto deformed = energy(qn, effective_oscillator(cfg, params), cfg);
  const auto usual = energy(qn, effective_oscillator(cfg, NCParams::commutative(cfg.hbar)), cfg);
  return deformed.e_total - usual.e_total;
}

}  // namespace nclandau
