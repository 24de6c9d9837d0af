#pragma once

#include <functional>

#include "nclandau/spectrum.hpp"
#include "nclandau/weyl_algebra.hpp"

namespace nclandau {

/// Terminating confluent hypergeometric series
///   F(-n, b, x) = sum_{j=0}^{n} (-n)_j / (b)_j  x^j / j!.
/// Throws DomainError for b <= 0.
double kummer_poly(int n, double b, double x);

/// Composite Gauss-Legendre rule on [0, cutoff_factor / sqrt(zeta_sq)].
/// The panel count is doubled until successive estimates agree to
/// `tolerance` (relative), at most `max_doublings` times.
struct QuadratureSpec {
  int panels = 64;
  double cutoff_factor = 12.0;
  int max_doublings = 4;
  double tolerance = 1e-8;
};

struct RadialWavefunction {
  int n_rho;
  int m;
  double zeta_sq;
  double norm;
};

/// norm * rho^|m| F(-n_rho, |m|+1, zeta^2 rho^2) exp(-zeta^2 rho^2 / 2).
double radial_eval(const RadialWavefunction& wf, double rho);

/// Integral of f(rho) over [0, cutoff] under `quad`, with the doubling check.
/// Throws AccuracyError if the estimate never settles.
double radial_integral(const std::function<double(double)>& f, double zeta_sq,
                       const QuadratureSpec& quad);

/// Wavefunction scaled so that the integral of R^2 rho drho is 1.
/// Throws AccuracyError on quadrature non-convergence, ConfigError on
/// invalid quantum numbers or zeta_sq <= 0.
RadialWavefunction normalize(int n_rho, int m, double zeta_sq, const QuadratureSpec& quad = {});

/// Integral of R_a R_b rho drho. Both must share zeta_sq.
double overlap(const RadialWavefunction& a, const RadialWavefunction& b,
               const QuadratureSpec& quad = {});

struct CylindricalPoint {
  double rho;
  double phi;
  double z;
};

/// R(rho) e^{i m phi} e^{i k z}.
Complex full_wavefunction_eval(const QuantumNumbers& qn, const RadialWavefunction& wf,
                               const CylindricalPoint& point);

}  // namespace nclandau
