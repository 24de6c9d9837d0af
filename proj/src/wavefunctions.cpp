#include "nclandau/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "nclandau/errors.hpp"

namespace nclandau {

double kummer_poly(int n, double b, double x) {
  if (n < 0) throw DomainError("kummer_poly: n must be non-negative");
  if (!(b > 0.0)) throw DomainError("kummer_poly: b must be positive");
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < n; ++j) {
    term *= static_cast<double>(j - n) / (b + j) * x / static_cast<double>(j + 1);
    sum += term;
  }
  return sum;
}

double radial_eval(const RadialWavefunction& wf, double rho) {
  const int am = std::abs(wf.m);
  const double t = wf.zeta_sq * rho * rho;
  return wf.norm * std::pow(rho, am) * kummer_poly(wf.n_rho, am + 1.0, t) * std::exp(-0.5 * t);
}

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

double composite(const std::function<double(double)>& f, double upper, int panels) {
  const double width = upper / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    total += Rule::integrate(f, i * width, (i + 1) * width);
  }
  return total;
}

}  // namespace

double radial_integral(const std::function<double(double)>& f, double zeta_sq,
                       const QuadratureSpec& quad) {
  if (!(zeta_sq > 0.0)) throw ConfigError("zeta_sq", "must be positive");
  if (quad.panels < 1) throw ConfigError("quad.panels", "must be at least 1");
  const double upper = quad.cutoff_factor / std::sqrt(zeta_sq);
  int panels = quad.panels;
  double previous = composite(f, upper, panels);
  // Convergence is judged against the integral of |f| so that overlaps of
  // orthogonal states, which integrate to ~0, are not held to a relative bound.
  const double magnitude =
      composite([&f](double rho) { return std::abs(f(rho)); }, upper, panels);
  for (int d = 0; d < std::max(1, quad.max_doublings); ++d) {
    panels *= 2;
    const double current = composite(f, upper, panels);
    if (std::abs(current - previous) <= quad.tolerance * std::max(magnitude, 1e-300)) {
      return current;
    }
    previous = current;
  }
  throw AccuracyError("radial quadrature did not converge to " + std::to_string(quad.tolerance) +
                      " after " + std::to_string(quad.max_doublings) + " node doublings");
}

RadialWavefunction normalize(int n_rho, int m, double zeta_sq, const QuadratureSpec& quad) {
  if (n_rho < 0) throw ConfigError("n_rho", "must be non-negative");
  if (!(zeta_sq > 0.0)) throw ConfigError("zeta_sq", "must be positive");
  RadialWavefunction wf{n_rho, m, zeta_sq, 1.0};
  const double integral = radial_integral(
      [&wf](double rho) {
        const double r = radial_eval(wf, rho);
        return r * r * rho;
      },
      zeta_sq, quad);
  wf.norm = 1.0 / std::sqrt(integral);
  return wf;
}

double overlap(const RadialWavefunction& a, const RadialWavefunction& b,
               const QuadratureSpec& quad) {
  if (a.zeta_sq != b.zeta_sq) throw ConfigError("zeta_sq", "overlap needs a common zeta_sq");
  return radial_integral(
      [&](double rho) { return radial_eval(a, rho) * radial_eval(b, rho) * rho; }, a.zeta_sq,
      quad);
}

Complex full_wavefunction_eval(const QuantumNumbers& qn, const RadialWavefunction& wf,
                               const CylindricalPoint& point) {
  const double phase = qn.m * point.phi + qn.k * point.z;
  return radial_eval(wf, point.rho) * std::polar(1.0, phase);
}

}  // namespace nclandau
