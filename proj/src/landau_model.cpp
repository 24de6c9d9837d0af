#include "nclandau/landau_model.hpp"

#include <cmath>
#include <string>

#include "nclandau/errors.hpp"

namespace nclandau {

namespace {

constexpr double kReadingTolerance = 1e-12;

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(field, "must be positive and finite");
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

Monomial mono(Symbol a, Symbol b) { return Monomial::of(a) * Monomial::of(b); }

}  // namespace

void LandauConfig::validate() const {
  if (!std::isfinite(q)) throw ConfigError("q", "must be finite");
  require_positive(mu, "mu");
  if (!std::isfinite(B)) throw ConfigError("B", "must be finite");
  require_positive(c, "c");
  require_positive(hbar, "hbar");
  if (q * B < 0.0) throw ConfigError("B", "qB must be non-negative (q*B < 0 is not supported)");
}

Vec3 vector_potential(const LandauConfig& cfg, const Vec3& point) {
  return {-0.5 * cfg.B * point[1], 0.5 * cfg.B * point[0], 0.0};
}

OperatorPoly build_hamiltonian(const LandauConfig& cfg, const BoppMap& map) {
  cfg.validate();
  if (cfg.hbar != map.hbar()) throw ConfigError("hbar", "config and Bopp map disagree on hbar");
  const double coupling = cfg.q * cfg.B / (2.0 * cfg.c);
  const OperatorPoly pi_x = map.image(Symbol::px) + coupling * map.image(Symbol::y);
  const OperatorPoly pi_y = map.image(Symbol::py) - coupling * map.image(Symbol::x);
  const OperatorPoly& pi_z = map.image(Symbol::pz);
  OperatorPoly h = multiply(pi_x, pi_x) + multiply(pi_y, pi_y) + multiply(pi_z, pi_z);
  return h * (1.0 / (2.0 * cfg.mu));
}

EffectiveOscillator effective_oscillator(const LandauConfig& cfg, const NCParams& params) {
  cfg.validate();
  params.validate();
  if (cfg.hbar != params.hbar()) throw ConfigError("hbar", "config and NC parameters disagree");

  const double alpha = params.alpha();
  const double qb_c = cfg.q * cfg.B / cfg.c;
  const double a = alpha + qb_c * params.theta() / (4.0 * cfg.hbar * alpha);
  const double b = 0.5 * qb_c * alpha + params.theta_bar() / (2.0 * cfg.hbar * alpha);
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DegenerateRegimeError("effective oscillator has a_coef = " + std::to_string(a) +
                                ", b_coef = " + std::to_string(b) +
                                "; both must be positive for a bound Landau spectrum");
  }

  EffectiveOscillator eff{};
  eff.a_coef = a;
  eff.b_coef = b;
  eff.mu_eff = cfg.mu / (a * a);
  eff.omega_eff = a * b / cfg.mu;
  eff.zeta_sq = eff.mu_eff * eff.omega_eff / cfg.hbar;

  // The quotient form (qB alpha/c + theta_bar/(hbar alpha)) / (2 mu_eff a)
  // must coincide with ab/mu.
  const double quotient_form = 2.0 * b / (2.0 * eff.mu_eff * a);
  if (!close_rel(quotient_form, eff.omega_eff, kReadingTolerance)) {
    throw StructuralError("omega_eff quotient form disagrees with ab/mu");
  }
  return eff;
}

EffectiveOscillator decompose(const OperatorPoly& h, const LandauConfig& cfg) {
  cfg.validate();
  const Monomial px2 = Monomial::of(Symbol::px, 2);
  const Monomial py2 = Monomial::of(Symbol::py, 2);
  const Monomial pz2 = Monomial::of(Symbol::pz, 2);
  const Monomial x2 = Monomial::of(Symbol::x, 2);
  const Monomial y2 = Monomial::of(Symbol::y, 2);
  const Monomial xpy = mono(Symbol::x, Symbol::py);
  const Monomial ypx = mono(Symbol::y, Symbol::px);

  for (const auto& [m, c] : h.terms()) {
    if (c.imag() != 0.0) {
      throw StructuralError("coefficient of " + m.to_string() + " is not real");
    }
    if (m != px2 && m != py2 && m != pz2 && m != x2 && m != y2 && m != xpy && m != ypx) {
      throw StructuralError("unexpected term " + m.to_string() +
                            " in symmetric-gauge Landau Hamiltonian");
    }
  }

  const double k_px2 = h.coefficient(px2).real();
  const double k_py2 = h.coefficient(py2).real();
  const double k_pz2 = h.coefficient(pz2).real();
  const double k_x2 = h.coefficient(x2).real();
  const double k_y2 = h.coefficient(y2).real();
  const double k_xpy = h.coefficient(xpy).real();
  const double k_ypx = h.coefficient(ypx).real();

  if (!close_rel(k_px2, k_py2, kReadingTolerance)) throw StructuralError("px^2 and py^2 weights differ");
  if (!close_rel(k_x2, k_y2, kReadingTolerance)) throw StructuralError("x^2 and y^2 weights differ");
  if (!close_rel(k_pz2, 1.0 / (2.0 * cfg.mu), kReadingTolerance)) {
    throw StructuralError("pz^2 weight differs from 1/(2 mu)");
  }
  if (!(k_px2 > 0.0) || !(k_x2 > 0.0)) {
    throw StructuralError("kinetic and confining weights must both be positive");
  }

  const double mu_eff = 1.0 / (2.0 * k_px2);
  const double omega_from_xpy = -k_xpy;
  const double omega_from_ypx = k_ypx;
  const double omega_from_potential = std::sqrt(2.0 * k_x2 / mu_eff);
  if (!close_rel(omega_from_xpy, omega_from_ypx, kReadingTolerance) ||
      !close_rel(omega_from_xpy, omega_from_potential, kReadingTolerance)) {
    throw StructuralError("inconsistent omega_eff readings: x py -> " +
                          std::to_string(omega_from_xpy) + ", y px -> " +
                          std::to_string(omega_from_ypx) + ", x^2 -> " +
                          std::to_string(omega_from_potential));
  }

  EffectiveOscillator eff{};
  eff.mu_eff = mu_eff;
  eff.omega_eff = omega_from_xpy;
  eff.zeta_sq = eff.mu_eff * eff.omega_eff / cfg.hbar;
  eff.a_coef = std::sqrt(2.0 * cfg.mu * k_px2);
  eff.b_coef = std::sqrt(2.0 * cfg.mu * k_x2);
  return eff;
}

OperatorPoly angular_momentum_z(double hbar) {
  return OperatorPoly::monomial(hbar, mono(Symbol::x, Symbol::py), 1.0) -
         OperatorPoly::monomial(hbar, mono(Symbol::y, Symbol::px), 1.0);
}

SectorHamiltonians split_sectors(const EffectiveOscillator& eff, const LandauConfig& cfg) {
  const double hbar = cfg.hbar;
  OperatorPoly h_xy(hbar);
  const double kinetic = 1.0 / (2.0 * eff.mu_eff);
  const double potential = 0.5 * eff.mu_eff * eff.omega_eff * eff.omega_eff;
  h_xy.add_term(Monomial::of(Symbol::px, 2), kinetic);
  h_xy.add_term(Monomial::of(Symbol::py, 2), kinetic);
  h_xy.add_term(Monomial::of(Symbol::x, 2), potential);
  h_xy.add_term(Monomial::of(Symbol::y, 2), potential);
  return {std::move(h_xy), angular_momentum_z(hbar) * (-eff.omega_eff),
          OperatorPoly::monomial(hbar, Monomial::of(Symbol::pz, 2), 1.0 / (2.0 * cfg.mu))};
}

}  // namespace nclandau
