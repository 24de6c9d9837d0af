#include "nclandau/nc_maps.hpp"

#include <cmath>
#include <stdexcept>

#include "nclandau/errors.hpp"

namespace nclandau {

// ---- NCParams ---------------------------------------------------------------

NCParams NCParams::commutative(double hbar) { return make(hbar, 0.0, 0.0, 1.0); }

NCParams NCParams::space(double hbar, double theta) { return make(hbar, theta, 0.0, 1.0); }

NCParams NCParams::phase(double hbar, double theta, double alpha) {
  return make(hbar, theta, theta_bar_from(theta, alpha, hbar), alpha);
}

NCParams NCParams::make(double hbar, double theta, double theta_bar, double alpha) {
  NCParams p(hbar, theta, theta_bar, alpha);
  p.validate();
  return p;
}

NCParams NCParams::unchecked(double hbar, double theta, double theta_bar, double alpha) {
  return NCParams(hbar, theta, theta_bar, alpha);
}

double NCParams::constraint_residual() const noexcept {
  const double a2 = alpha_ * alpha_;
  return a2 + theta_ * theta_bar_ / (4.0 * hbar_ * hbar_ * a2) - 1.0;
}

bool NCParams::is_valid() const noexcept {
  try {
    validate();
    return true;
  } catch (const ConfigError&) {
    return false;
  }
}

void NCParams::validate() const {
  if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) throw ConfigError("hbar", "must be positive");
  if (!std::isfinite(theta_)) throw ConfigError("theta", "must be finite");
  if (!std::isfinite(theta_bar_)) throw ConfigError("theta_bar", "must be finite");
  if (!(alpha_ > 0.0 && alpha_ <= 1.0)) throw ConfigError("alpha", "must lie in (0, 1]");
  if (is_space_limit()) return;
  if (theta_ == 0.0) {
    throw ConfigError("theta",
                      "theta == 0 requires alpha == 1 and theta_bar == 0 (commutative limit)");
  }
  if (std::abs(constraint_residual()) > kConstraintTolerance) {
    throw ConfigError("theta_bar",
                      "violates alpha^2 + theta*theta_bar/(4 hbar^2 alpha^2) = 1");
  }
}

double theta_bar_from(double theta, double alpha, double hbar) {
  if (theta == 0.0) {
    throw DomainError(
        "theta_bar_from: theta == 0 is singular; use alpha = 1, theta_bar = 0 directly");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("theta_bar_from: alpha must lie in (0, 1]");
  if (!(hbar > 0.0)) throw DomainError("theta_bar_from: hbar must be positive");
  const double a2 = alpha * alpha;
  return 4.0 * hbar * hbar * a2 * (1.0 - a2) / theta;
}

// ---- BoppMap ----------------------------------------------------------------

BoppMap::BoppMap(std::array<OperatorPoly, kSymbolCount> images) : images_(std::move(images)) {
  const double hbar = images_[0].hbar();
  for (const Symbol s : kAllSymbols) {
    const OperatorPoly& p = image(s);
    if (p.hbar() != hbar) throw ConfigError("images", "images carry different hbar values");
    if (p.degree() > 1) throw ConfigError("images", "Bopp images must be linear");
    for (const auto& [m, c] : p.terms()) {
      if (c.imag() != 0.0) {
        throw ConfigError("images", "Bopp images must have real coefficients");
      }
    }
  }
  for (const Symbol s : {Symbol::z, Symbol::pz}) {
    if (!(image(s) == OperatorPoly::symbol(hbar, s))) {
      throw ConfigError("images", "z and pz must map to themselves");
    }
  }
}

SubstitutionMap BoppMap::as_substitution() const {
  SubstitutionMap map;
  for (const Symbol s : kAllSymbols) map.emplace(s, image(s));
  return map;
}

namespace {

BoppMap assemble(double hbar, double alpha, double pos_shift, double mom_shift) {
  auto sym = [hbar](Symbol s) { return OperatorPoly::symbol(hbar, s); };
  return BoppMap({alpha * sym(Symbol::x) - pos_shift * sym(Symbol::py),
                  alpha * sym(Symbol::y) + pos_shift * sym(Symbol::px),
                  sym(Symbol::z),
                  alpha * sym(Symbol::px) + mom_shift * sym(Symbol::y),
                  alpha * sym(Symbol::py) - mom_shift * sym(Symbol::x),
                  sym(Symbol::pz)});
}

}  // namespace

BoppMap bopp_space(const NCParams& params) {
  if (!params.is_space_limit()) {
    throw ConfigError("nc", "bopp_space needs alpha == 1 and theta_bar == 0; call bopp_phase");
  }
  return assemble(params.hbar(), 1.0, params.theta() / (2.0 * params.hbar()), 0.0);
}

BoppMap bopp_phase(const NCParams& params) {
  const double two_hbar_alpha = 2.0 * params.hbar() * params.alpha();
  return assemble(params.hbar(), params.alpha(), params.theta() / two_hbar_alpha,
                  params.theta_bar() / two_hbar_alpha);
}

// ---- verify_algebra ---------------------------------------------------------

const CommutatorCheck& AlgebraReport::find(Symbol lhs, Symbol rhs) const {
  for (const auto& c : checks) {
    if (c.lhs == lhs && c.rhs == rhs) return c;
  }
  throw std::out_of_range("AlgebraReport::find: no such commutator");
}

namespace {

Complex target_commutator(Symbol a, Symbol b, const NCParams& params) {
  const Complex i{0.0, 1.0};
  if (a == Symbol::x && b == Symbol::y) return i * params.theta();
  if (a == Symbol::px && b == Symbol::py) return i * params.theta_bar();
  if (is_position(a) && !is_position(b) && conjugate(a) == b) return i * params.hbar();
  return {};
}

std::string hat(Symbol s) { return std::string(symbol_name(s)) + "^"; }

}  // namespace

AlgebraReport verify_algebra(const BoppMap& map, const NCParams& params) {
  AlgebraReport report;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    for (std::size_t j = i + 1; j < kSymbolCount; ++j) {
      const Symbol a = kAllSymbols[i];
      const Symbol b = kAllSymbols[j];
      OperatorPoly computed = commutator(map.image(a), map.image(b));
      const Complex target = target_commutator(a, b, params);
      double residual = std::abs(computed.coefficient(Monomial::unit()) - target);
      for (const auto& [m, c] : computed.terms()) {
        if (!m.is_unit()) residual += std::abs(c);
      }
      const double deviation = residual / std::max(1.0, std::abs(target));
      report.max_deviation = std::max(report.max_deviation, deviation);
      report.checks.push_back(
          {a, b, "[" + hat(a) + ", " + hat(b) + "]", std::move(computed), target, deviation});
    }
  }
  report.pass = report.max_deviation <= AlgebraReport::kTolerance;
  return report;
}

}  // namespace nclandau
