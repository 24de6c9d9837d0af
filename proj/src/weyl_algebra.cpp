#include "nclandau/weyl_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "nclandau/errors.hpp"
#include "nclandau/nc_params.hpp"

namespace nclandau {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kNames = {"x", "y", "z", "px", "py", "pz"};

std::size_t idx(Symbol s) { return static_cast<std::size_t>(s); }

// Accumulates c into terms[m], erasing the entry when it falls to the drop
// tolerance. A tolerance of 0 erases exact zeros only.
void accumulate(TermMap& terms, const Monomial& m, Complex c, double drop_tolerance) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) <= drop_tolerance) terms.erase(it);
}

double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double falling_factorial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

std::string format_complex(Complex c) {
  char buf[96];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
  } else if (c.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17gi", c.imag());
  } else {
    std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", c.real(), c.imag());
  }
  return buf;
}

std::string format_terms(const TermMap& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += " + ";
    out += format_complex(c);
    if (!m.is_unit()) out += "*" + m.to_string();
  }
  return out;
}

// Product of two normal-ordered monomials X^a P^b * X^c P^d. Moving P^b past
// X^c uses, per axis,
//   p^b x^c = sum_k C(b,k) C(c,k) k! (-i hbar)^k x^(c-k) p^(b-k).
void multiply_monomials(const Monomial& lhs, const Monomial& rhs, Complex scale, double hbar,
                        double drop_tolerance, TermMap& out) {
  std::array<unsigned, 3> kmax{};
  for (std::size_t axis = 0; axis < 3; ++axis) {
    kmax[axis] = std::min<unsigned>(lhs.exponents()[axis + 3], rhs.exponents()[axis]);
  }
  const Complex minus_i_hbar{0.0, -hbar};

  for (unsigned kx = 0; kx <= kmax[0]; ++kx) {
    for (unsigned ky = 0; ky <= kmax[1]; ++ky) {
      for (unsigned kz = 0; kz <= kmax[2]; ++kz) {
        const std::array<unsigned, 3> k = {kx, ky, kz};
        Complex c = scale;
        Monomial::Exponents e{};
        for (std::size_t axis = 0; axis < 3; ++axis) {
          const unsigned b = lhs.exponents()[axis + 3];
          const unsigned cpow = rhs.exponents()[axis];
          const unsigned ka = k[axis];
          if (ka > 0) {
            c *= binomial(b, ka) * binomial(cpow, ka) * falling_factorial(ka, ka) *
                 std::pow(minus_i_hbar, static_cast<int>(ka));
          }
          e[axis] = static_cast<std::uint16_t>(lhs.exponents()[axis] + cpow - ka);
          e[axis + 3] = static_cast<std::uint16_t>(b - ka + rhs.exponents()[axis + 3]);
        }
        accumulate(out, Monomial(e), c, drop_tolerance);
      }
    }
  }
}

}  // namespace

std::string_view symbol_name(Symbol s) { return kNames[idx(s)]; }

bool is_position(Symbol s) { return idx(s) < 3; }

Symbol conjugate(Symbol s) {
  const std::size_t i = idx(s);
  return static_cast<Symbol>(i < 3 ? i + 3 : i - 3);
}

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::of(Symbol s, unsigned power) {
  Exponents e{};
  e[idx(s)] = static_cast<std::uint16_t>(power);
  return Monomial(e);
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Exponents e{};
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    e[i] = static_cast<std::uint16_t>(exps_[i] + other.exps_[i]);
  }
  return Monomial(e);
}

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += kNames[i];
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

// ---- OperatorPoly -----------------------------------------------------------

OperatorPoly::OperatorPoly(double hbar, double drop_tolerance)
    : hbar_(hbar), drop_tolerance_(drop_tolerance) {
  if (!(hbar > 0.0)) throw ConfigError("hbar", "must be positive");
  if (!(drop_tolerance >= 0.0)) throw ConfigError("drop_tolerance", "must be non-negative");
}

OperatorPoly OperatorPoly::constant(double hbar, Complex value) {
  return monomial(hbar, Monomial::unit(), value);
}

OperatorPoly OperatorPoly::symbol(double hbar, Symbol s) {
  return monomial(hbar, Monomial::of(s), 1.0);
}

OperatorPoly OperatorPoly::monomial(double hbar, const Monomial& m, Complex coefficient) {
  OperatorPoly p(hbar);
  p.add_term(m, coefficient);
  return p;
}

Complex OperatorPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Complex{} : it->second;
}

unsigned OperatorPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

double OperatorPoly::max_abs_coefficient() const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

void OperatorPoly::add_term(const Monomial& m, Complex c) {
  accumulate(terms_, m, c, drop_tolerance_);
}

void OperatorPoly::check_compatible(const OperatorPoly& other) const {
  if (hbar_ != other.hbar_) {
    throw ConfigError("hbar", "operator polynomials carry different hbar values");
  }
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(Complex scalar) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (std::abs(it->second) <= drop_tolerance_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) { return multiply(a, b); }

bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
  return a.hbar_ == b.hbar_ && a.terms_ == b.terms_;
}

std::string OperatorPoly::to_string() const { return format_terms(terms_); }

OperatorPoly multiply(const OperatorPoly& a, const OperatorPoly& b) {
  if (a.hbar() != b.hbar()) {
    throw ConfigError("hbar", "operator polynomials carry different hbar values");
  }
  const double tol = std::max(a.drop_tolerance(), b.drop_tolerance());
  OperatorPoly result(a.hbar(), tol);
  TermMap out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      multiply_monomials(ma, mb, ca * cb, a.hbar(), tol, out);
    }
  }
  for (const auto& [m, c] : out) result.add_term(m, c);
  return result;
}

OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) {
  return multiply(a, b) - multiply(b, a);
}

Complex coefficient(const OperatorPoly& a, const Monomial& m) { return a.coefficient(m); }

OperatorPoly normal_order(std::span<const Symbol> word, double hbar) {
  OperatorPoly result = OperatorPoly::constant(hbar, 1.0);
  for (const Symbol s : word) result = multiply(result, OperatorPoly::symbol(hbar, s));
  return result;
}

OperatorPoly canonicalize(const OperatorPoly& a) {
  OperatorPoly result(a.hbar(), a.drop_tolerance());
  std::vector<Symbol> word;
  for (const auto& [m, c] : a.terms()) {
    word.clear();
    for (const Symbol s : kAllSymbols) word.insert(word.end(), m.power(s), s);
    result += normal_order(word, a.hbar()) * c;
  }
  return result;
}

OperatorPoly substitute(const OperatorPoly& a, const SubstitutionMap& images) {
  std::array<OperatorPoly, kSymbolCount> image = {
      OperatorPoly::symbol(a.hbar(), Symbol::x),  OperatorPoly::symbol(a.hbar(), Symbol::y),
      OperatorPoly::symbol(a.hbar(), Symbol::z),  OperatorPoly::symbol(a.hbar(), Symbol::px),
      OperatorPoly::symbol(a.hbar(), Symbol::py), OperatorPoly::symbol(a.hbar(), Symbol::pz)};
  for (const auto& [s, poly] : images) {
    if (poly.hbar() != a.hbar()) {
      throw ConfigError("images", "image of " + std::string(symbol_name(s)) +
                                      " carries a different hbar");
    }
    if (poly.degree() > 1) {
      throw ConfigError("images", "image of " + std::string(symbol_name(s)) +
                                      " is nonlinear; operator ordering would be ambiguous");
    }
    image[idx(s)] = poly;
  }

  // Powers are cached per symbol since Hamiltonians reuse the same squares.
  std::array<std::vector<OperatorPoly>, kSymbolCount> powers;
  auto power = [&](Symbol s, unsigned n) -> const OperatorPoly& {
    auto& cache = powers[idx(s)];
    while (cache.size() <= n) {
      cache.push_back(cache.empty() ? OperatorPoly::constant(a.hbar(), 1.0)
                                    : multiply(cache.back(), image[idx(s)]));
    }
    return cache[n];
  };

  OperatorPoly result(a.hbar(), a.drop_tolerance());
  for (const auto& [m, c] : a.terms()) {
    OperatorPoly term = OperatorPoly::constant(a.hbar(), c);
    for (const Symbol s : kAllSymbols) {
      if (m.power(s) > 0) term = multiply(term, power(s, m.power(s)));
    }
    result += term;
  }
  return result;
}

// ---- PhaseSpaceFn -----------------------------------------------------------

PhaseSpaceFn PhaseSpaceFn::constant(Complex value) { return monomial(Monomial::unit(), value); }

PhaseSpaceFn PhaseSpaceFn::symbol(Symbol s) { return monomial(Monomial::of(s), 1.0); }

PhaseSpaceFn PhaseSpaceFn::monomial(const Monomial& m, Complex coefficient) {
  PhaseSpaceFn f;
  f.add_term(m, coefficient);
  return f;
}

Complex PhaseSpaceFn::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Complex{} : it->second;
}

double PhaseSpaceFn::max_abs_coefficient() const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

void PhaseSpaceFn::add_term(const Monomial& m, Complex c) { accumulate(terms_, m, c, 0.0); }

PhaseSpaceFn& PhaseSpaceFn::operator+=(const PhaseSpaceFn& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PhaseSpaceFn& PhaseSpaceFn::operator-=(const PhaseSpaceFn& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PhaseSpaceFn& PhaseSpaceFn::operator*=(Complex scalar) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (it->second == Complex{}) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

PhaseSpaceFn operator*(const PhaseSpaceFn& a, const PhaseSpaceFn& b) {
  PhaseSpaceFn r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

std::string PhaseSpaceFn::to_string() const { return format_terms(terms_); }

PhaseSpaceFn moyal_star(const PhaseSpaceFn& f, const PhaseSpaceFn& g, const NCParams& params) {
  // The bidifferential operator in the exponent is a sum of four elementary
  // terms c_r d_{a_r}(f) d_{b_r}(g). Since all derivatives commute,
  //   exp(D) = sum_{n_0..n_3} prod_r c_r^{n_r}/n_r!  d^{..}f d^{..}g.
  struct Elementary {
    Symbol on_f;
    Symbol on_g;
    Complex c;
  };
  const double a2 = params.alpha() * params.alpha();
  const Complex cx{0.0, params.theta() / (2.0 * a2)};
  const Complex cp{0.0, params.theta_bar() / (2.0 * a2)};
  const std::array<Elementary, 4> ops = {{{Symbol::x, Symbol::y, cx},
                                          {Symbol::y, Symbol::x, -cx},
                                          {Symbol::px, Symbol::py, cp},
                                          {Symbol::py, Symbol::px, -cp}}};

  PhaseSpaceFn result;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      std::array<unsigned, 4> bound{};
      for (std::size_t r = 0; r < ops.size(); ++r) {
        bound[r] = ops[r].c == Complex{} ? 0u
                                         : std::min(mf.power(ops[r].on_f), mg.power(ops[r].on_g));
      }
      std::array<unsigned, 4> n{};
      for (n[0] = 0; n[0] <= bound[0]; ++n[0]) {
        for (n[1] = 0; n[1] <= bound[1]; ++n[1]) {
          for (n[2] = 0; n[2] <= bound[2]; ++n[2]) {
            for (n[3] = 0; n[3] <= bound[3]; ++n[3]) {
              Monomial::Exponents ef = mf.exponents();
              Monomial::Exponents eg = mg.exponents();
              Complex c = cf * cg;
              bool vanishes = false;
              for (std::size_t r = 0; r < ops.size() && !vanishes; ++r) {
                if (n[r] == 0) continue;
                const std::size_t sf = idx(ops[r].on_f);
                const std::size_t sg = idx(ops[r].on_g);
                if (ef[sf] < n[r] || eg[sg] < n[r]) {
                  vanishes = true;
                  break;
                }
                c *= std::pow(ops[r].c, static_cast<int>(n[r])) /
                     falling_factorial(n[r], n[r]) * falling_factorial(ef[sf], n[r]) *
                     falling_factorial(eg[sg], n[r]);
                ef[sf] = static_cast<std::uint16_t>(ef[sf] - n[r]);
                eg[sg] = static_cast<std::uint16_t>(eg[sg] - n[r]);
              }
              if (!vanishes) result.add_term(Monomial(ef) * Monomial(eg), c);
            }
          }
        }
      }
    }
  }
  return result;
}

}  // namespace nclandau
