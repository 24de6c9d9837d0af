#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace nclandau {

class NCParams;

using Complex = std::complex<double>;

/// Canonical symbols, listed in normal order: positions before momenta,
/// alphabetical within each group.
enum class Symbol : std::uint8_t { x = 0, y, z, px, py, pz };

inline constexpr std::size_t kSymbolCount = 6;
inline constexpr std::array<Symbol, kSymbolCount> kAllSymbols = {
    Symbol::x, Symbol::y, Symbol::z, Symbol::px, Symbol::py, Symbol::pz};

std::string_view symbol_name(Symbol s);
bool is_position(Symbol s);
/// x <-> px, y <-> py, z <-> pz.
Symbol conjugate(Symbol s);

/// Product of powers x^a y^b z^c px^d py^e pz^f, always read in that order.
class Monomial {
 public:
  using Exponents = std::array<std::uint16_t, kSymbolCount>;

  Monomial() = default;
  explicit Monomial(const Exponents& exponents) : exps_(exponents) {}

  static Monomial unit() { return {}; }
  static Monomial of(Symbol s, unsigned power = 1);

  unsigned power(Symbol s) const { return exps_[static_cast<std::size_t>(s)]; }
  const Exponents& exponents() const { return exps_; }
  unsigned degree() const;
  bool is_unit() const { return degree() == 0; }

  /// Exponent-wise sum. Only meaningful as an operator product when the
  /// factors commute (e.g. for phase-space functions).
  Monomial operator*(const Monomial& other) const;

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  Exponents exps_{};
};

using TermMap = std::map<Monomial, Complex>;

/// Normal-ordered polynomial in the canonical operators with [x_i, p_j] =
/// i hbar delta_ij. Every stored monomial is interpreted with positions to the
/// left of momenta, which makes the term map a canonical representation.
class OperatorPoly {
 public:
  explicit OperatorPoly(double hbar, double drop_tolerance = 0.0);

  static OperatorPoly constant(double hbar, Complex value);
  static OperatorPoly symbol(double hbar, Symbol s);
  static OperatorPoly monomial(double hbar, const Monomial& m, Complex coefficient = 1.0);

  double hbar() const { return hbar_; }
  double drop_tolerance() const { return drop_tolerance_; }
  const TermMap& terms() const { return terms_; }

  Complex coefficient(const Monomial& m) const;
  unsigned degree() const;
  bool is_zero() const { return terms_.empty(); }
  /// Largest |coefficient| over all terms, 0 for the zero polynomial.
  double max_abs_coefficient() const;

  /// Adds c * m to the polynomial (m already normal-ordered).
  void add_term(const Monomial& m, Complex c);

  OperatorPoly& operator+=(const OperatorPoly& other);
  OperatorPoly& operator-=(const OperatorPoly& other);
  OperatorPoly& operator*=(Complex scalar);

  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(OperatorPoly a, Complex s) { return a *= s; }
  friend OperatorPoly operator*(Complex s, OperatorPoly a) { return a *= s; }
  friend OperatorPoly operator-(OperatorPoly a) { return a *= -1.0; }
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);

  /// Structural equality: same hbar and identical term maps.
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b);

  std::string to_string() const;

 private:
  void check_compatible(const OperatorPoly& other) const;

  double hbar_;
  double drop_tolerance_;
  TermMap terms_;
};

/// Normal-ordered operator product. Throws ConfigError on mismatched hbar.
OperatorPoly multiply(const OperatorPoly& a, const OperatorPoly& b);

/// [a, b] = ab - ba.
OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b);

Complex coefficient(const OperatorPoly& a, const Monomial& m);

/// Normal-orders an arbitrary word of canonical symbols (read left to right).
OperatorPoly normal_order(std::span<const Symbol> word, double hbar);

/// Re-derives the normal form of every stored monomial from its symbol word.
/// The identity on any polynomial built through this API.
OperatorPoly canonicalize(const OperatorPoly& a);

using SubstitutionMap = std::map<Symbol, OperatorPoly>;

/// Replaces every symbol by its image; symbols absent from `images` map to
/// themselves. Images must have degree <= 1 (the Bopp shifts are linear) so
/// that the ordering of image products is unambiguous; a nonlinear image or a
/// mismatched hbar throws ConfigError.
OperatorPoly substitute(const OperatorPoly& a, const SubstitutionMap& images);

/// Polynomial in mutually commuting phase-space coordinates.
class PhaseSpaceFn {
 public:
  PhaseSpaceFn() = default;

  static PhaseSpaceFn constant(Complex value);
  static PhaseSpaceFn symbol(Symbol s);
  static PhaseSpaceFn monomial(const Monomial& m, Complex coefficient = 1.0);

  const TermMap& terms() const { return terms_; }
  Complex coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  double max_abs_coefficient() const;

  void add_term(const Monomial& m, Complex c);

  PhaseSpaceFn& operator+=(const PhaseSpaceFn& other);
  PhaseSpaceFn& operator-=(const PhaseSpaceFn& other);
  PhaseSpaceFn& operator*=(Complex scalar);

  friend PhaseSpaceFn operator+(PhaseSpaceFn a, const PhaseSpaceFn& b) { return a += b; }
  friend PhaseSpaceFn operator-(PhaseSpaceFn a, const PhaseSpaceFn& b) { return a -= b; }
  friend PhaseSpaceFn operator*(PhaseSpaceFn a, Complex s) { return a *= s; }
  friend PhaseSpaceFn operator*(Complex s, PhaseSpaceFn a) { return a *= s; }
  /// Pointwise (commutative) product.
  friend PhaseSpaceFn operator*(const PhaseSpaceFn& a, const PhaseSpaceFn& b);

  friend bool operator==(const PhaseSpaceFn&, const PhaseSpaceFn&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Moyal product with kernel
///
///     exp[ i/(2 alpha^2) (theta  (dx<- dy-> - dy<- dx->)
///                       + theta_bar (dpx<- dpy-> - dpy<- dpx->)) ]
///
/// where <- acts on f and -> on g. The full exponential series is summed; it
/// terminates because f and g are polynomials.
PhaseSpaceFn moyal_star(const PhaseSpaceFn& f, const PhaseSpaceFn& g, const NCParams& params);

}  // namespace nclandau
