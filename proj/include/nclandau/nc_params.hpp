#pragma once

namespace nclandau {

/// Deformation parameters of the noncommutative phase space.
///
/// theta and theta_bar are the single independent entries of the 2D
/// antisymmetric matrices of the position and momentum commutators; alpha is
/// the scaling constant of the generalized Bopp shift. A valid instance either
/// sits in the NC-space limit (alpha == 1, theta_bar == 0) or satisfies
///
///     alpha^2 + theta * theta_bar / (4 hbar^2 alpha^2) == 1
///
/// to within kConstraintTolerance.
class NCParams {
 public:
  static constexpr double kConstraintTolerance = 1e-12;

  /// Commutative quantum mechanics: theta = theta_bar = 0, alpha = 1.
  static NCParams commutative(double hbar);
  /// Noncommutative space only (alpha = 1, theta_bar = 0).
  static NCParams space(double hbar, double theta);
  /// Noncommutative phase space with theta_bar derived from (theta, alpha).
  static NCParams phase(double hbar, double theta, double alpha);
  /// Validated construction from all four values.
  static NCParams make(double hbar, double theta, double theta_bar, double alpha);
  /// No validation at all. For diagnostics that need a constraint-violating
  /// parameter set; every other entry point expects a valid instance.
  static NCParams unchecked(double hbar, double theta, double theta_bar, double alpha);

  double hbar() const noexcept { return hbar_; }
  double theta() const noexcept { return theta_; }
  double theta_bar() const noexcept { return theta_bar_; }
  double alpha() const noexcept { return alpha_; }

  /// alpha == 1 and theta_bar == 0.
  bool is_space_limit() const noexcept { return alpha_ == 1.0 && theta_bar_ == 0.0; }

  /// alpha^2 + theta*theta_bar/(4 hbar^2 alpha^2) - 1.
  double constraint_residual() const noexcept;

  bool is_valid() const noexcept;

  /// Throws ConfigError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const NCParams&, const NCParams&) = default;

 private:
  NCParams(double hbar, double theta, double theta_bar, double alpha)
      : hbar_(hbar), theta_(theta), theta_bar_(theta_bar), alpha_(alpha) {}

  double hbar_ = 1.0;
  double theta_ = 0.0;
  double theta_bar_ = 0.0;
  double alpha_ = 1.0;
};

/// theta_bar = 4 hbar^2 alpha^2 (1 - alpha^2) / theta.
///
/// Throws DomainError for theta == 0 (use NCParams::commutative or
/// NCParams::space instead), alpha outside (0, 1], or hbar <= 0.
double theta_bar_from(double theta, double alpha, double hbar);

}  // namespace nclandau
