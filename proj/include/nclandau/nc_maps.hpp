#pragma once

#include <array>
#include <string>
#include <vector>

#include "nclandau/nc_params.hpp"
#include "nclandau/weyl_algebra.hpp"

namespace nclandau {

/// Linear representation of the noncommutative operators through canonical
/// ones. z and pz always map to themselves.
class BoppMap {
 public:
  explicit BoppMap(std::array<OperatorPoly, kSymbolCount> images);

  const OperatorPoly& image(Symbol s) const { return images_[static_cast<std::size_t>(s)]; }
  const std::array<OperatorPoly, kSymbolCount>& images() const { return images_; }
  double hbar() const { return images_[0].hbar(); }

  SubstitutionMap as_substitution() const;

  friend bool operator==(const BoppMap&, const BoppMap&) = default;

 private:
  std::array<OperatorPoly, kSymbolCount> images_;
};

/// x^ = x - (theta/2hbar) py, y^ = y + (theta/2hbar) px; momenta unchanged.
/// Throws ConfigError for phase-space parameters (use bopp_phase).
BoppMap bopp_space(const NCParams& params);

/// x^ = alpha x - (theta/2 hbar alpha) py,  y^ = alpha y + (theta/2 hbar alpha) px,
/// px^ = alpha px + (theta_bar/2 hbar alpha) y,  py^ = alpha py - (theta_bar/2 hbar alpha) x.
BoppMap bopp_phase(const NCParams& params);

struct CommutatorCheck {
  Symbol lhs;
  Symbol rhs;
  std::string label;   // e.g. "[x^, px^]"
  OperatorPoly computed;
  Complex target;
  /// (|constant part - target| + sum of non-constant |coefficients|) / max(1, |target|).
  double deviation;
};

struct AlgebraReport {
  static constexpr double kTolerance = 1e-12;

  std::vector<CommutatorCheck> checks;
  double max_deviation = 0.0;
  bool pass = false;

  const CommutatorCheck& find(Symbol lhs, Symbol rhs) const;
};

/// Commutators of all 15 distinct image pairs against
///   [x^, y^] = i theta, [px^, py^] = i theta_bar, [x^_i, p^_j] = i hbar delta_ij,
/// every other pair commuting.
AlgebraReport verify_algebra(const BoppMap& map, const NCParams& params);

}  // namespace nclandau
