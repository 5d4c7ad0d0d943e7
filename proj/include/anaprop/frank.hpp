#ifndef ANAPROP_FRANK_HPP
#define ANAPROP_FRANK_HPP

#include <limits>

#include "anaprop/errors.hpp"
#include "anaprop/unit_value.hpp"

namespace anaprop {

/// Parameter of the Frank t-norm family. The family interpolates between
/// minimum (p = 0), product (p = 1) and Lukasiewicz (p = +inf); those three
/// are kept as explicit sentinels so the closed forms are used instead of
/// the generic logarithmic formula. Numeric parameters inside the snap
/// windows around the sentinels normalize to them at construction.
class FrankParam {
 public:
  enum class Kind { Zero, One, Inf, Generic };

  static constexpr FrankParam zero() { return FrankParam(Kind::Zero, 0.0); }
  static constexpr FrankParam one() { return FrankParam(Kind::One, 1.0); }
  static constexpr FrankParam inf() {
    return FrankParam(Kind::Inf, std::numeric_limits<double>::infinity());
  }

  /// Normalizes a raw numeric parameter. Snap windows: p < 1e-12 -> Zero,
  /// |p - 1| < 1e-9 -> One, p > 1e15 -> Inf. Throws NegativeParameterError
  /// for p < 0 and std::invalid_argument for NaN.
  static FrankParam from_numeric(double p);

  constexpr Kind kind() const { return kind_; }

  /// The parameter as a double; sentinels report 0, 1 and +inf.
  constexpr double numeric() const { return p_; }

  friend constexpr bool operator==(const FrankParam&, const FrankParam&) = default;

 private:
  constexpr FrankParam(Kind k, double p) : kind_(k), p_(p) {}

  Kind kind_;
  double p_;
};

/// Spec name for FrankParam::from_numeric.
FrankParam frank_regime(double p_numeric);

/// Frank t-norm T_F^p(a, b).
UnitValue frank_tnorm(const FrankParam& p, UnitValue a, UnitValue b);

/// Dual co-norm, defined through the standard negation:
/// S(a, b) = 1 - T(1 - a, 1 - b). For every member of the family
/// T(a, b) + S(a, b) = a + b.
UnitValue frank_tconorm(const FrankParam& p, UnitValue a, UnitValue b);

/// Additive generator of T_F^p; strictly decreasing with f(1) = 0.
/// Throws NotArchimedeanError for p = Zero (minimum has no generator).
GeneratorValue frank_generator(const FrankParam& p, UnitValue x);

/// Pseudo-inverse of the additive generator: the inverse on the generator's
/// range, 1 on [0, f(1)] and 0 on [f(0), +inf).
UnitValue frank_pseudo_inverse(const FrankParam& p, GeneratorValue y);

}  // namespace anaprop

#endif  // ANAPROP_FRANK_HPP
