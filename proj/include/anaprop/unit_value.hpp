#ifndef ANAPROP_UNIT_VALUE_HPP
#define ANAPROP_UNIT_VALUE_HPP

#include <cmath>
#include <compare>
#include <stdexcept>

namespace anaprop {

/// A real number in [0, 1]. Construction rejects anything outside the
/// interval (no tolerance); use clamped() for results of floating-point
/// arithmetic that are mathematically guaranteed to lie in range.
class UnitValue {
 public:
  constexpr UnitValue() : v_(0.0) {}
  constexpr explicit UnitValue(double v) : v_(checked(v)) {}

  /// Clamps round-off excursions back into [0, 1]. NaN is still rejected.
  static UnitValue clamped(double v) {
    if (std::isnan(v)) throw std::domain_error("UnitValue: NaN");
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return UnitValue(v);
  }

  constexpr double value() const { return v_; }

  friend constexpr auto operator<=>(UnitValue, UnitValue) = default;

 private:
  static constexpr double checked(double v) {
    // note: NaN fails the comparison and is rejected as well
    return (v >= 0.0 && v <= 1.0)
               ? v
               : throw std::domain_error("UnitValue: value outside [0,1]");
  }

  double v_;
};

/// Value of an additive generator: a nonnegative extended real (+inf allowed).
struct GeneratorValue {
  double value;

  constexpr explicit GeneratorValue(double v) : value(v) {
    if (!(v >= 0.0))  // also rejects NaN
      throw std::domain_error("GeneratorValue: negative or NaN");
  }
};

}  // namespace anaprop

#endif  // ANAPROP_UNIT_VALUE_HPP
