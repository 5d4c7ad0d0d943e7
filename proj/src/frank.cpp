#include "anaprop/frank.hpp"

#include <algorithm>
#include <cmath>

namespace anaprop {

namespace {

constexpr double kZeroSnap = 1e-12;
constexpr double kOneSnap = 1e-9;
constexpr double kInfSnap = 1e15;

// Generic Frank t-norm, log_p(1 + (p^a - 1)(p^b - 1)/(p - 1)), rewritten
// with expm1/log1p. The naive p^a - 1 form loses every significant digit
// as p -> 1 and overflows for large p; with L = ln p the rewrite is exact
// at the boundaries (a = 0 gives 0, a = 1 gives b up to one rounding).
double generic_tnorm(double p, double a, double b) {
  if (a > b) std::swap(a, b);  // bitwise symmetry
  const double L = std::log(p);
  const double eb = std::expm1(b * L);
  const double ec = std::expm1(L);
  const double ratio = std::expm1(a * L) * eb / ec;
  double t;
  if (ratio > -0.5) {
    t = std::log1p(ratio) / L;
  } else {
    // p < 1 near the min regime: 1 + ratio collapses and would cost up to
    // five digits; the numerator p^(a+b) - p^a - p^b + p splits into two
    // same-sign terms instead
    const double n = std::exp(a * L) * eb - p * std::expm1((b - 1.0) * L);
    t = std::log(n / ec) / L;
  }
  // round-off can leave t an ulp outside the min/Lukasiewicz envelope
  t = std::max(t, std::max(0.0, a + b - 1.0));
  t = std::min(t, std::min(a, b));
  return t;
}

double generic_generator(double p, double x) {
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  const double L = std::log(p);
  // (p - 1)/(p^x - 1) is positive for p on either side of 1
  return std::log(std::expm1(L) / std::expm1(x * L));
}

double generic_inverse(double p, double y) {
  const double L = std::log(p);
  return std::log1p(std::expm1(L) * std::exp(-y)) / L;
}

}  // namespace

FrankParam FrankParam::from_numeric(double p) {
  if (std::isnan(p)) throw std::invalid_argument("FrankParam: NaN parameter");
  if (p < 0.0) throw NegativeParameterError("FrankParam: negative parameter");
  if (p < kZeroSnap) return zero();
  if (std::abs(p - 1.0) < kOneSnap) return one();
  if (p > kInfSnap) return inf();
  return FrankParam(Kind::Generic, p);
}

FrankParam frank_regime(double p_numeric) { return FrankParam::from_numeric(p_numeric); }

UnitValue frank_tnorm(const FrankParam& p, UnitValue a, UnitValue b) {
  const double x = a.value();
  const double y = b.value();
  switch (p.kind()) {
    case FrankParam::Kind::Zero:
      return UnitValue(std::min(x, y));
    case FrankParam::Kind::One:
      return UnitValue(x * y);
    case FrankParam::Kind::Inf:
      return UnitValue(std::max(0.0, x + y - 1.0));
    case FrankParam::Kind::Generic:
      return UnitValue::clamped(generic_tnorm(p.numeric(), x, y));
  }
  throw std::logic_error("FrankParam: bad kind");
}

UnitValue frank_tconorm(const FrankParam& p, UnitValue a, UnitValue b) {
  const UnitValue t = frank_tnorm(p, UnitValue(1.0 - a.value()), UnitValue(1.0 - b.value()));
  return UnitValue::clamped(1.0 - t.value());
}

GeneratorValue frank_generator(const FrankParam& p, UnitValue x) {
  const double v = x.value();
  switch (p.kind()) {
    case FrankParam::Kind::Zero:
      throw NotArchimedeanError("frank_generator: minimum (p = 0) has no additive generator");
    case FrankParam::Kind::One:
      return GeneratorValue(v == 0.0 ? std::numeric_limits<double>::infinity() : -std::log(v));
    case FrankParam::Kind::Inf:
      return GeneratorValue(1.0 - v);
    case FrankParam::Kind::Generic:
      return GeneratorValue(std::max(0.0, generic_generator(p.numeric(), v)));
  }
  throw std::logic_error("FrankParam: bad kind");
}

UnitValue frank_pseudo_inverse(const FrankParam& p, GeneratorValue y) {
  const double v = y.value;
  switch (p.kind()) {
    case FrankParam::Kind::Zero:
      throw NotArchimedeanError("frank_pseudo_inverse: minimum (p = 0) has no additive generator");
    case FrankParam::Kind::One:
      return UnitValue::clamped(std::exp(-v));
    case FrankParam::Kind::Inf:
      // generator range is [0, 1]; everything above f(0) = 1 maps to 0
      return UnitValue::clamped(std::max(0.0, 1.0 - v));
    case FrankParam::Kind::Generic:
      if (std::isinf(v)) return UnitValue(0.0);
      return UnitValue::clamped(generic_inverse(p.numeric(), v));
  }
  throw std::logic_error("FrankParam: bad kind");
}

}  // namespace anaprop
