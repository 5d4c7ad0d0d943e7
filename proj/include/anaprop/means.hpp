#ifndef ANAPROP_MEANS_HPP
#define ANAPROP_MEANS_HPP

#include "anaprop/graded_proportion.hpp"
#include "anaprop/solver.hpp"
#include "anaprop/unit_value.hpp"

namespace anaprop {

/// Exponent of a two-argument power mean, with the limit cases kept as
/// sentinels: r = -inf is the minimum, r = 0 the geometric mean, r = +inf
/// the maximum. Numeric 0 and infinities normalize at construction.
class MeanParam {
 public:
  enum class Kind { Min, Geo, Max, Numeric };

  static constexpr MeanParam min() {
    return MeanParam(Kind::Min, -std::numeric_limits<double>::infinity());
  }
  static constexpr MeanParam geo() { return MeanParam(Kind::Geo, 0.0); }
  static constexpr MeanParam max() {
    return MeanParam(Kind::Max, std::numeric_limits<double>::infinity());
  }

  static MeanParam from_numeric(double r);

  constexpr Kind kind() const { return kind_; }

  /// The exponent as a double; sentinels report -inf, 0 and +inf.
  constexpr double numeric() const { return r_; }

  friend constexpr bool operator==(const MeanParam&, const MeanParam&) = default;

 private:
  constexpr MeanParam(Kind k, double r) : kind_(k), r_(r) {}

  Kind kind_;
  double r_;
};

/// Power mean ((x^r + y^r)/2)^(1/r), with the sentinel limits and the
/// convention M_r(0, y) = 0 for r < 0. Always between min(x, y) and
/// max(x, y), symmetric, and idempotent.
UnitValue power_mean(const MeanParam& r, UnitValue x, UnitValue y);

/// Mean-based proportion: |M_r(a, d) - M_r(b, c)| <= tolerance.
bool mean_analogy_check(const MeanParam& r, const Quadruple& q, Tolerance tol = Tolerance());

/// Result of solving M_r(a, d) = M_r(b, c) for r. bracketed is false when
/// no sign change was found for |r| up to 512; r is then the min or max
/// sentinel, whichever leaves the smaller residual.
struct SolveRResult {
  MeanParam r;
  double residual;
  bool bracketed;
};

/// Finds the exponent equalizing the two means. Returns exactly r = 1 when
/// a + d = b + c within tolerance and the geometric sentinel when
/// a*d = b*c within tolerance, before any search; otherwise brackets a sign
/// change of M_r(a,d) - M_r(b,c) and bisects. Intended for ordered
/// quadruples a <= b <= c <= d, where the root is unique.
SolveRResult solve_r(const Quadruple& q, const SolverOptions& opts = SolverOptions());

}  // namespace anaprop

#endif  // ANAPROP_MEANS_HPP
