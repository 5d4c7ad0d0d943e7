#ifndef ANAPROP_GRADED_PROPORTION_HPP
#define ANAPROP_GRADED_PROPORTION_HPP

#include "anaprop/tnorm.hpp"
#include "anaprop/unit_value.hpp"

namespace anaprop {

/// Ordered arguments (a, b, c, d) of "a is to b as c is to d".
struct Quadruple {
  UnitValue a;
  UnitValue b;
  UnitValue c;
  UnitValue d;
};

/// Absolute tolerance for judging the two residual equalities.
struct Tolerance {
  double abs_tol;

  explicit Tolerance(double t = 1e-9) : abs_tol(t) {
    if (!(t > 0.0)) throw std::invalid_argument("Tolerance: abs_tol must be > 0");
  }
};

/// Outcome of a t-norm proportion check. The proportion holds when both
/// |T(a,d) - T(b,c)| and |S(a,d) - S(b,c)| are within tolerance; the two
/// residuals are exposed so callers can inspect the weakened one-sided
/// variant through t_residual alone.
struct ProportionVerdict {
  bool holds;
  double t_residual;
  double s_residual;
};

/// Proportion a:b::c:d under the t-norm T and its dual S:
/// holds iff T(a,d) = T(b,c) and S(a,d) = S(b,c) within tolerance.
ProportionVerdict analogy_check(const TNormKind& kind, const Quadruple& q,
                                Tolerance tol = Tolerance());

/// Graded degree built from bounded differences (the liberal reading):
/// min(1 - |max(0,a-b) - max(0,c-d)|, 1 - |max(0,b-a) - max(0,d-c)|).
/// Equals 1 exactly when a - b = c - d.
UnitValue mv_degree_dissim(const Quadruple& q);

/// Graded degree built from min/max inside the pairs (the conservative
/// reading): min(1 - |min(a,d) - min(b,c)|, 1 - |max(a,d) - max(b,c)|).
/// Equals 1 exactly when min(a,d) = min(b,c) and max(a,d) = max(b,c).
UnitValue mv_degree_similarity(const Quadruple& q);

/// Goguen implication: 1 when s = 0, min(1, t/s) otherwise.
UnitValue goguen_implication(UnitValue s, UnitValue t);

/// Geometric proportion: |a*d - b*c| <= tolerance.
bool geometric_proportion_check(const Quadruple& q, Tolerance tol = Tolerance());

}  // namespace anaprop

#endif  // ANAPROP_GRADED_PROPORTION_HPP
