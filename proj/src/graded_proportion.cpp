#include "anaprop/graded_proportion.hpp"

#include <algorithm>
#include <cmath>

namespace anaprop {

ProportionVerdict analogy_check(const TNormKind& kind, const Quadruple& q, Tolerance tol) {
  const double t_ad = tnorm_eval(kind, q.a, q.d).value();
  const double t_bc = tnorm_eval(kind, q.b, q.c).value();
  const double s_ad = tconorm_eval(kind, q.a, q.d).value();
  const double s_bc = tconorm_eval(kind, q.b, q.c).value();
  const double t_res = std::abs(t_ad - t_bc);
  const double s_res = std::abs(s_ad - s_bc);
  return ProportionVerdict{t_res <= tol.abs_tol && s_res <= tol.abs_tol, t_res, s_res};
}

UnitValue mv_degree_dissim(const Quadruple& q) {
  const double a = q.a.value(), b = q.b.value(), c = q.c.value(), d = q.d.value();
  const double forward = 1.0 - std::abs(std::max(0.0, a - b) - std::max(0.0, c - d));
  const double backward = 1.0 - std::abs(std::max(0.0, b - a) - std::max(0.0, d - c));
  return UnitValue(std::min(forward, backward));
}

UnitValue mv_degree_similarity(const Quadruple& q) {
  const double a = q.a.value(), b = q.b.value(), c = q.c.value(), d = q.d.value();
  const double low = 1.0 - std::abs(std::min(a, d) - std::min(b, c));
  const double high = 1.0 - std::abs(std::max(a, d) - std::max(b, c));
  return UnitValue(std::min(low, high));
}

UnitValue goguen_implication(UnitValue s, UnitValue t) {
  if (s.value() == 0.0) return UnitValue(1.0);
  return UnitValue(std::min(1.0, t.value() / s.value()));
}

bool geometric_proportion_check(const Quadruple& q, Tolerance tol) {
  return std::abs(q.a.value() * q.d.value() - q.b.value() * q.c.value()) <= tol.abs_tol;
}

}  // namespace anaprop
