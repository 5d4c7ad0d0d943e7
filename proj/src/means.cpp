#include "anaprop/means.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace anaprop {

namespace {

// ln(cosh(u)) without overflow: |u| + ln((1 + e^-2|u|)/2).
double log_cosh(double u) {
  const double au = std::abs(u);
  return au + std::log1p(std::exp(-2.0 * au)) - std::numbers::ln2;
}

// Power mean for a raw finite exponent; r == 0 means the geometric mean.
// For x, y > 0 everything runs in the log domain,
//   M_r(x, y) = exp((ln x + ln y)/2 + ln(cosh(r (ln x - ln y)/2))/r),
// which neither overflows nor loses the mean when x^r under- or overflows
// (r can be as extreme as +-512 here).
double mean_raw(double r, double x, double y) {
  if (x == y) return x;
  if (r == 0.0) return std::sqrt(x * y);
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo == 0.0) {
    if (r < 0.0) return 0.0;  // harmonic-type limit
    // ((0 + hi^r)/2)^(1/r) = hi * 2^(-1/r)
    return hi * std::exp(-std::numbers::ln2 / r);
  }
  const double mid = 0.5 * (std::log(x) + std::log(y));
  const double half_gap = 0.5 * (std::log(hi) - std::log(lo));
  double m = std::exp(mid + log_cosh(r * half_gap) / r);
  return std::clamp(m, lo, hi);
}

double mean_value(const MeanParam& r, double x, double y) {
  if (x == y) return x;
  switch (r.kind()) {
    case MeanParam::Kind::Min:
      return std::min(x, y);
    case MeanParam::Kind::Max:
      return std::max(x, y);
    case MeanParam::Kind::Geo:
      return std::clamp(std::sqrt(x * y), std::min(x, y), std::max(x, y));
    case MeanParam::Kind::Numeric:
      return mean_raw(r.numeric(), x, y);
  }
  throw std::logic_error("MeanParam: bad kind");
}

}  // namespace

MeanParam MeanParam::from_numeric(double r) {
  if (std::isnan(r)) throw std::invalid_argument("MeanParam: NaN exponent");
  if (r == 0.0) return geo();
  if (std::isinf(r)) return r > 0.0 ? max() : min();
  return MeanParam(Kind::Numeric, r);
}

UnitValue power_mean(const MeanParam& r, UnitValue x, UnitValue y) {
  return UnitValue::clamped(mean_value(r, x.value(), y.value()));
}

bool mean_analogy_check(const MeanParam& r, const Quadruple& q, Tolerance tol) {
  const double lhs = mean_value(r, q.a.value(), q.d.value());
  const double rhs = mean_value(r, q.b.value(), q.c.value());
  return std::abs(lhs - rhs) <= tol.abs_tol;
}

SolveRResult solve_r(const Quadruple& q, const SolverOptions& opts) {
  const double a = q.a.value(), b = q.b.value(), c = q.c.value(), d = q.d.value();

  // Short-circuit the two closed-form exponents before searching.
  if (std::abs((a + d) - (b + c)) <= opts.tol) {
    const MeanParam one = MeanParam::from_numeric(1.0);
    return SolveRResult{one, std::abs(mean_value(one, a, d) - mean_value(one, b, c)), true};
  }
  if (std::abs(a * d - b * c) <= opts.tol) {
    return SolveRResult{MeanParam::geo(),
                        std::abs(std::sqrt(a * d) - std::sqrt(b * c)), true};
  }

  const auto h = [&](double r) { return mean_raw(r, a, d) - mean_raw(r, b, c); };

  // Sign scan over -512..512 (powers of two plus zero), then bisection.
  std::vector<double> grid;
  for (double r = 512.0; r >= 1.0; r /= 2.0) grid.push_back(-r);
  grid.push_back(0.0);
  for (double r = 1.0; r <= 512.0; r *= 2.0) grid.push_back(r);

  double lo = 0.0, hi = 0.0;
  bool found = false;
  double prev_r = grid[0];
  double prev_h = h(prev_r);
  for (size_t i = 1; i < grid.size() && !found; ++i) {
    const double cur_r = grid[i];
    const double cur_h = h(cur_r);
    if ((prev_h <= 0.0 && cur_h >= 0.0) || (prev_h >= 0.0 && cur_h <= 0.0)) {
      lo = prev_r;
      hi = cur_r;
      found = true;
    }
    prev_r = cur_r;
    prev_h = cur_h;
  }

  if (!found) {
    // Premise a <= b <= c <= d violated or the root sits at +-inf; report
    // the closer extreme, flagged.
    const double res_min = std::abs(std::min(a, d) - std::min(b, c));
    const double res_max = std::abs(std::max(a, d) - std::max(b, c));
    if (res_min <= res_max) return SolveRResult{MeanParam::min(), res_min, false};
    return SolveRResult{MeanParam::max(), res_max, false};
  }

  double h_lo = h(lo);
  if (h_lo == 0.0) {
    hi = lo;
  } else if (h(hi) == 0.0) {
    lo = hi;
  } else {
    for (int it = 0; it < opts.max_refine && (hi - lo) > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double h_mid = h(mid);
      if (h_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((h_lo < 0.0) == (h_mid < 0.0)) {
        lo = mid;
        h_lo = h_mid;
      } else {
        hi = mid;
      }
    }
  }

  const double root = 0.5 * (lo + hi);
  const MeanParam r = MeanParam::from_numeric(root);
  return SolveRResult{r, std::abs(mean_value(r, a, d) - mean_value(r, b, c)), true};
}

}  // namespace anaprop
