#include "anaprop/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

namespace anaprop {

namespace {

void check_options(const SolverOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("SolverOptions: tol must be > 0");
  if (opts.grid_steps < 2) throw std::invalid_argument("SolverOptions: grid_steps must be >= 2");
  if (opts.max_refine < 0) throw std::invalid_argument("SolverOptions: max_refine must be >= 0");
}

// Evaluates fn(i) for i in [0, n), each result independent of the others.
// The OpenMP path writes the same values to the same slots as the serial
// one, so curves and argmins do not depend on the thread count.
template <class F>
void map_indices(std::int64_t n, bool parallel, const F& fn) {
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
#endif
  }
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

// Residual of the proportion (a, x) vs the fixed right side, for one Frank
// parameter. The right-side values are precomputed by the callers.
struct FrankDiff {
  FrankParam p;
  UnitValue a;
  double t_ref;
  double s_ref;

  FrankDiff(const FrankParam& param, UnitValue a_, UnitValue b, UnitValue c)
      : p(param),
        a(a_),
        t_ref(frank_tnorm(param, b, c).value()),
        s_ref(frank_tconorm(param, b, c).value()) {}

  double operator()(double x) const {
    const UnitValue xv = UnitValue::clamped(x);
    return std::abs(frank_tnorm(p, a, xv).value() - t_ref) +
           std::abs(frank_tconorm(p, a, xv).value() - s_ref);
  }
};

struct BestPoint {
  double x = 0.0;
  double f = std::numeric_limits<double>::infinity();

  void offer(double px, double pf) {
    if (pf < f) {
      f = pf;
      x = px;
    }
  }
};

// Golden-section minimization on [lo, hi]; derivative-free on purpose, the
// residual curves have a kink where an absolute value changes sign. Returns
// the best point actually evaluated.
BestPoint golden_min(const std::function<double(double)>& f, double lo, double hi,
                     int max_iter) {
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr double kWidthEps = 1e-13;
  BestPoint best;
  best.offer(lo, f(lo));
  best.offer(hi, f(hi));
  double c = hi - (hi - lo) * kInvPhi;
  double d = lo + (hi - lo) * kInvPhi;
  double fc = f(c);
  double fd = f(d);
  best.offer(c, fc);
  best.offer(d, fd);
  for (int it = 0; it < max_iter && (hi - lo) > kWidthEps; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * kInvPhi;
      fc = f(c);
      best.offer(c, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * kInvPhi;
      fd = f(d);
      best.offer(d, fd);
    }
  }
  return best;
}

double sample_point(double lo, double hi, std::int64_t i, std::int64_t steps) {
  if (i == 0) return lo;
  if (i == steps) return hi;
  return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(steps));
}

DiffCurve sweep_impl(const FrankParam& p, UnitValue a, UnitValue b, UnitValue c, UnitValue lo,
                     UnitValue hi, int steps, bool parallel) {
  if (!(lo < hi)) throw InvalidRangeError("sweep_d: lo must be < hi");
  if (steps < 2) throw InvalidRangeError("sweep_d: steps must be >= 2");
  const FrankDiff diff(p, a, b, c);
  DiffCurve curve{p, a, b, c, std::vector<CurveSample>(static_cast<size_t>(steps) + 1)};
  CurveSample* out = curve.samples.data();
  const double x0 = lo.value();
  const double x1 = hi.value();
  map_indices(steps + 1, parallel, [&](std::int64_t i) {
    const double x = sample_point(x0, x1, i, steps);
    out[i] = CurveSample{x, diff(x)};
  });
  return curve;
}

MinimizeResult minimize_impl(const FrankParam& p, UnitValue a, UnitValue b, UnitValue c,
                             UnitValue lo, UnitValue hi, const SolverOptions& opts,
                             bool parallel) {
  if (!(lo < hi)) throw InvalidRangeError("minimize_over_d: lo must be < hi");
  check_options(opts);
  const FrankDiff diff(p, a, b, c);
  const std::int64_t n = opts.grid_steps;
  const double x0 = lo.value();
  const double x1 = hi.value();

  std::vector<double> vals(static_cast<size_t>(n) + 1);
  map_indices(n + 1, parallel, [&](std::int64_t i) {
    vals[i] = diff(sample_point(x0, x1, i, n));
  });

  std::int64_t arg = 0;
  for (std::int64_t i = 1; i <= n; ++i)
    if (vals[i] < vals[arg]) arg = i;

  BestPoint best;
  best.offer(sample_point(x0, x1, arg, n), vals[arg]);
  const double blo = sample_point(x0, x1, std::max<std::int64_t>(0, arg - 1), n);
  const double bhi = sample_point(x0, x1, std::min<std::int64_t>(n, arg + 1), n);
  const BestPoint refined = golden_min([&](double x) { return diff(x); }, blo, bhi,
                                       opts.max_refine);
  best.offer(refined.x, refined.f);

  return MinimizeResult{UnitValue::clamped(best.x), best.f, best.f <= opts.tol};
}

double frank_quad_residual(const FrankParam& p, const Quadruple& q) {
  return std::abs(frank_tnorm(p, q.a, q.d).value() - frank_tnorm(p, q.b, q.c).value()) +
         std::abs(frank_tconorm(p, q.a, q.d).value() - frank_tconorm(p, q.b, q.c).value());
}

struct PCandidate {
  FrankParam p;
  double residual;
};

// Orders candidates for reporting: 0 first, finite parameters ascending,
// +inf last.
bool candidate_less(const PCandidate& lhs, const PCandidate& rhs) {
  return lhs.p.numeric() < rhs.p.numeric();
}

PSearchResult solve_p_impl(const Quadruple& q, const SolverOptions& opts, bool parallel) {
  check_options(opts);
  constexpr double kLogLo = -13.815510557964274;  // ln 1e-6
  constexpr double kLogHi = 13.815510557964274;   // ln 1e6

  const auto residual_at = [&](double u) {
    return frank_quad_residual(FrankParam::from_numeric(std::exp(u)), q);
  };

  const std::int64_t n = opts.grid_steps;
  std::vector<double> vals(static_cast<size_t>(n));
  map_indices(n, parallel, [&](std::int64_t i) {
    vals[i] = residual_at(sample_point(kLogLo, kLogHi, i, n - 1));
  });

  // Local minima of the grid, with plateaus (runs of consecutive minima)
  // collapsed to their best index; ties keep the smallest index.
  std::vector<std::int64_t> reps;
  std::int64_t i = 0;
  while (i < n) {
    const bool is_min = (i == 0 || vals[i] <= vals[i - 1]) &&
                        (i == n - 1 || vals[i] <= vals[i + 1]);
    if (!is_min) {
      ++i;
      continue;
    }
    std::int64_t run_end = i;
    std::int64_t best = i;
    while (run_end + 1 < n) {
      const std::int64_t j = run_end + 1;
      const bool j_min = vals[j] <= vals[j - 1] && (j == n - 1 || vals[j] <= vals[j + 1]);
      if (!j_min) break;
      run_end = j;
      if (vals[j] < vals[best]) best = j;
    }
    reps.push_back(best);
    i = run_end + 1;
  }

  std::vector<PCandidate> candidates;
  candidates.push_back({FrankParam::zero(), frank_quad_residual(FrankParam::zero(), q)});
  candidates.push_back({FrankParam::one(), frank_quad_residual(FrankParam::one(), q)});
  candidates.push_back({FrankParam::inf(), frank_quad_residual(FrankParam::inf(), q)});

  for (std::int64_t rep : reps) {
    const double ulo = sample_point(kLogLo, kLogHi, std::max<std::int64_t>(0, rep - 1), n - 1);
    const double uhi =
        sample_point(kLogLo, kLogHi, std::min<std::int64_t>(n - 1, rep + 1), n - 1);
    BestPoint best;
    best.offer(sample_point(kLogLo, kLogHi, rep, n - 1), vals[rep]);
    const BestPoint refined = golden_min(residual_at, ulo, uhi, opts.max_refine);
    best.offer(refined.x, refined.f);
    const FrankParam p = FrankParam::from_numeric(std::exp(best.x));
    bool duplicate = false;
    for (const PCandidate& cand : candidates)
      if (cand.p == p) duplicate = true;
    if (!duplicate) candidates.push_back({p, best.f});
  }

  std::stable_sort(candidates.begin(), candidates.end(), candidate_less);

  PSearchResult result{FrankParam::zero(), std::numeric_limits<double>::infinity(), {}};
  for (const PCandidate& cand : candidates) {
    if (cand.residual < result.best_residual) {
      result.best_residual = cand.residual;
      result.best_p = cand.p;
    }
    if (cand.residual <= opts.tol) result.solutions.push_back(cand.p);
  }
  return result;
}

}  // namespace

double diff_residual(const TNormKind& kind, const Quadruple& q) {
  return std::abs(tnorm_eval(kind, q.a, q.d).value() - tnorm_eval(kind, q.b, q.c).value()) +
         std::abs(tconorm_eval(kind, q.a, q.d).value() -
                  tconorm_eval(kind, q.b, q.c).value());
}

DiffCurve sweep_d(const FrankParam& p, UnitValue a, UnitValue b, UnitValue c, UnitValue lo,
                  UnitValue hi, int steps) {
  return sweep_impl(p, a, b, c, lo, hi, steps, true);
}

DiffCurve sweep_d_serial(const FrankParam& p, UnitValue a, UnitValue b, UnitValue c,
                         UnitValue lo, UnitValue hi, int steps) {
  return sweep_impl(p, a, b, c, lo, hi, steps, false);
}

MinimizeResult minimize_over_d(const FrankParam& p, UnitValue a, UnitValue b, UnitValue c,
                               UnitValue lo, UnitValue hi, const SolverOptions& opts) {
  return minimize_impl(p, a, b, c, lo, hi, opts, true);
}

MinimizeResult minimize_over_d_serial(const FrankParam& p, UnitValue a, UnitValue b,
                                      UnitValue c, UnitValue lo, UnitValue hi,
                                      const SolverOptions& opts) {
  return minimize_impl(p, a, b, c, lo, hi, opts, false);
}

PSearchResult solve_p(const Quadruple& q, const SolverOptions& opts) {
  return solve_p_impl(q, opts, true);
}

PSearchResult solve_p_serial(const Quadruple& q, const SolverOptions& opts) {
  return solve_p_impl(q, opts, false);
}

}  // namespace anaprop
