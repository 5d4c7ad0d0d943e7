#ifndef ANAPROP_SOLVER_HPP
#define ANAPROP_SOLVER_HPP

#include <vector>

#include "anaprop/frank.hpp"
#include "anaprop/graded_proportion.hpp"
#include "anaprop/tnorm.hpp"

namespace anaprop {

struct SolverOptions {
  double tol = 1e-9;     // residual threshold for declaring a root/solution
  int grid_steps = 2048;  // coarse scan resolution
  int max_refine = 200;   // golden-section / bisection iteration cap
};

struct CurveSample {
  double x;
  double diff;
};

/// Sampled residual curve x -> |T(a,x) - T(b,c)| + |S(a,x) - S(b,c)| for a
/// Frank parameter and a fixed triple (a, b, c).
struct DiffCurve {
  FrankParam p;
  UnitValue a;
  UnitValue b;
  UnitValue c;
  std::vector<CurveSample> samples;  // ordered by strictly increasing x
};

struct MinimizeResult {
  UnitValue d_star;
  double min_diff;
  bool root;  // min_diff <= tol
};

/// Parameters found by the Frank-parameter search. best_residual is the
/// minimum over everything scanned; solutions lists scanned parameters with
/// residual <= tol (possibly empty, possibly several).
struct PSearchResult {
  FrankParam best_p;
  double best_residual;
  std::vector<FrankParam> solutions;
};

/// |T(a,d) - T(b,c)| + |S(a,d) - S(b,c)|; zero exactly when the proportion
/// holds with zero tolerance.
double diff_residual(const TNormKind& kind, const Quadruple& q);

/// Samples the residual curve at steps+1 equally spaced points of [lo, hi],
/// endpoints included. The parallel entry point and the serial reference
/// produce bit-identical curves: every sample is an independent evaluation
/// written to its own slot.
DiffCurve sweep_d(const FrankParam& p, UnitValue a, UnitValue b, UnitValue c, UnitValue lo,
                  UnitValue hi, int steps);
DiffCurve sweep_d_serial(const FrankParam& p, UnitValue a, UnitValue b, UnitValue c,
                         UnitValue lo, UnitValue hi, int steps);

/// Coarse grid scan followed by golden-section refinement of the best
/// bracket. Reports the minimizer, the minimum, and whether the minimum
/// clears the root tolerance.
MinimizeResult minimize_over_d(const FrankParam& p, UnitValue a, UnitValue b, UnitValue c,
                               UnitValue lo, UnitValue hi,
                               const SolverOptions& opts = SolverOptions());
MinimizeResult minimize_over_d_serial(const FrankParam& p, UnitValue a, UnitValue b,
                                      UnitValue c, UnitValue lo, UnitValue hi,
                                      const SolverOptions& opts = SolverOptions());

/// Searches the Frank parameter: the three sentinels plus a logarithmic grid
/// over [1e-6, 1e6], each local minimum refined by golden section in ln p.
/// Runs of consecutive sub-tolerance grid points collapse to one reported
/// solution.
PSearchResult solve_p(const Quadruple& q, const SolverOptions& opts = SolverOptions());
PSearchResult solve_p_serial(const Quadruple& q, const SolverOptions& opts = SolverOptions());

}  // namespace anaprop

#endif  // ANAPROP_SOLVER_HPP
