#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anaprop/boolean_proportion.hpp"
#include "anaprop/frank.hpp"
#include "anaprop/graded_proportion.hpp"
#include "anaprop/means.hpp"
#include "anaprop/solver.hpp"
#include "anaprop/tnorm.hpp"

namespace {

using namespace anaprop;

// 12 significant digits; fixed notation for |v| in [1e-4, 1e6), scientific
// otherwise. Zero prints as "0".
std::string fmt_num(double v) {
  if (v == 0.0) return "0";
  char sci[40];
  std::snprintf(sci, sizeof sci, "%.11e", v);
  const double av = std::abs(v);
  if (av >= 1e-4 && av < 1e6) {
    const char* ep = std::strchr(sci, 'e');
    int decimals = 11 - std::atoi(ep + 1);
    if (decimals < 0) decimals = 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
  }
  return sci;
}

double parse_double(const std::string& s, const char* what) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

std::vector<double> parse_csv_list(const std::string& s, size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item, what));
  if (out.size() != count)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) +
                                " comma-separated values");
  return out;
}

Quadruple parse_quad(const std::string& s) {
  const std::vector<double> v = parse_csv_list(s, 4, "quad");
  return Quadruple{UnitValue(v[0]), UnitValue(v[1]), UnitValue(v[2]), UnitValue(v[3])};
}

FrankParam parse_frank_p(const std::string& s) {
  if (s == "inf") return FrankParam::inf();
  return frank_regime(parse_double(s, "frank parameter"));
}

TNormKind parse_tnorm(const std::string& s) {
  if (s == "min") return TNormKind::min();
  if (s == "product") return TNormKind::product();
  if (s == "lukasiewicz") return TNormKind::lukasiewicz();
  if (s.rfind("frank:", 0) == 0) return TNormKind::frank(parse_frank_p(s.substr(6)));
  throw std::invalid_argument("bad tnorm: '" + s + "' (min|product|lukasiewicz|frank:P)");
}

MeanParam parse_mean_r(const std::string& s) {
  if (s == "geo") return MeanParam::geo();
  if (s == "min") return MeanParam::min();
  if (s == "max") return MeanParam::max();
  if (s == "inf") return MeanParam::max();
  if (s == "-inf") return MeanParam::min();
  return MeanParam::from_numeric(parse_double(s, "mean exponent"));
}

std::string fmt_frank(const FrankParam& p) {
  switch (p.kind()) {
    case FrankParam::Kind::Zero:
      return "0";
    case FrankParam::Kind::One:
      return "1";
    case FrankParam::Kind::Inf:
      return "inf";
    case FrankParam::Kind::Generic:
      return fmt_num(p.numeric());
  }
  return "?";
}

std::string fmt_mean(const MeanParam& r) {
  switch (r.kind()) {
    case MeanParam::Kind::Geo:
      return "geo";
    case MeanParam::Kind::Min:
      return "min";
    case MeanParam::Kind::Max:
      return "max";
    case MeanParam::Kind::Numeric:
      return fmt_num(r.numeric());
  }
  return "?";
}

struct RangeSpec {
  double lo;
  double hi;
};

RangeSpec parse_range(const std::string& s) {
  const size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad range: '" + s + "' (expected lo:hi)");
  return RangeSpec{parse_double(s.substr(0, colon), "range lo"),
                   parse_double(s.substr(colon + 1), "range hi")};
}

int run_truth_table() {
  std::cout << "a,b,c,d,ap\n";
  for (const auto& [q, truth] : ap_truth_table()) {
    std::cout << (q.a ? 1 : 0) << ',' << (q.b ? 1 : 0) << ',' << (q.c ? 1 : 0) << ','
              << (q.d ? 1 : 0) << ',' << (truth ? 1 : 0) << '\n';
  }
  return 0;
}

int run_postulates() {
  const PostulateReport report = verify_boolean_postulates();
  for (const LawCheck& law : report.laws)
    std::cout << law.law << ' ' << (law.pass() ? "PASS" : "FAIL") << '\n';
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangular-norm algebra and analogical proportions over [0,1]"};
  app.require_subcommand(1);

  std::string tnorm_spec, quad_spec, fixed_spec, range_spec, mean_spec, p_spec, out_path;
  double tol = 1e-9;
  int steps = 0;
  int grid = 2048;

  CLI::App* cmd_table = app.add_subcommand("truth-table", "16-row Boolean proportion table as CSV");

  CLI::App* cmd_check = app.add_subcommand("check", "t-norm proportion check for a quadruple");
  cmd_check->add_option("--tnorm", tnorm_spec, "min|product|lukasiewicz|frank:P")->required();
  cmd_check->add_option("--quad", quad_spec, "a,b,c,d in [0,1]")->required();
  cmd_check->add_option("--tol", tol, "absolute tolerance");

  CLI::App* cmd_mean = app.add_subcommand("check-mean", "power-mean proportion check");
  cmd_mean->add_option("--r", mean_spec, "exponent R, or geo|min|max")->required();
  cmd_mean->add_option("--quad", quad_spec, "a,b,c,d in [0,1]")->required();
  cmd_mean->add_option("--tol", tol, "absolute tolerance");

  CLI::App* cmd_degree = app.add_subcommand("degree", "graded proportion degrees");
  cmd_degree->add_option("--quad", quad_spec, "a,b,c,d in [0,1]")->required();

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "residual curve over the fourth element");
  cmd_sweep->add_option("--p", p_spec, "Frank parameter (decimal, 0, 1 or inf)")->required();
  cmd_sweep->add_option("--fixed", fixed_spec, "a,b,c in [0,1]")->required();
  cmd_sweep->add_option("--range", range_spec, "lo:hi")->required();
  cmd_sweep->add_option("--steps", steps, "number of intervals")->required();
  cmd_sweep->add_option("--out", out_path, "write CSV to a file instead of stdout");

  CLI::App* cmd_minimize = app.add_subcommand("minimize", "minimize the residual curve");
  cmd_minimize->add_option("--p", p_spec, "Frank parameter (decimal, 0, 1 or inf)")->required();
  cmd_minimize->add_option("--fixed", fixed_spec, "a,b,c in [0,1]")->required();
  cmd_minimize->add_option("--range", range_spec, "lo:hi")->required();
  cmd_minimize->add_option("--tol", tol, "root tolerance");

  CLI::App* cmd_solvep = app.add_subcommand("solve-p", "search the Frank parameter");
  cmd_solvep->add_option("--quad", quad_spec, "a,b,c,d in [0,1]")->required();
  cmd_solvep->add_option("--tol", tol, "solution tolerance");
  cmd_solvep->add_option("--grid", grid, "grid points over [1e-6,1e6]");

  CLI::App* cmd_solver = app.add_subcommand("solve-r", "solve for the power-mean exponent");
  cmd_solver->add_option("--quad", quad_spec, "a,b,c,d in [0,1]")->required();
  cmd_solver->add_option("--tol", tol, "residual tolerance");

  CLI::App* cmd_post = app.add_subcommand("postulates", "exhaustive Boolean postulate report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*cmd_table) return run_truth_table();
    if (*cmd_post) return run_postulates();

    if (*cmd_check) {
      const ProportionVerdict v =
          analogy_check(parse_tnorm(tnorm_spec), parse_quad(quad_spec), Tolerance(tol));
      std::cout << (v.holds ? "holds" : "fails") << " t_residual=" << fmt_num(v.t_residual)
                << " s_residual=" << fmt_num(v.s_residual) << '\n';
      return v.holds ? 0 : 1;
    }

    if (*cmd_mean) {
      const Quadruple q = parse_quad(quad_spec);
      const MeanParam r = parse_mean_r(mean_spec);
      const double lhs = power_mean(r, q.a, q.d).value();
      const double rhs = power_mean(r, q.b, q.c).value();
      const double residual = std::abs(lhs - rhs);
      const bool holds = residual <= Tolerance(tol).abs_tol;
      std::cout << (holds ? "holds" : "fails") << " residual=" << fmt_num(residual) << '\n';
      return holds ? 0 : 1;
    }

    if (*cmd_degree) {
      const Quadruple q = parse_quad(quad_spec);
      std::cout << "dissim=" << fmt_num(mv_degree_dissim(q).value()) << '\n'
                << "similarity=" << fmt_num(mv_degree_similarity(q).value()) << '\n';
      return 0;
    }

    if (*cmd_sweep) {
      const std::vector<double> f = parse_csv_list(fixed_spec, 3, "fixed");
      const RangeSpec range = parse_range(range_spec);
      const DiffCurve curve =
          sweep_d(parse_frank_p(p_spec), UnitValue(f[0]), UnitValue(f[1]), UnitValue(f[2]),
                  UnitValue(range.lo), UnitValue(range.hi), steps);
      std::ostringstream csv;
      csv << "x,diff\n";
      for (const CurveSample& s : curve.samples)
        csv << fmt_num(s.x) << ',' << fmt_num(s.diff) << '\n';
      if (out_path.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        out << csv.str();
      }
      return 0;
    }

    if (*cmd_minimize) {
      const std::vector<double> f = parse_csv_list(fixed_spec, 3, "fixed");
      const RangeSpec range = parse_range(range_spec);
      SolverOptions opts;
      opts.tol = Tolerance(tol).abs_tol;
      const MinimizeResult res =
          minimize_over_d(parse_frank_p(p_spec), UnitValue(f[0]), UnitValue(f[1]),
                          UnitValue(f[2]), UnitValue(range.lo), UnitValue(range.hi), opts);
      std::cout << "d_star=" << fmt_num(res.d_star.value())
                << " min_diff=" << fmt_num(res.min_diff)
                << " root=" << (res.root ? "yes" : "no") << '\n';
      return res.root ? 0 : 1;
    }

    if (*cmd_solvep) {
      SolverOptions opts;
      opts.tol = Tolerance(tol).abs_tol;
      opts.grid_steps = grid;
      const PSearchResult res = solve_p(parse_quad(quad_spec), opts);
      std::cout << "best_p=" << fmt_frank(res.best_p)
                << " best_residual=" << fmt_num(res.best_residual) << " solutions=";
      if (res.solutions.empty()) {
        std::cout << "none";
      } else {
        for (size_t i = 0; i < res.solutions.size(); ++i)
          std::cout << (i ? "," : "") << fmt_frank(res.solutions[i]);
      }
      std::cout << '\n';
      return res.solutions.empty() ? 1 : 0;
    }

    if (*cmd_solver) {
      SolverOptions opts;
      opts.tol = Tolerance(tol).abs_tol;
      const SolveRResult res = solve_r(parse_quad(quad_spec), opts);
      std::cout << "r=" << fmt_mean(res.r) << " residual=" << fmt_num(res.residual) << '\n';
      return res.residual <= opts.tol ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
