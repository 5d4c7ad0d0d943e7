#include "anaprop/boolean_proportion.hpp"

namespace anaprop {

namespace {

std::string pattern(std::initializer_list<bool> bits) {
  std::string s;
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

bool ap(bool a, bool b, bool c, bool d) { return pia(BoolQuad{a, b, c, d}); }

}  // namespace

bool pia(const BoolQuad& q) {
  return ((q.a && q.d) == (q.b && q.c)) && ((q.a || q.d) == (q.b || q.c));
}

bool analogy_dissim(const BoolQuad& q) {
  return ((q.a && !q.b) == (q.c && !q.d)) && ((!q.a && q.b) == (!q.c && q.d));
}

std::vector<std::pair<BoolQuad, bool>> ap_truth_table() {
  std::vector<std::pair<BoolQuad, bool>> table;
  table.reserve(16);
  for (int i = 0; i < 16; ++i) {
    const BoolQuad q{(i & 8) != 0, (i & 4) != 0, (i & 2) != 0, (i & 1) != 0};
    table.emplace_back(q, pia(q));
  }
  return table;
}

PostulateReport verify_boolean_postulates() {
  PostulateReport report;

  LawCheck reflexivity{"reflexivity", {}};
  LawCheck sameness{"sameness", {}};
  for (int i = 0; i < 4; ++i) {
    const bool a = (i & 2) != 0;
    const bool b = (i & 1) != 0;
    if (!ap(a, b, a, b)) reflexivity.counterexamples.push_back(pattern({a, b}));
    if (!ap(a, a, b, b)) sameness.counterexamples.push_back(pattern({a, b}));
  }

  LawCheck symmetry{"symmetry", {}};
  LawCheck central{"central_permutation", {}};
  LawCheck external{"external_permutation", {}};
  LawCheck internal{"internal_reversal", {}};
  LawCheck complete{"complete_reversal", {}};
  for (int i = 0; i < 16; ++i) {
    const bool a = (i & 8) != 0, b = (i & 4) != 0, c = (i & 2) != 0, d = (i & 1) != 0;
    if (!ap(a, b, c, d)) continue;
    if (!ap(c, d, a, b)) symmetry.counterexamples.push_back(pattern({a, b, c, d}));
    if (!ap(a, c, b, d)) central.counterexamples.push_back(pattern({a, b, c, d}));
    if (!ap(d, b, c, a)) external.counterexamples.push_back(pattern({a, b, c, d}));
    if (!ap(b, a, d, c)) internal.counterexamples.push_back(pattern({a, b, c, d}));
    if (!ap(d, c, b, a)) complete.counterexamples.push_back(pattern({a, b, c, d}));
  }

  LawCheck transitivity{"transitivity", {}};
  for (int i = 0; i < 64; ++i) {
    const bool a = (i & 32) != 0, b = (i & 16) != 0, c = (i & 8) != 0;
    const bool d = (i & 4) != 0, e = (i & 2) != 0, f = (i & 1) != 0;
    if (ap(a, b, c, d) && ap(c, d, e, f) && !ap(a, b, e, f))
      transitivity.counterexamples.push_back(pattern({a, b, c, d, e, f}));
  }

  report.laws = {reflexivity,  symmetry, central,  sameness,
                 external,     internal, complete, transitivity};
  return report;
}

}  // namespace anaprop
