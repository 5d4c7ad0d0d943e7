#ifndef ANAPROP_BOOLEAN_PROPORTION_HPP
#define ANAPROP_BOOLEAN_PROPORTION_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace anaprop {

struct BoolQuad {
  bool a;
  bool b;
  bool c;
  bool d;
};

/// Piaget's connective: (a AND d <-> b AND c) AND (a OR d <-> b OR c).
bool pia(const BoolQuad& q);

/// The dissimilarity form of the analogical proportion:
/// (a AND NOT b <-> c AND NOT d) AND (NOT a AND b <-> NOT c AND d).
/// Equivalent to pia on all 16 valuations.
bool analogy_dissim(const BoolQuad& q);

/// All 16 valuations in lexicographic (a, b, c, d) order with their truth
/// value; exactly 6 rows are true.
std::vector<std::pair<BoolQuad, bool>> ap_truth_table();

/// Result of exhaustively checking one law; pass iff no counterexample.
struct LawCheck {
  std::string law;
  std::vector<std::string> counterexamples;  // bit patterns, e.g. "0110"

  bool pass() const { return counterexamples.empty(); }
};

struct PostulateReport {
  std::vector<LawCheck> laws;

  bool all_pass() const {
    for (const LawCheck& l : laws)
      if (!l.pass()) return false;
    return true;
  }
};

/// Checks reflexivity, symmetry, central permutation, sameness, external
/// permutation, internal reversal, complete reversal and transitivity over
/// the full Boolean domain of each law (at most 64 cases).
PostulateReport verify_boolean_postulates();

}  // namespace anaprop

#endif  // ANAPROP_BOOLEAN_PROPORTION_HPP
