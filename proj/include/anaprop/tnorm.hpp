#ifndef ANAPROP_TNORM_HPP
#define ANAPROP_TNORM_HPP

#include <vector>

#include "anaprop/errors.hpp"
#include "anaprop/frank.hpp"
#include "anaprop/unit_value.hpp"

namespace anaprop {

struct OrdinalSegment;

enum class NormClass { Strict, Nilpotent, NonArchimedean };

/// Tagged choice of a triangular norm: one of the three basic norms, a
/// member of the Frank family, or an ordinal sum of Archimedean pieces.
class TNormKind {
 public:
  enum class Tag { Min, Product, Lukasiewicz, Frank, OrdinalSum };

  static TNormKind min();
  static TNormKind product();
  static TNormKind lukasiewicz();
  static TNormKind frank(FrankParam p);

  /// Validates the segment list: each lo < hi, segments sorted and pairwise
  /// non-overlapping (shared endpoints allowed), every inner norm
  /// Archimedean. Throws InvalidSegmentsError otherwise.
  static TNormKind ordinal_sum(std::vector<OrdinalSegment> segments);

  TNormKind(const TNormKind&);
  TNormKind(TNormKind&&) noexcept;
  TNormKind& operator=(const TNormKind&);
  TNormKind& operator=(TNormKind&&) noexcept;
  ~TNormKind();

  Tag tag() const { return tag_; }
  const FrankParam& frank_param() const;              // Tag::Frank only
  const std::vector<OrdinalSegment>& segments() const;  // Tag::OrdinalSum only

 private:
  TNormKind(Tag tag, FrankParam p, std::vector<OrdinalSegment> segments);

  Tag tag_;
  FrankParam frank_;
  std::vector<OrdinalSegment> segments_;
};

/// One piece of an ordinal sum: an Archimedean norm rescaled onto [lo, hi].
struct OrdinalSegment {
  UnitValue lo;
  UnitValue hi;
  TNormKind inner;
};

/// The standard strong negation n(a) = 1 - a.
UnitValue negation(UnitValue a);

/// T(a, b) by the kind's closed form.
UnitValue tnorm_eval(const TNormKind& kind, UnitValue a, UnitValue b);

/// Dual co-norm S(a, b) = 1 - T(1 - a, 1 - b).
UnitValue tconorm_eval(const TNormKind& kind, UnitValue a, UnitValue b);

/// Additive generator f(x). Throws NotArchimedeanError for minimum,
/// ordinal sums, and Frank p = 0.
GeneratorValue generator_eval(const TNormKind& kind, UnitValue x);

/// Pseudo-inverse of the additive generator.
UnitValue generator_pseudo_inverse(const TNormKind& kind, GeneratorValue y);

/// T(a, b) = f^(-1)(f(a) + f(b)); agrees with tnorm_eval on Archimedean
/// kinds and provides an independent evaluation route.
UnitValue eval_via_generator(const TNormKind& kind, UnitValue a, UnitValue b);

/// Ordinal-sum formula: rescaled inner norm when both arguments fall in the
/// same segment, minimum otherwise. Validates the segment list.
UnitValue ordinal_sum_eval(const std::vector<OrdinalSegment>& segments, UnitValue a,
                           UnitValue b);

NormClass classify(const TNormKind& kind);

}  // namespace anaprop

#endif  // ANAPROP_TNORM_HPP
