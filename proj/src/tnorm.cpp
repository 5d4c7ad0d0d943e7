#include "anaprop/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace anaprop {

namespace {

// Every Archimedean kind here is a member of the Frank family: product is
// p = 1 and Lukasiewicz is p = +inf, so the generator machinery lives in
// one place. Throws for kinds without a generator.
FrankParam archimedean_param(const TNormKind& kind) {
  switch (kind.tag()) {
    case TNormKind::Tag::Product:
      return FrankParam::one();
    case TNormKind::Tag::Lukasiewicz:
      return FrankParam::inf();
    case TNormKind::Tag::Frank:
      if (kind.frank_param().kind() == FrankParam::Kind::Zero)
        throw NotArchimedeanError("generator: Frank p = 0 is the minimum");
      return kind.frank_param();
    case TNormKind::Tag::Min:
      throw NotArchimedeanError("generator: minimum has no additive generator");
    case TNormKind::Tag::OrdinalSum:
      throw NotArchimedeanError("generator: ordinal sums have no additive generator");
  }
  throw std::logic_error("TNormKind: bad tag");
}

void validate_segments(const std::vector<OrdinalSegment>& segments) {
  double prev_hi = 0.0;
  bool first = true;
  for (const OrdinalSegment& seg : segments) {
    if (!(seg.lo < seg.hi))
      throw InvalidSegmentsError("ordinal sum: segment is degenerate (lo >= hi)");
    if (!first && seg.lo.value() < prev_hi)
      throw InvalidSegmentsError("ordinal sum: segments overlap or are unsorted");
    if (classify(seg.inner) == NormClass::NonArchimedean)
      throw InvalidSegmentsError("ordinal sum: inner norm must be Archimedean");
    prev_hi = seg.hi.value();
    first = false;
  }
}

}  // namespace

TNormKind::TNormKind(Tag tag, FrankParam p, std::vector<OrdinalSegment> segments)
    : tag_(tag), frank_(p), segments_(std::move(segments)) {}

TNormKind::TNormKind(const TNormKind&) = default;
TNormKind::TNormKind(TNormKind&&) noexcept = default;
TNormKind& TNormKind::operator=(const TNormKind&) = default;
TNormKind& TNormKind::operator=(TNormKind&&) noexcept = default;
TNormKind::~TNormKind() = default;

TNormKind TNormKind::min() { return TNormKind(Tag::Min, FrankParam::zero(), {}); }
TNormKind TNormKind::product() { return TNormKind(Tag::Product, FrankParam::one(), {}); }
TNormKind TNormKind::lukasiewicz() { return TNormKind(Tag::Lukasiewicz, FrankParam::inf(), {}); }
TNormKind TNormKind::frank(FrankParam p) { return TNormKind(Tag::Frank, p, {}); }

TNormKind TNormKind::ordinal_sum(std::vector<OrdinalSegment> segments) {
  validate_segments(segments);
  return TNormKind(Tag::OrdinalSum, FrankParam::zero(), std::move(segments));
}

const FrankParam& TNormKind::frank_param() const {
  if (tag_ != Tag::Frank) throw std::logic_error("TNormKind: not a Frank norm");
  return frank_;
}

const std::vector<OrdinalSegment>& TNormKind::segments() const {
  if (tag_ != Tag::OrdinalSum) throw std::logic_error("TNormKind: not an ordinal sum");
  return segments_;
}

UnitValue negation(UnitValue a) { return UnitValue(1.0 - a.value()); }

UnitValue tnorm_eval(const TNormKind& kind, UnitValue a, UnitValue b) {
  switch (kind.tag()) {
    case TNormKind::Tag::Min:
      return UnitValue(std::min(a.value(), b.value()));
    case TNormKind::Tag::Product:
      return UnitValue(a.value() * b.value());
    case TNormKind::Tag::Lukasiewicz:
      return UnitValue(std::max(0.0, a.value() + b.value() - 1.0));
    case TNormKind::Tag::Frank:
      return frank_tnorm(kind.frank_param(), a, b);
    case TNormKind::Tag::OrdinalSum:
      return ordinal_sum_eval(kind.segments(), a, b);
  }
  throw std::logic_error("TNormKind: bad tag");
}

UnitValue tconorm_eval(const TNormKind& kind, UnitValue a, UnitValue b) {
  const UnitValue t = tnorm_eval(kind, negation(a), negation(b));
  return UnitValue::clamped(1.0 - t.value());
}

GeneratorValue generator_eval(const TNormKind& kind, UnitValue x) {
  return frank_generator(archimedean_param(kind), x);
}

UnitValue generator_pseudo_inverse(const TNormKind& kind, GeneratorValue y) {
  return frank_pseudo_inverse(archimedean_param(kind), y);
}

UnitValue eval_via_generator(const TNormKind& kind, UnitValue a, UnitValue b) {
  const FrankParam p = archimedean_param(kind);
  const double sum = frank_generator(p, a).value + frank_generator(p, b).value;
  return frank_pseudo_inverse(p, GeneratorValue(sum));
}

UnitValue ordinal_sum_eval(const std::vector<OrdinalSegment>& segments, UnitValue a,
                           UnitValue b) {
  validate_segments(segments);
  const double x = a.value();
  const double y = b.value();
  for (const OrdinalSegment& seg : segments) {
    const double lo = seg.lo.value();
    const double hi = seg.hi.value();
    if (x >= lo && x <= hi && y >= lo && y <= hi) {
      const double w = hi - lo;
      const UnitValue inner = tnorm_eval(seg.inner, UnitValue::clamped((x - lo) / w),
                                         UnitValue::clamped((y - lo) / w));
      return UnitValue::clamped(lo + w * inner.value());
    }
  }
  return UnitValue(std::min(x, y));
}

NormClass classify(const TNormKind& kind) {
  switch (kind.tag()) {
    case TNormKind::Tag::Min:
      return NormClass::NonArchimedean;  // T(a, a) = a on the diagonal
    case TNormKind::Tag::Product:
      return NormClass::Strict;
    case TNormKind::Tag::Lukasiewicz:
      return NormClass::Nilpotent;
    case TNormKind::Tag::Frank:
      switch (kind.frank_param().kind()) {
        case FrankParam::Kind::Zero:
          return NormClass::NonArchimedean;
        case FrankParam::Kind::Inf:
          return NormClass::Nilpotent;
        default:
          return NormClass::Strict;  // f(0) = +inf for 0 < p < inf
      }
    case TNormKind::Tag::OrdinalSum:
      return NormClass::NonArchimedean;
  }
  throw std::logic_error("TNormKind: bad tag");
}

}  // namespace anaprop
