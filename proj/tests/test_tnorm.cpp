#include <cmath>
#include <limits>
#include <vector>

#include "anaprop/tnorm.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace anaprop;
using testutil::unit_grid;

namespace {

UnitValue uv(double v) { return UnitValue(v); }

std::vector<TNormKind> property_kinds() {
  std::vector<TNormKind> kinds;
  kinds.push_back(TNormKind::min());
  kinds.push_back(TNormKind::product());
  kinds.push_back(TNormKind::lukasiewicz());
  for (double p : {0.1, 2.0, 10.0, 100.0}) kinds.push_back(TNormKind::frank(frank_regime(p)));
  kinds.push_back(TNormKind::frank(FrankParam::zero()));
  kinds.push_back(TNormKind::frank(FrankParam::inf()));
  kinds.push_back(TNormKind::ordinal_sum(
      {OrdinalSegment{uv(0.0), uv(0.5), TNormKind::lukasiewicz()},
       OrdinalSegment{uv(0.5), uv(0.9), TNormKind::product()}}));
  return kinds;
}

}  // namespace

TEST_SUITE_BEGIN("tnorm");

TEST_CASE("unit value rejects out-of-range construction") {
  CHECK_THROWS_AS(UnitValue(-0.001), std::domain_error);
  CHECK_THROWS_AS(UnitValue(1.001), std::domain_error);
  CHECK_THROWS_AS(UnitValue(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK(UnitValue::clamped(1.0 + 1e-16).value() == 1.0);
  CHECK(UnitValue::clamped(-1e-300).value() == 0.0);
}

TEST_CASE("negation") {
  CHECK(negation(uv(0.0)).value() == 1.0);
  CHECK(negation(uv(0.3)).value() == doctest::Approx(0.7));
  CHECK(negation(negation(uv(0.42))).value() == doctest::Approx(0.42).epsilon(1e-14));
  CHECK(negation(uv(0.2)).value() > negation(uv(0.8)).value());
}

TEST_CASE("tnorm_eval closed forms") {
  CHECK(tnorm_eval(TNormKind::min(), uv(0.3), uv(0.8)).value() == 0.3);
  CHECK(tnorm_eval(TNormKind::product(), uv(0.5), uv(0.4)).value() == doctest::Approx(0.2));
  CHECK(tnorm_eval(TNormKind::lukasiewicz(), uv(0.7), uv(0.5)).value() ==
        doctest::Approx(0.2));
}

TEST_CASE("tconorm_eval closed forms") {
  CHECK(tconorm_eval(TNormKind::min(), uv(0.3), uv(0.8)).value() == 0.8);
  CHECK(tconorm_eval(TNormKind::product(), uv(0.5), uv(0.4)).value() == doctest::Approx(0.7));
  CHECK(tconorm_eval(TNormKind::lukasiewicz(), uv(0.7), uv(0.5)).value() == 1.0);
}

TEST_CASE("generator values") {
  CHECK(generator_eval(TNormKind::lukasiewicz(), uv(0.25)).value == doctest::Approx(0.75));
  CHECK(generator_eval(TNormKind::product(), uv(1.0)).value == 0.0);
  CHECK(std::isinf(generator_eval(TNormKind::product(), uv(0.0)).value));

  SUBCASE("strictly decreasing, f(1) = 0") {
    for (const TNormKind& kind :
         {TNormKind::product(), TNormKind::lukasiewicz(), TNormKind::frank(frank_regime(2))}) {
      double prev = generator_eval(kind, uv(0.0)).value;
      for (double x : {0.1, 0.4, 0.7, 1.0}) {
        const double cur = generator_eval(kind, uv(x)).value;
        CHECK(cur < prev);
        prev = cur;
      }
      CHECK(generator_eval(kind, uv(1.0)).value == 0.0);
    }
  }
}

TEST_CASE("generator pseudo-inverse") {
  CHECK(generator_pseudo_inverse(TNormKind::lukasiewicz(), GeneratorValue(1.3)).value() == 0.0);
  CHECK(generator_pseudo_inverse(TNormKind::product(), GeneratorValue(0.0)).value() == 1.0);
  CHECK(generator_pseudo_inverse(TNormKind::lukasiewicz(), GeneratorValue(0.4)).value() ==
        doctest::Approx(0.6));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(generator_pseudo_inverse(TNormKind::product(), GeneratorValue(inf)).value() == 0.0);
  CHECK(generator_pseudo_inverse(TNormKind::frank(frank_regime(2)), GeneratorValue(inf))
            .value() == 0.0);
}

TEST_CASE("non-Archimedean kinds have no generator") {
  CHECK_THROWS_AS(generator_eval(TNormKind::min(), uv(0.5)), NotArchimedeanError);
  CHECK_THROWS_AS(generator_eval(TNormKind::frank(FrankParam::zero()), uv(0.5)),
                  NotArchimedeanError);
  const TNormKind sum =
      TNormKind::ordinal_sum({OrdinalSegment{uv(0.0), uv(0.5), TNormKind::lukasiewicz()}});
  CHECK_THROWS_AS(generator_eval(sum, uv(0.5)), NotArchimedeanError);
  CHECK_THROWS_AS(generator_pseudo_inverse(TNormKind::min(), GeneratorValue(0.5)),
                  NotArchimedeanError);
}

TEST_CASE("eval_via_generator matches closed forms") {
  CHECK(eval_via_generator(TNormKind::product(), uv(0.5), uv(0.4)).value() ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK(eval_via_generator(TNormKind::lukasiewicz(), uv(0.7), uv(0.5)).value() ==
        doctest::Approx(0.2).epsilon(1e-12));
  const double via = eval_via_generator(TNormKind::frank(frank_regime(2)), uv(0.5), uv(0.5)).value();
  CHECK(std::abs(via - testutil::oracle::kTnorm2Half) <= 1e-12);
}

TEST_CASE("generator round-trip across the family") {
  const std::vector<double> grid = unit_grid();
  std::vector<TNormKind> kinds = {TNormKind::product(), TNormKind::lukasiewicz()};
  for (double p : {0.1, 2.0, 10.0, 100.0}) kinds.push_back(TNormKind::frank(frank_regime(p)));
  for (const TNormKind& kind : kinds) {
    double worst = 0.0;
    for (double a : grid)
      for (double b : grid)
        worst = std::max(worst, std::abs(eval_via_generator(kind, uv(a), uv(b)).value() -
                                         tnorm_eval(kind, uv(a), uv(b)).value()));
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("ordinal sums") {
  const std::vector<OrdinalSegment> luk_half = {
      OrdinalSegment{uv(0.0), uv(0.5), TNormKind::lukasiewicz()}};
  CHECK(ordinal_sum_eval(luk_half, uv(0.2), uv(0.4)).value() == doctest::Approx(0.1));
  CHECK(ordinal_sum_eval(luk_half, uv(0.2), uv(0.7)).value() == doctest::Approx(0.2));
  CHECK(ordinal_sum_eval({}, uv(0.3), uv(0.9)).value() == 0.3);

  SUBCASE("identity and absorbing element still hold") {
    const TNormKind sum = TNormKind::ordinal_sum(luk_half);
    for (double a : unit_grid()) {
      CHECK(tnorm_eval(sum, uv(a), uv(1.0)).value() == doctest::Approx(a).epsilon(1e-14));
      CHECK(tnorm_eval(sum, uv(a), uv(0.0)).value() == 0.0);
    }
  }

  SUBCASE("invalid segment lists") {
    CHECK_THROWS_AS(TNormKind::ordinal_sum(
                        {OrdinalSegment{uv(0.4), uv(0.4), TNormKind::product()}}),
                    InvalidSegmentsError);
    CHECK_THROWS_AS(TNormKind::ordinal_sum(
                        {OrdinalSegment{uv(0.0), uv(0.6), TNormKind::product()},
                         OrdinalSegment{uv(0.5), uv(0.9), TNormKind::product()}}),
                    InvalidSegmentsError);
    CHECK_THROWS_AS(TNormKind::ordinal_sum(
                        {OrdinalSegment{uv(0.0), uv(0.5), TNormKind::min()}}),
                    InvalidSegmentsError);
    CHECK_THROWS_AS(ordinal_sum_eval({OrdinalSegment{uv(0.5), uv(0.2), TNormKind::product()}},
                                     uv(0.1), uv(0.2)),
                    InvalidSegmentsError);
  }

  SUBCASE("shared endpoints agree with min") {
    const TNormKind sum = TNormKind::ordinal_sum(
        {OrdinalSegment{uv(0.0), uv(0.5), TNormKind::lukasiewicz()},
         OrdinalSegment{uv(0.5), uv(1.0), TNormKind::product()}});
    CHECK(tnorm_eval(sum, uv(0.5), uv(0.5)).value() == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("classification") {
  CHECK(classify(TNormKind::product()) == NormClass::Strict);
  CHECK(classify(TNormKind::lukasiewicz()) == NormClass::Nilpotent);
  CHECK(classify(TNormKind::min()) == NormClass::NonArchimedean);
  CHECK(classify(TNormKind::frank(frank_regime(2))) == NormClass::Strict);
  CHECK(classify(TNormKind::frank(FrankParam::zero())) == NormClass::NonArchimedean);
  CHECK(classify(TNormKind::frank(FrankParam::one())) == NormClass::Strict);
  CHECK(classify(TNormKind::frank(FrankParam::inf())) == NormClass::Nilpotent);
  CHECK(classify(TNormKind::ordinal_sum(
            {OrdinalSegment{uv(0.0), uv(0.5), TNormKind::product()}})) ==
        NormClass::NonArchimedean);
}

TEST_CASE("commutativity is exact for every kind") {
  const std::vector<double> grid = unit_grid();
  for (const TNormKind& kind : property_kinds())
    for (double a : grid)
      for (double b : grid)
        CHECK(tnorm_eval(kind, uv(a), uv(b)).value() ==
              tnorm_eval(kind, uv(b), uv(a)).value());
}

TEST_CASE("associativity within 1e-12") {
  const std::vector<double> grid = unit_grid();
  std::vector<double> coarse;  // cubic cost, thin the grid
  for (size_t i = 0; i < grid.size(); i += 2) coarse.push_back(grid[i]);

  for (const TNormKind& kind : property_kinds()) {
    double worst = 0.0;
    for (double a : coarse)
      for (double b : coarse)
        for (double c : coarse) {
          const double left = tnorm_eval(kind, uv(a), tnorm_eval(kind, uv(b), uv(c))).value();
          const double right = tnorm_eval(kind, tnorm_eval(kind, uv(a), uv(b)), uv(c)).value();
          worst = std::max(worst, std::abs(left - right));
        }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("monotone in both arguments") {
  const std::vector<double> grid = unit_grid();
  for (const TNormKind& kind : property_kinds())
    for (size_t i = 0; i + 1 < grid.size(); ++i)
      for (size_t j = 0; j < grid.size(); ++j) {
        const double lo = std::min(grid[i], grid[i + 1]);
        const double hi = std::max(grid[i], grid[i + 1]);
        CHECK(tnorm_eval(kind, uv(lo), uv(grid[j])).value() <=
              tnorm_eval(kind, uv(hi), uv(grid[j])).value() + 1e-12);
      }
}

TEST_CASE("boundary conditions") {
  for (const TNormKind& kind : property_kinds())
    for (double a : unit_grid()) {
      CHECK(std::abs(tnorm_eval(kind, uv(a), uv(1.0)).value() - a) <= 1e-12);
      CHECK(tnorm_eval(kind, uv(a), uv(0.0)).value() <= 1e-12);
      CHECK(std::abs(tconorm_eval(kind, uv(a), uv(0.0)).value() - a) <= 1e-12);
      CHECK(tconorm_eval(kind, uv(a), uv(1.0)).value() >= 1.0 - 1e-12);
    }
}

TEST_CASE("min dominates, max is dominated, duality") {
  const std::vector<double> grid = unit_grid();
  for (const TNormKind& kind : property_kinds())
    for (double a : grid)
      for (double b : grid) {
        const double t = tnorm_eval(kind, uv(a), uv(b)).value();
        const double s = tconorm_eval(kind, uv(a), uv(b)).value();
        CHECK(t <= std::min(a, b) + 1e-12);
        CHECK(s >= std::max(a, b) - 1e-12);
        CHECK(std::abs(s - (1.0 - tnorm_eval(kind, uv(1.0 - a), uv(1.0 - b)).value())) <=
              1e-12);
      }
}

TEST_CASE("Lukasiewicz <= product <= min pointwise") {
  for (double a : unit_grid())
    for (double b : unit_grid()) {
      const double luk = std::max(0.0, a + b - 1.0);
      const double prod = a * b;
      CHECK(luk <= prod + 1e-15);
      CHECK(prod <= std::min(a, b) + 1e-15);
    }
}

TEST_SUITE_END();
