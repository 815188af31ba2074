#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "vfc/p1sheaf/transform.hpp"

using namespace vfc;
using namespace vfc::test;

namespace {

SkyscraperConstraint constraint(const Point& pt, Field f, std::vector<std::vector<long>> rows, int r) {
  Matrix m(f, rows.size(), static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < r; ++j) m.set(i, j, f.from_int(rows[i][j]));
  return {pt, m};
}

SkyscraperConstraint random_constraint(Rng& rng, Field f, int r) {
  const int q = static_cast<int>(rng.range(0, r));
  for (;;) {
    Matrix m(f, q, r);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < r; ++j) m.set(i, j, rng.scalar(f));
    if (rank(m) == static_cast<std::size_t>(q)) return {rng.point(f), m};
  }
}

}  // namespace

TEST_CASE("examples") {
  Field q;
  auto a = elementary_transform(FreeSum{{0, 0}}, constraint(Point::zero_of_s(q), q, {{1, 0}}, 2));
  CHECK(a.type == SplittingType::from({0, -1}));
  auto b = elementary_transform(FreeSum{{1, 1}}, constraint(Point::zero_of_t(q), q, {}, 2));
  CHECK(b.type == SplittingType::from({1, 1}));
  CHECK(b.transform == FreeSum{{1, 1}});
  Field f5 = Field::characteristic(5);
  for (int t0 = 0; t0 < 5; ++t0) {
    auto c = elementary_transform(FreeSum{{2}}, constraint(Point::make(f5.one(), f5.from_int(t0)), f5, {{3}}, 1));
    CHECK(c.type == SplittingType::from({1}));
  }
}

TEST_CASE("rank-deficient functional is refused") {
  Field q;
  CHECK(error_code_of([&] {
          elementary_transform(FreeSum{{0, 0}}, constraint(Point::zero_of_t(q), q, {{1, 1}, {2, 2}}, 2));
        }) == ErrorCode::InvalidArgument);
  CHECK(error_code_of([&] {
          elementary_transform(FreeSum{{0, 0, 0}}, constraint(Point::zero_of_t(q), q, {{1, 1}}, 2));
        }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("unit form") {
  Field f3 = Field::characteristic(3);
  CHECK(unit_form_at(Point::make(f3.one(), f3.from_int(2))) == BinaryForm::s(f3));
  CHECK(unit_form_at(Point::zero_of_s(f3)) == BinaryForm::t(f3));
}

TEST_CASE("degree law and cohomology of random transforms") {
  for (Field f : small_fields()) {
    Rng rng(300 + f.p());
    for (int i = 0; i < 500; ++i) {
      const int r = static_cast<int>(rng.range(1, 5));
      FreeSum e = random_sum(rng, r, -2, 3);
      SkyscraperConstraint c = random_constraint(rng, f, r);
      ElementaryTransform t = elementary_transform(e, c);

      CHECK(t.type.degree() == e.degree() - c.q());
      CHECK(t.type.rank() == r);
      CHECK(t.transform.degree() == e.degree() - c.q());
      CHECK(SplittingType::from(t.transform.twists) == t.type);

      // The image at the point lies in the kernel of the functional.
      if (c.q() > 0) CHECK((c.functional * t.inclusion.at_point(c.point)).is_zero());
      // det of the inclusion vanishes exactly to order q at the point.
      BinaryForm g = maximal_minor_gcd(t.inclusion, false);
      CHECK(g == BinaryForm::vanishing_at(c.point).pow(c.q()).monic());

      for (int m = -4; m <= 2; ++m) {
        auto h = t.cohomology(m);
        CHECK(h.h0 == t.type.h0(m));
        CHECK(h.h1 == t.type.h1(m));
      }
    }
  }
}
