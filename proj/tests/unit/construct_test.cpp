#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "vfc/cigeom/json_io.hpp"
#include "vfc/cigeom/model.hpp"
#include "vfc/cigeom/verdict.hpp"
#include "vfc/construct/enumerate.hpp"
#include "vfc/construct/profile.hpp"

using namespace vfc;
using namespace vfc::test;

namespace {

// Number of 2-dimensional subspaces of F_p^(n+1).
long grassmannian_lines(long p, int n) {
  long num = 1, den = 1;
  for (int i = 0; i < 2; ++i) {
    long a = 1, b = 1;
    for (int j = 0; j < n + 1 - i; ++j) a *= p;
    for (int j = 0; j < i + 1; ++j) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("profile validation") {
  auto a = validate_profile(3, {2}, 1, 5);
  CHECK(a.e == 3);
  CHECK(a.tame);
  CHECK(a.m == std::vector<int>{0, 2, 3});
  auto b = validate_profile(4, {2}, 2, 2);
  CHECK_FALSE(b.tame);
  CHECK(b.e == 4);
  CHECK(error_code_of([] { validate_profile(3, {2}, 2, 2); }) == ErrorCode::InvalidArgument);
  CHECK(error_code_of([] { validate_profile(2, {2}, 1, 0); }) == ErrorCode::InvalidArgument);
  CHECK(error_code_of([] { validate_profile(4, {0}, 1, 0); }) == ErrorCode::InvalidArgument);
  CHECK(error_code_of([] { validate_profile(4, {1}, -1, 0); }) == ErrorCode::InvalidArgument);
  CHECK(validate_profile(5, {1, 2}, 2, 0).m == std::vector<int>{0, 1, 3, 5});
}

TEST_CASE("explicit line instances") {
  Field f5 = Field::characteristic(5);
  auto a = prop_line_instance(validate_profile(3, {2}, 1, 5), f5);
  REQUIRE(a.model.l() == 1);
  REQUIRE(a.model.k() == 1);
  CHECK(a.model.equations[0] == poly(f5, 3, "x2*x0 + x3*x1"));
  CHECK(a.model.boundaries[0] == poly(f5, 3, "x1"));
  CHECK(a.line == standard_line(f5, 3));
  CHECK(a.expected == SplittingType::from({1, 0}));

  auto b = prop_line_instance(validate_profile(4, {2}, 2, 5), f5);
  CHECK(b.model.equations[0] == poly(f5, 4, "x2*x0 + x3*x1"));
  CHECK(b.model.boundaries[0] == poly(f5, 4, "x1^2 + x4*x0"));
  CHECK(b.expected == SplittingType::from({1, 0, 0}));

  auto c = prop_line_instance(validate_profile(5, {2, 2}, 0, 5), f5);
  CHECK(c.model.k() == 0);
  CHECK_FALSE(c.expected.has_value());
  CHECK(c.model.equations[1] == poly(f5, 5, "x4*x0 + x5*x1"));
  CHECK(error_code_of([&] { prop_line_instance(validate_profile(4, {2, 2}, 0, 5), f5); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("cover examples") {
  Field q;
  auto line = standard_line(q, 3);
  CHECK(cover_compose(line, 1, Point::zero_of_t(q)) == line);
  auto c3 = cover_compose(line, 3, Point::zero_of_t(q));
  CHECK(c3.degree() == 3);
  CHECK(c3.component(0) == bform(q, "s^3"));
  CHECK(c3.component(1) == bform(q, "t^3"));
  auto contacts = boundary_contacts(c3, CIModel::make(q, 3, {poly(q, 3, "x0*x2 + x1*x3")}, {poly(q, 3, "x1")}));
  CHECK(contacts[0].order_at(Point::zero_of_t(q)) == 3);
  Field f3 = Field::characteristic(3);
  CHECK(error_code_of([&] { cover_compose(standard_line(f3, 3), 3, Point::zero_of_t(f3)); }) == ErrorCode::WildCover);
}

TEST_CASE("covers multiply contact orders at the ramification point") {
  for (Field f : small_fields()) {
    Rng rng(80 + f.p());
    for (int i = 0; i < 60; ++i) {
      LineModelSpec spec{static_cast<int>(rng.range(3, 5)), {2}, {static_cast<int>(rng.range(1, 2))}, 0};
      CertifiedLine cl = random_line_model(spec, f, rng.below(1u << 30));
      const int m = static_cast<int>(rng.range(2, 5));
      if (f.p() != 0 && m % static_cast<int>(f.p()) == 0) continue;
      // Ramify at a point where the boundary meets the line.
      BinaryForm g = cl.model.boundaries[0].substitute(cl.line);
      Point sigma = rng.point(f);
      for (const auto& [h, mult] : squarefree_factors(g))
        if (h.degree() == 1) sigma = Point::make(-h.coeff(1), h.coeff(0));
      RationalCurveMap phi = cover_compose(cl.line, m, sigma);
      CHECK(phi.degree() == m);
      CHECK(lies_on(phi, cl.model));
      CHECK(order_at(cl.model.boundaries[0].substitute(phi), sigma) == m * order_at(g, sigma));
      auto before = boundary_contacts(cl.line, cl.model)[0];
      auto after = boundary_contacts(phi, cl.model)[0];
      CHECK(after.order_at(sigma) == m * before.order_at(sigma));
      CHECK(after.total == m * before.total);
    }
  }
}

TEST_CASE("random models") {
  auto prof = validate_profile(3, {2}, 1, 2);
  Field f2 = Field::characteristic(2);
  CIModel a = random_model(prof, f2, 7);
  CIModel b = random_model(prof, f2, 7);
  CHECK(a.equations == b.equations);
  CHECK(a.boundaries == b.boundaries);
  CIModel pinned = model_from_json(json::parse(read_file(golden("random_model_f2_seed7.json"))));
  CHECK(a.equations == pinned.equations);
  CHECK(a.boundaries == pinned.boundaries);
  CHECK(to_json(a).dump() == to_json(pinned).dump());
  CHECK(error_code_of([&] { random_model(validate_profile(2, {2}, 1, 2), f2, 7); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("certified random lines") {
  Field f3 = Field::characteristic(3);
  LineModelSpec spec{4, {2}, {1, 2}, 1};
  CertifiedLine cl = random_line_model(spec, f3, 11);
  CHECK(lies_on(cl.line, cl.model));
  CHECK(log_smooth_along(cl.line, cl.model));
  auto c = boundary_contacts(cl.line, cl.model);
  CHECK(c[0].in_boundary);
  CHECK_FALSE(c[1].in_boundary);
  CertifiedLine again = random_line_model(spec, f3, 11);
  CHECK(again.model.equations == cl.model.equations);
  CHECK(again.attempts == cl.attempts);
}

TEST_CASE("line enumeration") {
  Field f2 = Field::characteristic(2);
  CIModel quad = CIModel::make(f2, 3, {poly(f2, 3, "x0*x2 + x1*x3")}, {});
  auto found = enumerate_lines(quad, 1000);
  CHECK_FALSE(found.empty());
  bool has_standard = false;
  for (const auto& fl : found) {
    CHECK(lies_on(fl.line, quad));
    has_standard = has_standard || fl.line == standard_line(f2, 3);
  }
  CHECK(has_standard);
  // A smooth quadric surface over F_2 carries 2 (p + 1) = 6 rational lines.
  CHECK(found.size() == 6);

  for (std::uint32_t p : {2u, 3u, 5u}) {
    Field f = Field::characteristic(p);
    for (int n = 1; n <= (p == 5 ? 3 : 4); ++n) {
      CHECK(static_cast<long>(all_lines(f, n).size()) == grassmannian_lines(p, n));
      if (n <= 3) {
        auto pn = enumerate_lines(CIModel::make(f, n, {}, {}), 100000);
        CHECK(static_cast<long>(pn.size()) == grassmannian_lines(p, n));
      }
    }
  }
  CHECK(enumerate_lines(quad, 0).empty());
  CHECK(enumerate_lines(quad, 2).size() == 2);
  CHECK(error_code_of([&] { enumerate_lines(CIModel::make(Field{}, 2, {}, {}), 5); }) == ErrorCode::Precondition);
}

TEST_CASE("enumeration verdicts agree with direct verdicts") {
  for (std::uint32_t p : {2u, 3u}) {
    Field f = Field::characteristic(p);
    Rng rng(p);
    for (int i = 0; i < 5; ++i) {
      CIModel x = CIModel::make(f, 3, {random_form(rng, f, 3, 2)}, {random_form(rng, f, 3, 1)});
      for (const auto& fl : enumerate_lines(x, 50)) {
        auto v = freeness_verdict(x, fl.line);
        CHECK(v.status == fl.verdict.status);
        CHECK(v.splitting == fl.verdict.splitting);
        CHECK(v.a1_qualified == fl.verdict.a1_qualified);
      }
    }
  }
}

TEST_CASE("explicit instances on a small grid") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    Field f = Field::characteristic(p);
    for (int n = 3; n <= 6; ++n)
      for (int d1 = 1; d1 <= n; ++d1)
        for (int db = 1; d1 + db <= n; ++db) {
          auto prof = validate_profile(n, {d1}, db, p);
          if (!prof.tame) continue;
          auto inst = prop_line_instance(prof, f);
          auto v = freeness_verdict(inst.model, inst.line);
          CHECK(v.checks.lies_on);
          CHECK(v.checks.log_smooth);
          CHECK(v.splitting == inst.expected);
          REQUIRE(v.contacts.size() == 1);
          CHECK(v.contacts[0].total == db);
          CHECK(v.contacts[0].order_at(Point::zero_of_t(f)) == db);
        }
  }
}
