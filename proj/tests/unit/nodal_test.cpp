#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support.hpp"
#include "vfc/nodal/nodal_bundle.hpp"
#include "vfc/nodal/transform_instance.hpp"
#include "vfc/p1sheaf/json_io.hpp"

using namespace vfc;
using namespace vfc::test;

namespace {

NodalBundle line_pair(Field f, int a, int b) {
  return NodalBundle{FreeSum{{a}}, FreeSum{{b}}, Point::zero_of_t(f), Point::zero_of_s(f), Matrix::identity(f, 1)};
}

// Cohomology of O(a) on C_1 glued to O(b) on C_2.
CohomologyDims line_on_nodal(int a, int b) {
  if (a >= 0 && b >= 0) return {a + b + 1, 0};
  if (a >= 0) return {a, -b - 1};
  if (b >= 0) return {b, -a - 1};
  return {0, (-a - 1) + (-b - 1) + 1};
}

Field f101() { return Field::characteristic(101); }

}  // namespace

TEST_CASE("gluing examples") {
  Field q;
  CHECK(nodal_cohomology(line_pair(q, 0, 0)) == CohomologyDims{1, 0});
  CHECK(nodal_cohomology(line_pair(q, -2, 0)) == CohomologyDims{0, 1});
  CHECK(nodal_cohomology(line_pair(q, 1, 1)) == CohomologyDims{3, 0});
  // Twisting by points on each side.
  CHECK(nodal_cohomology(line_pair(q, 1, 1), {Point::make(q.one(), q.one())}, {}) == CohomologyDims{2, 0});
  CHECK(nodal_cohomology(line_pair(q, 0, 0), {Point::make(q.one(), q.one())}, {Point::make(q.one(), q.one())}) ==
        CohomologyDims{0, 1});
}

TEST_CASE("invalid nodal bundles") {
  Field q;
  NodalBundle b{FreeSum{{0, 0}}, FreeSum{{0}}, Point::zero_of_t(q), Point::zero_of_t(q), Matrix::identity(q, 1)};
  CHECK(error_code_of([&] { require_valid(b); }) == ErrorCode::InvalidArgument);
  NodalBundle s{FreeSum{{0, 0}}, FreeSum{{0, 0}}, Point::zero_of_t(q), Point::zero_of_t(q), Matrix(q, 2, 2)};
  CHECK(error_code_of([&] { require_valid(s); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("split gluings match the line-bundle formula") {
  for (Field f : small_fields()) {
    Rng rng(120 + f.p());
    for (int i = 0; i < 200; ++i) {
      const int r = static_cast<int>(rng.range(1, 4));
      NodalBundle b{random_sum(rng, r, -3, 3), random_sum(rng, r, -3, 3), rng.point(f), rng.point(f),
                    Matrix(f, r, r)};
      for (int j = 0; j < r; ++j) b.glue.set(j, j, rng.nonzero_scalar(f));
      CohomologyDims want;
      for (int j = 0; j < r; ++j) {
        auto h = line_on_nodal(b.left.twists[j], b.right.twists[j]);
        want.h0 += h.h0;
        want.h1 += h.h1;
      }
      CHECK(nodal_cohomology(b) == want);
    }
  }
}

TEST_CASE("Euler characteristic is additive") {
  for (Field f : small_fields()) {
    Rng rng(140 + f.p());
    for (int i = 0; i < 200; ++i) {
      const int r = static_cast<int>(rng.range(1, 4));
      NodalBundle b{random_sum(rng, r, -3, 3), random_sum(rng, r, -3, 3), rng.point(f), rng.point(f), Matrix()};
      do {
        b.glue = Matrix(f, r, r);
        for (int x = 0; x < r; ++x)
          for (int y = 0; y < r; ++y) b.glue.set(x, y, rng.scalar(f));
      } while (!is_invertible(b.glue));
      std::vector<Point> dl, dr;
      for (int j = static_cast<int>(rng.range(0, 2)); j > 0; --j) {
        Point p = rng.point(f);
        if (p != b.node_left) dl.push_back(p);
      }
      for (int j = static_cast<int>(rng.range(0, 2)); j > 0; --j) {
        Point p = rng.point(f);
        if (p != b.node_right) dr.push_back(p);
      }
      const long dl_n = static_cast<long>(dl.size()), dr_n = static_cast<long>(dr.size());
      auto h = nodal_cohomology(b, dl, dr);
      const long chi_left = b.left.degree() - r * dl_n + r;
      const long chi_right = b.right.degree() - r * dr_n + r;
      CHECK(h.h0 - h.h1 == chi_left + chi_right - r);
      CHECK(h.h0 >= 0);
      CHECK(h.h1 >= 0);
      CHECK(h.h1 <= b.left.twisted(-static_cast<int>(dl_n)).h1() + b.right.twisted(-static_cast<int>(dr_n)).h1() + r);
    }
  }
}

TEST_CASE("construction examples") {
  Field f = f101();
  auto inst = transform_instance(2, 1, SplittingType::from({1}), SplittingType::from({1}), f, 3);
  CHECK(span_condition(inst));
  auto k = construct_K(inst);
  CHECK(SplittingType::from(k.K.left.twists) == SplittingType::from({1, 1}));
  CHECK(SplittingType::from(k.K.right.twists) == SplittingType::from({0, 0}));
  CHECK(k.K.degree() == inst.bundle_e().degree());
  auto v = verify_vanishings(inst);
  CHECK(v.all_zero());

  auto full = transform_instance(3, 3, SplittingType::from({2, 1}), SplittingType::from({3, 1, 1}), f, 4);
  auto kf = construct_K(full);
  CHECK(SplittingType::from(kf.K.right.twists) == SplittingType::from({2, 0, 0}));
}

TEST_CASE("degenerate span witness") {
  Field f = f101();
  auto inst = transform_instance(2, 1, SplittingType::from({1}), SplittingType::from({1}), f, 3);
  // E' inside E at the node: the T column has no component along O.
  inst.glue_e = Matrix::from_rows(f, {{f.zero(), f.one()}, {f.one(), f.zero()}});
  require_valid(inst);
  CHECK_FALSE(span_condition(inst));
  try {
    construct_K(inst);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpanFailure);
  }
  CHECK(error_code_of([&] { verify_vanishings(inst); }) == ErrorCode::SpanFailure);
}

TEST_CASE("instance validation") {
  Field f = f101();
  auto inst = transform_instance(3, 2, SplittingType::from({1, 1}), SplittingType::from({1, 2}), f, 5);
  auto bad = inst;
  bad.F = SplittingType::from({1, 0});
  CHECK(error_code_of([&] { require_valid(bad); }) == ErrorCode::InvalidArgument);
  bad = inst;
  bad.y2 = bad.y1;
  CHECK(error_code_of([&] { require_valid(bad); }) == ErrorCode::InvalidArgument);
  bad = inst;
  bad.y1 = bad.node_left;
  CHECK(error_code_of([&] { require_valid(bad); }) == ErrorCode::InvalidArgument);
  CHECK(error_code_of([&] { transform_instance(3, 4, SplittingType::from({1, 1}), SplittingType::from({1, 1, 1, 1}), f, 1); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("pinned instance") {
  auto pinned = json::parse(read_file(golden("nodal_r4_k2.json")));
  auto inst = transform_instance(4, 2, SplittingType::from({2, 1, 1}), SplittingType::from({1, 1}), f101(), 1);
  CHECK(to_json(inst).dump() == pinned["instance"].dump());
  auto k = construct_K(inst);
  CHECK(to_json(k.K).dump() == pinned["K"].dump());
  auto v = verify_vanishings(inst);
  CHECK(v.h1_right == pinned["vanishings"]["h1_right"].get<long>());
  CHECK(v.h1_left == pinned["vanishings"]["h1_left"].get<long>());
  CHECK(v.h1_total == pinned["vanishings"]["h1_total"].get<long>());
  CHECK(v.all_zero());
  auto back = transform_instance_from_json(pinned["instance"]);
  CHECK(to_json(back).dump() == pinned["instance"].dump());
}

TEST_CASE("seeded instances: vanishings, positivity and degrees") {
  Field f = f101();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto inst = random_transform_instance(6, f, seed);
    CHECK(inst.r <= 6);
    CHECK(inst.k >= 1);
    CHECK(inst.k <= inst.r);
    for (int e : inst.F.degrees) CHECK((e >= 1 && e <= 3));
    for (int e : inst.T.degrees) CHECK((e >= 1 && e <= 3));
    REQUIRE(span_condition(inst));
    auto k = construct_K(inst);
    const NodalBundle& K = k.K;
    // Ample on C_1, and K|C_2(-node) has no h^1.
    CHECK(SplittingType::from(K.left.twists).min_degree() >= 1);
    CHECK(K.right.twisted(-1).h1() == 0);
    CHECK(K.degree() == inst.bundle_e().degree());
    CHECK(k.lower.type.degree() == inst.F.degree() - (inst.r - inst.k));

    auto v = verify_vanishings(inst);
    CHECK_MESSAGE(v.all_zero(), to_json(inst).dump());

    auto e = nodal_cohomology(inst.bundle_e());
    CHECK(e.h0 - e.h1 == inst.bundle_e().degree() + inst.r);
  }
}
