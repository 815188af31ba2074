#include "vfc/nodal/transform_instance.hpp"

#include <algorithm>

#include "vfc/construct/random.hpp"
#include "vfc/error.hpp"
#include "vfc/p1sheaf/json_io.hpp"

namespace vfc {

NodalBundle TransformInstance::bundle_e() const {
  FreeSum left{{0}};
  left.twists.insert(left.twists.end(), F.degrees.begin(), F.degrees.end());
  FreeSum right{T.degrees};
  right.twists.resize(static_cast<std::size_t>(r), 0);
  return NodalBundle{left, right, node_left, node_right, glue_e};
}

void require_valid(const TransformInstance& inst) {
  if (inst.k < 1 || inst.k > inst.r) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= r");
  if (inst.F.rank() != inst.r - 1) throw Error(ErrorCode::InvalidArgument, "F must have rank r-1");
  if (inst.T.rank() != inst.k) throw Error(ErrorCode::InvalidArgument, "T must have rank k");
  for (int a : inst.F.degrees)
    if (a < 1) throw Error(ErrorCode::InvalidArgument, "F must be positive");
  for (int a : inst.T.degrees)
    if (a < 1) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  if (inst.y1 == inst.y2 || inst.y1 == inst.node_left || inst.y2 == inst.node_left)
    throw Error(ErrorCode::InvalidArgument, "y_1, y_2 and the node must be distinct points of C_1");
  require_valid(inst.bundle_e());
}

bool span_condition(const TransformInstance& inst) {
  // E is the F-part (coordinates 1..r-1 on the left); E' spans the first k
  // columns of the gluing. They span iff some E' vector has an O-component.
  for (int j = 0; j < inst.k; ++j)
    if (!inst.glue_e.get(0, j).is_zero()) return true;
  return false;
}

TransformInstance transform_instance(int r, int k, const SplittingType& F, const SplittingType& T, Field f,
                                     std::uint64_t seed) {
  Rng rng(seed);
  TransformInstance inst;
  inst.r = r;
  inst.k = k;
  inst.F = F;
  inst.T = T;
  inst.seed = seed;
  inst.node_left = rng.point(f);
  inst.node_right = rng.point(f);
  do inst.y1 = rng.point(f);
  while (inst.y1 == inst.node_left);
  do inst.y2 = rng.point(f);
  while (inst.y2 == inst.node_left || inst.y2 == inst.y1);
  constexpr int kMaxDraws = 1000;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    Matrix g(f, static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) g.set(i, j, rng.scalar(f));
    inst.glue_e = std::move(g);
    if (is_invertible(inst.glue_e) && span_condition(inst)) {
      require_valid(inst);
      return inst;
    }
  }
  throw Error(ErrorCode::SpanFailure, "no gluing satisfying the span condition after " + std::to_string(kMaxDraws) + " draws");
}

TransformInstance random_transform_instance(int rmax, Field f, std::uint64_t seed) {
  if (rmax < 1) throw Error(ErrorCode::InvalidArgument, "rmax must be at least 1");
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  const int r = static_cast<int>(rng.range(1, rmax));
  const int k = static_cast<int>(rng.range(1, r));
  std::vector<int> fd, td;
  for (int i = 0; i < r - 1; ++i) fd.push_back(static_cast<int>(rng.range(1, 3)));
  for (int i = 0; i < k; ++i) td.push_back(static_cast<int>(rng.range(1, 3)));
  return transform_instance(r, k, SplittingType::from(fd), SplittingType::from(td), f, seed);
}

KConstruction construct_K(const TransformInstance& inst) {
  require_valid(inst);
  const Field f = inst.glue_e.field();
  const int r = inst.r, k = inst.k;
  if (!span_condition(inst)) {
    std::string sub;
    for (int j = 0; j < k; ++j) {
      sub += j ? "; " : "";
      for (int i = 0; i < r; ++i) sub += (i ? " " : "") + inst.glue_e.get(i, j).to_string();
    }
    throw Error(ErrorCode::SpanFailure, "E' = span{" + sub + "} lies in E = {v_0 = 0}: E and E' do not span the fiber");
  }
  const NodalBundle e = inst.bundle_e();

  // Functional on the left fiber with kernel E'.
  Matrix eprime(f, static_cast<std::size_t>(k), static_cast<std::size_t>(r));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < r; ++i) eprime.set(j, i, inst.glue_e.get(i, j));
  auto ann = null_space(eprime);
  Matrix functional(f, ann.size(), static_cast<std::size_t>(r));
  for (std::size_t a = 0; a < ann.size(); ++a)
    for (int i = 0; i < r; ++i) functional.set(a, i, ann[a][i]);

  KConstruction out{{}, elementary_transform(e.left, SkyscraperConstraint{inst.node_left, functional})};
  const ElementaryTransform& D = out.lower;

  // Left frame of K at the node: summand j of D(node) is D's column j divided
  // by the local equation of the node. Pivot columns give the classes of the
  // pivot coordinates in E/E'; the others give their values v_j in E'.
  // Right frame: tau_j = (column j of glue_e) in E', O_b = class of column
  // k+b of glue_e in E/E'.
  const Matrix Dn = D.inclusion.at_point(inst.node_left);
  std::vector<int> pivot_coord(r, -1);
  for (int j = 0; j < r; ++j)
    if (D.lowered[j]) pivot_coord[j] = D.source_coord[j];
  // Express a left-fiber vector w in the left frame of K: E' part in the
  // basis v_j of free columns, E/E' part in the pivot coordinates.
  const int q = static_cast<int>(std::count(D.lowered.begin(), D.lowered.end(), true));
  if (q != r - k) throw Error(ErrorCode::Internal, "transform has an unexpected number of pivot columns");
  // Solve [v_free | e_pivots] x = w.
  Matrix basis(f, static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    if (pivot_coord[j] >= 0) {
      basis.set(pivot_coord[j], j, f.one());
    } else {
      for (int i = 0; i < r; ++i) basis.set(i, j, Dn.get(i, j));
    }
  }
  const Matrix to_frame = inverse(basis);
  Matrix glue(f, static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (int c = 0; c < r; ++c) {
    Matrix w(f, static_cast<std::size_t>(r), 1);
    for (int i = 0; i < r; ++i) w.set(i, 0, inst.glue_e.get(i, c));
    Matrix x = to_frame * w;
    for (int j = 0; j < r; ++j) {
      const bool keep = c < k ? pivot_coord[j] < 0 : pivot_coord[j] >= 0;
      if (keep) glue.set(j, c, x.get(j, 0));
    }
  }

  FreeSum left = D.transform.twisted(1);
  FreeSum right{inst.T.degrees};
  for (int& a : right.twists) a -= 1;
  right.twists.resize(static_cast<std::size_t>(r), 0);
  out.K = NodalBundle{left, right, inst.node_left, inst.node_right, glue};
  require_valid(out.K);
  return out;
}

VanishingReport verify_vanishings(const TransformInstance& inst) {
  KConstruction kc = construct_K(inst);
  VanishingReport rep;
  rep.h1_right = kc.K.right.h1(-1);
  // K|_{C_1}(-y_1-y_2) = D(-1); computed from the constraint, not the type.
  rep.h1_left = kc.lower.cohomology(-1).h1;
  rep.h1_total = nodal_cohomology(kc.K, {inst.y1, inst.y2}, {}).h1;
  return rep;
}

json to_json(const NodalBundle& b) {
  return json{{"left", to_json(b.left)},
              {"right", to_json(b.right)},
              {"node_left", to_json(b.node_left)},
              {"node_right", to_json(b.node_right)},
              {"glue", to_json(b.glue)}};
}

json to_json(const TransformInstance& inst) {
  return json{{"char", inst.glue_e.field().p()},
              {"seed", inst.seed},
              {"r", inst.r},
              {"k", inst.k},
              {"F", inst.F.degrees},
              {"T", inst.T.degrees},
              {"node_left", to_json(inst.node_left)},
              {"node_right", to_json(inst.node_right)},
              {"y1", to_json(inst.y1)},
              {"y2", to_json(inst.y2)},
              {"glue", to_json(inst.glue_e)}};
}

TransformInstance transform_instance_from_json(const json& j, const std::string& ptr) {
  using namespace jsonio;
  TransformInstance inst;
  const Field f = field(member(j, "char", ptr), ptr + "/char");
  const json& seed = member(j, "seed", ptr);
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) schema_error(ptr + "/seed", "expected an integer");
  inst.seed = seed.get<std::uint64_t>();
  inst.r = static_cast<int>(integer(member(j, "r", ptr), ptr + "/r"));
  inst.k = static_cast<int>(integer(member(j, "k", ptr), ptr + "/k"));
  inst.F = SplittingType::from(free_sum_from_json(member(j, "F", ptr), ptr + "/F").twists);
  inst.T = SplittingType::from(free_sum_from_json(member(j, "T", ptr), ptr + "/T").twists);
  inst.node_left = point_from_json(member(j, "node_left", ptr), f, ptr + "/node_left");
  inst.node_right = point_from_json(member(j, "node_right", ptr), f, ptr + "/node_right");
  inst.y1 = point_from_json(member(j, "y1", ptr), f, ptr + "/y1");
  inst.y2 = point_from_json(member(j, "y2", ptr), f, ptr + "/y2");
  inst.glue_e = matrix_from_json(member(j, "glue", ptr), f, ptr + "/glue");
  try {
    require_valid(inst);
  } catch (const Error& e) {
    schema_error(ptr, e.what());
  }
  return inst;
}

}  // namespace vfc
