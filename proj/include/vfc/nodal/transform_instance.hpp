#pragma once

#include <cstdint>

#include "vfc/algebra/json_io.hpp"
#include "vfc/nodal/nodal_bundle.hpp"

namespace vfc {

/// E|_{C_1} = O + F, E|_{C_2} = T + O^(r-k), glued by glue_e (right frame to
/// left frame); y_1, y_2 on C_1 away from the node.
struct TransformInstance {
  int r = 0, k = 0;
  SplittingType F;  // rank r-1, degrees >= 1
  SplittingType T;  // rank k, degrees >= 1
  Point node_left, node_right;
  Matrix glue_e;
  Point y1, y2;
  std::uint64_t seed = 0;

  NodalBundle bundle_e() const;
};

/// Checks ranks, positivity, points and invertibility. Does not check the
/// span condition; construct_K does.
void require_valid(const TransformInstance& inst);

/// Whether E' = glue_e(T|_node) and E = F|_node span the fiber at the node.
bool span_condition(const TransformInstance& inst);

/// A seeded instance with the given shape; the gluing is redrawn until the
/// span condition holds.
TransformInstance transform_instance(int r, int k, const SplittingType& F, const SplittingType& T, Field f,
                                     std::uint64_t seed);

/// Random shape with 1 <= k <= r <= rmax and all F, T degrees in [1, 3].
TransformInstance random_transform_instance(int rmax, Field f, std::uint64_t seed);

struct KConstruction {
  NodalBundle K;
  /// D with K|_{C_1} = D(node); D is the elementary transform of O + F at the
  /// node along the functional whose kernel is E'.
  ElementaryTransform lower;
};

/// Throws SpanFailure when E' lies inside E at the node.
KConstruction construct_K(const TransformInstance& inst);

struct VanishingReport {
  long h1_right = 0;  // h^1(C_2, K|_{C_2}(-node))
  long h1_left = 0;   // h^1(C_1, K|_{C_1}(-y_1-y_2))
  long h1_total = 0;  // h^1(C, K(-y_1-y_2))
  bool all_zero() const { return h1_right == 0 && h1_left == 0 && h1_total == 0; }
};

VanishingReport verify_vanishings(const TransformInstance& inst);

json to_json(const TransformInstance& inst);
json to_json(const NodalBundle& b);
TransformInstance transform_instance_from_json(const json& j, const std::string& ptr = "");

}  // namespace vfc
