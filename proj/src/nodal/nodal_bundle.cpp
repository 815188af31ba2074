#include "vfc/nodal/nodal_bundle.hpp"

#include "vfc/error.hpp"

namespace vfc {

void require_valid(const NodalBundle& b) {
  const Field f = b.node_left.field();
  if (b.node_right.field() != f || b.glue.field() != f) throw Error(ErrorCode::FieldMismatch, "nodal data over different fields");
  if (b.left.rank() != b.right.rank())
    throw Error(ErrorCode::InvalidArgument, "component bundles have ranks " + std::to_string(b.left.rank()) + " and " +
                                                std::to_string(b.right.rank()));
  if (static_cast<int>(b.glue.rows()) != b.rank() || static_cast<int>(b.glue.cols()) != b.rank())
    throw Error(ErrorCode::InvalidArgument, "gluing matrix has the wrong size");
  if (!is_invertible(b.glue)) throw Error(ErrorCode::InvalidArgument, "gluing matrix is singular");
}

namespace {

// Value at the node of the section sigma * prod l_y, for sigma in the
// frame of the twisted-down bundle: sigma(node) times this factor.
Scalar divisor_factor(const std::vector<Point>& divisor, const Point& node) {
  Scalar lam = node.field().one();
  for (const auto& y : divisor) {
    if (y == node) throw Error(ErrorCode::InvalidArgument, "divisor point coincides with the node");
    lam *= BinaryForm::vanishing_at(y).evaluate(node);
  }
  return lam;
}

}  // namespace

CohomologyDims nodal_cohomology(const NodalBundle& b, const std::vector<Point>& dl, const std::vector<Point>& dr) {
  require_valid(b);
  const int r = b.rank();
  const int ml = -static_cast<int>(dl.size()), mr = -static_cast<int>(dr.size());
  const Scalar lam_l = divisor_factor(dl, b.node_left);
  const Scalar lam_r = divisor_factor(dr, b.node_right);

  // (sigma_L, sigma_R) -> lam_L sigma_L(node) - glue lam_R sigma_R(node)
  Matrix evl = evaluation_matrix(b.left, ml, b.node_left);
  Matrix evr = b.glue * evaluation_matrix(b.right, mr, b.node_right);
  const std::size_t nl = evl.cols(), nr = evr.cols();
  Matrix mv(b.glue.field(), static_cast<std::size_t>(r), nl + nr);
  for (int i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < nl; ++c) mv.set(i, c, lam_l * evl.get(i, c));
    for (std::size_t c = 0; c < nr; ++c) mv.set(i, nl + c, -(lam_r * evr.get(i, c)));
  }
  const long rk = static_cast<long>(rank(mv));
  const long h0 = static_cast<long>(nl + nr) - rk;
  const long h1 = b.left.h1(ml) + b.right.h1(mr) + r - rk;
  return {h0, h1};
}

}  // namespace vfc
