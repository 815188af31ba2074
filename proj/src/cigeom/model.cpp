#include "vfc/cigeom/model.hpp"

#include "vfc/error.hpp"

namespace vfc {

CIModel CIModel::make(Field f, int n, std::vector<MultiForm> equations, std::vector<MultiForm> boundaries) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be at least 1");
  auto check = [&](const std::vector<MultiForm>& forms, const char* what) {
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const MultiForm& g = forms[i];
      const std::string tag = std::string(what) + " " + std::to_string(i + 1);
      if (g.field() != f) throw Error(ErrorCode::FieldMismatch, tag + " is over a different field");
      if (g.n() != n) throw Error(ErrorCode::DimensionMismatch, tag + " lives in the wrong number of variables");
      if (g.degree() < 1) throw Error(ErrorCode::InvalidArgument, tag + " must have degree >= 1");
      if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, tag + " is the zero polynomial");
    }
  };
  check(equations, "equation");
  check(boundaries, "boundary");
  if (equations.size() + boundaries.size() > static_cast<std::size_t>(n))
    throw Error(ErrorCode::InvalidArgument, "l + k exceeds n");
  return CIModel{f, n, std::move(equations), std::move(boundaries)};
}

bool CIModel::tame() const {
  if (field.is_rational()) return true;
  for (const auto& g : boundaries)
    if (g.degree() % static_cast<int>(field.p()) == 0) return false;
  return true;
}

int ContactRecord::order_at(const Point& pt) const {
  for (const auto& [g, m] : factors)
    if (g.evaluate(pt).is_zero()) return m * vfc::order_at(g, pt);
  return 0;
}

namespace {

void require_match(const RationalCurveMap& phi, const CIModel& x) {
  if (phi.n() != x.n) throw Error(ErrorCode::DimensionMismatch, "curve and model live in different P^n");
  if (phi.field() != x.field) throw Error(ErrorCode::FieldMismatch, "curve and model over different fields");
}

void require_on(const RationalCurveMap& phi, const CIModel& x) {
  if (!lies_on(phi, x)) throw Error(ErrorCode::Precondition, "curve does not lie on the model");
}

// Jacobian rows of `forms` pulled back along phi, as maps O(d) -> O(d deg).
std::vector<std::vector<BinaryForm>> pulled_jacobian(const std::vector<MultiForm>& forms, const RationalCurveMap& phi) {
  std::vector<std::vector<BinaryForm>> rows;
  for (const auto& g : forms) {
    std::vector<BinaryForm> row;
    for (const auto& dg : g.jacobian()) row.push_back(dg.substitute(phi));
    rows.push_back(std::move(row));
  }
  return rows;
}

FreeSum target_of(const CIModel& x, int d) {
  FreeSum t;
  for (const auto& g : x.equations) t.twists.push_back(d * g.degree());
  for (const auto& g : x.boundaries) t.twists.push_back(d * g.degree());
  return t;
}

// [JacF 0; JacG diag(G_1..G_extra)] along phi; `extra` columns of O.
SheafMap jacobian_block(const CIModel& x, const RationalCurveMap& phi, int extra) {
  const Field f = x.field;
  const int d = phi.degree();
  FreeSum src = concat(repeated(d, x.n + 1), repeated(0, extra));
  FreeSum tgt = target_of(x, d);
  auto rows = pulled_jacobian(x.equations, phi);
  for (auto& r : rows) r.resize(src.rank(), BinaryForm(f));
  auto grows = pulled_jacobian(x.boundaries, phi);
  for (int j = 0; j < x.k(); ++j) {
    grows[j].resize(src.rank(), BinaryForm(f));
    if (j < extra) grows[j][x.n + 1 + j] = x.boundaries[j].substitute(phi);
    rows.push_back(std::move(grows[j]));
  }
  return SheafMap::make(f, std::move(src), std::move(tgt), std::move(rows));
}

}  // namespace

bool lies_on(const RationalCurveMap& phi, const CIModel& x) {
  require_match(phi, x);
  for (const auto& g : x.equations)
    if (!g.substitute(phi).is_zero()) return false;
  return true;
}

bool smooth_along(const RationalCurveMap& phi, const CIModel& x) {
  require_on(phi, x);
  if (x.l() == 0) return true;
  const int d = phi.degree();
  FreeSum tgt;
  for (const auto& g : x.equations) tgt.twists.push_back(d * g.degree());
  return fiber_surjective(SheafMap::make(x.field, repeated(d, x.n + 1), tgt, pulled_jacobian(x.equations, phi)));
}

bool log_smooth_along(const RationalCurveMap& phi, const CIModel& x) {
  if (!smooth_along(phi, x)) return false;
  if (x.k() == 0) return true;
  return fiber_surjective(jacobian_block(x, phi, x.k()));
}

std::vector<ContactRecord> boundary_contacts(const RationalCurveMap& phi, const CIModel& x) {
  require_match(phi, x);
  std::vector<ContactRecord> out;
  for (const auto& g : x.boundaries) {
    ContactRecord rec;
    BinaryForm h = g.substitute(phi);
    if (h.is_zero()) {
      rec.in_boundary = true;
    } else {
      rec.factors = squarefree_factors(h);
      rec.total = h.degree();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

FreeComplex restrict_log_tangent_complex(const CIModel& x, const RationalCurveMap& phi) {
  require_on(phi, x);
  const Field f = x.field;
  SheafMap b = jacobian_block(x, phi, x.k());
  // B o A = 0 forces the boundary entries of A to be -d'_j: the G_j row of
  // B A is (Euler) d'_j G_j + G_j a_j.
  std::vector<std::vector<BinaryForm>> a_rows;
  for (const auto& c : phi.components()) a_rows.push_back({c});
  for (const auto& g : x.boundaries) a_rows.push_back({BinaryForm::constant(-f.from_int(g.degree()))});
  SheafMap a = SheafMap::make(f, FreeSum{{0}}, b.source(), std::move(a_rows));
  return FreeComplex::middle_of(std::move(a), std::move(b));
}

SheafMap restrict_log_tangent_kernel(const CIModel& x, const RationalCurveMap& phi) {
  require_on(phi, x);
  if (x.k() == 0) throw Error(ErrorCode::Precondition, "the kernel presentation needs a boundary component");
  if (!x.field.is_rational())
    for (int j = 0; j < x.k(); ++j)
      if (x.boundaries[j].degree() % static_cast<int>(x.field.p()) == 0)
        throw Error(ErrorCode::WildBoundary, "characteristic " + std::to_string(x.field.p()) + " divides d'_" +
                                                 std::to_string(j + 1) + " = " +
                                                 std::to_string(x.boundaries[j].degree()));
  return jacobian_block(x, phi, x.k() - 1);
}

CIModel induced_boundary_model(const CIModel& x, int j) {
  if (j < 1 || j > x.k())
    throw Error(ErrorCode::InvalidArgument, "boundary index " + std::to_string(j) + " out of range 1.." + std::to_string(x.k()));
  CIModel out = x;
  out.equations.push_back(x.boundaries[j - 1]);
  out.boundaries.erase(out.boundaries.begin() + (j - 1));
  return out;
}

}  // namespace vfc
