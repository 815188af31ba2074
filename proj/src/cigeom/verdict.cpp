#include "vfc/cigeom/verdict.hpp"

#include "vfc/error.hpp"

namespace vfc {

std::string_view to_string(FreenessStatus s) {
  switch (s) {
    case FreenessStatus::VeryFree: return "very_free";
    case FreenessStatus::Free: return "free";
    case FreenessStatus::NotFree: return "not_free";
    case FreenessStatus::NotLogSmooth: return "not_log_smooth";
  }
  return "unknown";
}

FreenessVerdict freeness_verdict(const CIModel& x, const RationalCurveMap& phi) {
  FreenessVerdict v;
  v.checks.lies_on = lies_on(phi, x);
  if (!v.checks.lies_on) throw Error(ErrorCode::Precondition, "curve does not lie on the model");
  v.checks.tame = x.tame();
  v.contacts = boundary_contacts(phi, x);
  for (const auto& c : v.contacts)
    if (c.total > 0) v.a1_qualified = true;

  v.checks.smooth = smooth_along(phi, x);
  v.checks.log_smooth = v.checks.smooth && log_smooth_along(phi, x);
  FreeComplex middle = restrict_log_tangent_complex(x, phi);
  v.checks.composite_zero = compose(middle.maps[1], middle.maps[0]).is_zero();
  if (!v.checks.log_smooth || !v.checks.composite_zero) {
    v.status = FreenessStatus::NotLogSmooth;
    return v;
  }

  if (v.checks.tame && x.k() >= 1) {
    v.splitting = splitting_type(FreeComplex::kernel_of(restrict_log_tangent_kernel(x, phi)));
    v.presentation = "kernel";
  } else {
    v.splitting = splitting_type(middle);
    v.presentation = "middle";
  }
  const int lo = v.splitting->rank() == 0 ? 1 : v.splitting->min_degree();
  v.status = lo >= 1 ? FreenessStatus::VeryFree : lo >= 0 ? FreenessStatus::Free : FreenessStatus::NotFree;
  return v;
}

PresentationComparison compare_presentations(const CIModel& x, const RationalCurveMap& phi) {
  if (!log_smooth_along(phi, x)) throw Error(ErrorCode::Precondition, "curve is not in the log smooth locus");
  PresentationComparison c{splitting_type(restrict_log_tangent_complex(x, phi)), std::nullopt};
  if (x.tame() && x.k() >= 1) c.kernel = splitting_type(FreeComplex::kernel_of(restrict_log_tangent_kernel(x, phi)));
  return c;
}

}  // namespace vfc
