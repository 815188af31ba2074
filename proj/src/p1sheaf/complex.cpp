#include "vfc/p1sheaf/complex.hpp"

#include "vfc/error.hpp"

namespace vfc {

FreeComplex FreeComplex::kernel_of(SheafMap b) {
  FreeComplex cx;
  cx.terms = {b.source(), b.target()};
  cx.maps.push_back(std::move(b));
  cx.position = 0;
  return cx;
}

FreeComplex FreeComplex::middle_of(SheafMap a, SheafMap b) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "complex maps over different fields");
  if (!(a.target() == b.source())) throw Error(ErrorCode::DimensionMismatch, "complex maps do not chain");
  FreeComplex cx;
  cx.terms = {a.source(), a.target(), b.target()};
  cx.maps.push_back(std::move(a));
  cx.maps.push_back(std::move(b));
  cx.position = 1;
  return cx;
}

int FreeComplex::sheaf_rank() const {
  int r = 0;
  for (int i = 0; i < length(); ++i) r += ((i - position) % 2 == 0 ? 1 : -1) * terms[i].rank();
  return r;
}

int FreeComplex::sheaf_degree() const {
  int d = 0;
  for (int i = 0; i < length(); ++i) d += ((i - position) % 2 == 0 ? 1 : -1) * terms[i].degree();
  return d;
}

std::string ComplexValidity::failure() const {
  if (!composite_zero) return "composite of consecutive maps is nonzero";
  if (!first_inclusion) return "first map is not a subbundle inclusion";
  if (!last_surjective) return "last map is not fiberwise surjective";
  return {};
}

ComplexValidity check_validity(const FreeComplex& cx) {
  ComplexValidity v;
  if (cx.length() == 3) {
    v.composite_zero = compose(cx.maps[1], cx.maps[0]).is_zero();
    v.first_inclusion = subbundle_inclusion(cx.maps[0]);
  }
  v.last_surjective = fiber_surjective(cx.maps.back());
  return v;
}

void require_valid(const FreeComplex& cx) {
  if (cx.length() < 2 || cx.length() > 3 || static_cast<int>(cx.maps.size()) != cx.length() - 1)
    throw Error(ErrorCode::InvalidComplex, "complex must have two or three terms");
  ComplexValidity v = check_validity(cx);
  if (!v.ok()) throw Error(ErrorCode::InvalidComplex, v.failure());
}

}  // namespace vfc
