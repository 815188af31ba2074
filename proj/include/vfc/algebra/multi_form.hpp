#pragma once

#include <map>
#include <string>
#include <vector>

#include "vfc/algebra/binary_form.hpp"
#include "vfc/algebra/curve_map.hpp"

namespace vfc {

using Exponent = std::vector<int>;

/// Sparse homogeneous polynomial in x_0..x_n. Only nonzero terms are stored.
class MultiForm {
 public:
  MultiForm() = default;
  static MultiForm zero(Field f, int n, int degree);
  static MultiForm variable(Field f, int n, int i);
  static MultiForm constant(Field f, int n, const Scalar& c);
  /// Terms with zero coefficient are dropped; exponents are validated.
  static MultiForm from_terms(Field f, int n, int degree, const std::map<Exponent, Scalar>& terms);

  Field field() const { return field_; }
  int n() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }

  MultiForm& operator+=(const MultiForm& o);
  MultiForm& operator-=(const MultiForm& o);
  friend MultiForm operator+(MultiForm a, const MultiForm& b) { return a += b; }
  friend MultiForm operator-(MultiForm a, const MultiForm& b) { return a -= b; }
  friend MultiForm operator*(const MultiForm& a, const MultiForm& b);
  friend MultiForm operator*(const Scalar& c, const MultiForm& a);
  friend bool operator==(const MultiForm& a, const MultiForm& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.terms_ == b.terms_ &&
           (a.terms_.empty() || a.degree_ == b.degree_);
  }

  /// Formal derivative; exponents drop by one and coefficients pick up the
  /// exponent reduced into the field, so entries may vanish in characteristic p.
  MultiForm partial(int i) const;
  std::vector<MultiForm> jacobian() const;

  /// F(phi_0(s,t), ..., phi_n(s,t)).
  BinaryForm substitute(const RationalCurveMap& phi) const;

  std::string to_string() const;

 private:
  Field field_;
  int n_ = 0;
  int degree_ = 0;
  std::map<Exponent, Scalar> terms_;
};

}  // namespace vfc
