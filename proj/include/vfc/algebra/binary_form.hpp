#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vfc/algebra/field.hpp"

namespace vfc {

/// A point (s0 : t0) of P^1, stored with its first nonzero coordinate equal to 1.
class Point {
 public:
  Point() : s_(mpq_class(1)), t_(mpq_class(0)) {}  // (1:0) over Q
  static Point make(const Scalar& s, const Scalar& t);
  static Point zero_of_t(Field f);  // (1:0)
  static Point zero_of_s(Field f);  // (0:1)

  const Scalar& s() const { return s_; }
  const Scalar& t() const { return t_; }
  Field field() const { return s_.field(); }

  friend bool operator==(const Point& a, const Point& b) { return a.s_ == b.s_ && a.t_ == b.t_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Point(Scalar s, Scalar t) : s_(std::move(s)), t_(std::move(t)) {}
  Scalar s_, t_;
};

/// Homogeneous polynomial sum_i c_i s^(d-i) t^i. The zero form has degree -1
/// and no coefficients; every nonzero form stores exactly d+1 coefficients.
class BinaryForm {
 public:
  explicit BinaryForm(Field f = Field{}) : field_(f) {}
  /// Trailing all-zero input collapses to the zero form.
  static BinaryForm from_coeffs(Field f, std::vector<Scalar> coeffs);
  static BinaryForm constant(const Scalar& c);
  static BinaryForm monomial(const Scalar& c, int s_exp, int t_exp);
  static BinaryForm s(Field f) { return monomial(f.one(), 1, 0); }
  static BinaryForm t(Field f) { return monomial(f.one(), 0, 1); }
  /// t0*s - s0*t, the linear form vanishing at pt.
  static BinaryForm vanishing_at(const Point& pt);

  Field field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Coefficient of s^(d-i) t^i; zero when out of range.
  Scalar coeff(int i) const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm operator-() const;
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Scalar& c, const BinaryForm& a);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
  friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

  BinaryForm pow(int e) const;
  Scalar evaluate(const Scalar& s0, const Scalar& t0) const;
  Scalar evaluate(const Point& pt) const { return evaluate(pt.s(), pt.t()); }
  /// Scales so that the first nonzero coefficient (highest power of s) is 1.
  BinaryForm monic() const;
  /// Multiplicity of s (resp. t) as a factor.
  int s_multiplicity() const;
  int t_multiplicity() const;

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0, g) = monic(g), gcd(0, 0) = 0.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

/// Quotient f / g when g divides f exactly, otherwise nullopt.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g);

/// f(u, v) for binary forms u, v of a common degree.
BinaryForm compose(const BinaryForm& f, const BinaryForm& u, const BinaryForm& v);

/// Order of vanishing of a nonzero form at a point.
int order_at(const BinaryForm& f, const Point& pt);

/// Squarefree decomposition: f = c * prod g_i^m_i with g_i squarefree, monic,
/// pairwise coprime. Works in characteristic p (p-th power parts included).
/// When the field is F_p with p below kLinearSplitBound, every factor is further
/// split into its linear factors over F_p plus a remaining part without roots.
std::vector<std::pair<BinaryForm, int>> squarefree_factors(const BinaryForm& f);

inline constexpr std::uint32_t kLinearSplitBound = 1u << 16;

}  // namespace vfc
