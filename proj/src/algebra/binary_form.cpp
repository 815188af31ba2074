#include "vfc/algebra/binary_form.hpp"

#include <sstream>

#include "vfc/error.hpp"

namespace vfc {

namespace {

// Dense univariate polynomials in x = t/s, index = power of x.
using Poly = std::vector<Scalar>;

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// a = q*b + r with deg r < deg b; b nonzero.
void divmod(Poly a, const Poly& b, Field f, Poly& q, Poly& r) {
  trim(a);
  q.clear();
  if (deg(a) < deg(b)) {
    r = std::move(a);
    return;
  }
  q.assign(a.size() - b.size() + 1, f.zero());
  Scalar lead_inv = b.back().inverse();
  for (int i = deg(a); i >= deg(b); --i) {
    if (a[i].is_zero()) continue;
    Scalar c = a[i] * lead_inv;
    int shift = i - deg(b);
    q[shift] = c;
    for (int j = 0; j <= deg(b); ++j) a[shift + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  r = std::move(a);
  trim(q);
}

Poly make_monic(Poly a) {
  trim(a);
  if (a.empty()) return a;
  Scalar inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

Poly upoly_gcd(Poly a, Poly b, Field f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    divmod(a, b, f, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

Poly exact_quotient(const Poly& a, const Poly& b, Field f) {
  Poly q, r;
  divmod(a, b, f, q, r);
  if (!r.empty()) throw Error(ErrorCode::Internal, "inexact polynomial division");
  return q;
}

Poly derivative(const Poly& a, Field f) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.from_int(static_cast<std::int64_t>(i)) * a[i]);
  trim(d);
  return d;
}

// In F_p every coefficient is its own p-th power, so the p-th root of
// sum a_i x^(ip) is sum a_i x^i.
Poly pth_root(const Poly& a, std::uint32_t p) {
  Poly r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(a[i]);
  return r;
}

void squarefree_rec(const Poly& g, Field f, int scale, std::vector<std::pair<Poly, int>>& out) {
  Poly c = upoly_gcd(g, derivative(g, f), f);
  Poly w = exact_quotient(g, c, f);
  int i = 1;
  while (deg(w) > 0) {
    Poly y = upoly_gcd(w, c, f);
    Poly z = exact_quotient(w, y, f);
    if (deg(z) > 0) out.emplace_back(make_monic(z), i * scale);
    ++i;
    w = std::move(y);
    c = exact_quotient(c, w, f);
  }
  if (deg(c) > 0) {
    if (f.is_rational()) throw Error(ErrorCode::Internal, "squarefree decomposition did not terminate");
    squarefree_rec(make_monic(pth_root(c, f.p())), f, scale * static_cast<int>(f.p()), out);
  }
}

// Roots x0 in F_p of a squarefree polynomial, found by evaluation.
std::vector<Scalar> roots_by_evaluation(const Poly& a, Field f) {
  std::vector<Scalar> roots;
  for (std::uint32_t v = 0; v < f.p() && static_cast<int>(roots.size()) < deg(a); ++v) {
    Scalar x = f.from_int(v);
    Scalar acc = f.zero();
    for (int i = deg(a); i >= 0; --i) acc = acc * x + a[i];
    if (acc.is_zero()) roots.push_back(x);
  }
  return roots;
}

BinaryForm homogenize(Field f, const Poly& a, int degree) {
  std::vector<Scalar> c(a.begin(), a.end());
  c.resize(static_cast<std::size_t>(degree) + 1, f.zero());
  return BinaryForm::from_coeffs(f, std::move(c));
}

}  // namespace

// ---- Point ----------------------------------------------------------------

Point Point::make(const Scalar& s, const Scalar& t) {
  if (s.field() != t.field()) throw Error(ErrorCode::FieldMismatch, "point coordinates in different fields");
  if (s.is_zero() && t.is_zero()) throw Error(ErrorCode::InvalidArgument, "(0:0) is not a point of P^1");
  if (!s.is_zero()) return Point(s.field().one(), t / s);
  return Point(s, t.field().one());
}

Point Point::zero_of_t(Field f) { return Point(f.one(), f.zero()); }
Point Point::zero_of_s(Field f) { return Point(f.zero(), f.one()); }

std::string Point::to_string() const { return "(" + s_.to_string() + ":" + t_.to_string() + ")"; }

// ---- BinaryForm -----------------------------------------------------------

BinaryForm BinaryForm::from_coeffs(Field f, std::vector<Scalar> coeffs) {
  BinaryForm r(f);
  bool all_zero = true;
  for (const auto& c : coeffs) {
    if (c.field() != f) throw Error(ErrorCode::FieldMismatch, "coefficient outside the form's field");
    if (!c.is_zero()) all_zero = false;
  }
  if (!all_zero) r.coeffs_ = std::move(coeffs);
  return r;
}

BinaryForm BinaryForm::constant(const Scalar& c) { return from_coeffs(c.field(), {c}); }

BinaryForm BinaryForm::monomial(const Scalar& c, int s_exp, int t_exp) {
  if (s_exp < 0 || t_exp < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  Field f = c.field();
  std::vector<Scalar> co(static_cast<std::size_t>(s_exp + t_exp) + 1, f.zero());
  co[t_exp] = c;
  return from_coeffs(f, std::move(co));
}

BinaryForm BinaryForm::vanishing_at(const Point& pt) {
  return from_coeffs(pt.field(), {pt.t(), -pt.s()});
}

Scalar BinaryForm::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return coeffs_[i];
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.field_ != field_) throw Error(ErrorCode::FieldMismatch, "adding forms over different fields");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.degree() != degree())
    throw Error(ErrorCode::InvalidArgument, "adding binary forms of different degrees");
  bool all_zero = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += o.coeffs_[i];
    if (!coeffs_[i].is_zero()) all_zero = false;
  }
  if (all_zero) coeffs_.clear();
  return *this;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) { return *this += -o; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "multiplying forms over different fields");
  if (a.is_zero() || b.is_zero()) return BinaryForm(a.field_);
  std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BinaryForm::from_coeffs(a.field_, std::move(r));
}

BinaryForm operator*(const Scalar& c, const BinaryForm& a) {
  if (c.field() != a.field_) throw Error(ErrorCode::FieldMismatch, "scaling form by foreign scalar");
  if (c.is_zero() || a.is_zero()) return BinaryForm(a.field_);
  BinaryForm r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative power of a form");
  BinaryForm acc = constant(field_.one());
  BinaryForm base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Scalar BinaryForm::evaluate(const Scalar& s0, const Scalar& t0) const {
  Scalar acc = field_.zero();
  if (is_zero()) return acc;
  // Horner in t with s-powers accumulated from the other side.
  std::vector<Scalar> spows(coeffs_.size(), field_.one());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) spows[i] = spows[i - 1] * s0;
  const int d = degree();
  Scalar tpow = field_.one();
  for (int i = 0; i <= d; ++i) {
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * spows[d - i] * tpow;
    tpow *= t0;
  }
  return acc;
}

BinaryForm BinaryForm::monic() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return c.inverse() * *this;
  return *this;
}

int BinaryForm::t_multiplicity() const {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[k].is_zero()) ++k;
  return k;
}

int BinaryForm::s_multiplicity() const {
  int k = 0;
  int i = degree();
  while (i >= 0 && coeffs_[i].is_zero()) {
    ++k;
    --i;
  }
  return k;
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const int d = degree();
  for (int i = 0; i <= d; ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const int se = d - i, te = i;
    bool mono = se > 0 || te > 0;
    if (!c.is_one() || !mono) {
      os << c.to_string();
      if (mono) os << "*";
    }
    if (se > 0) os << "s" << (se > 1 ? "^" + std::to_string(se) : "");
    if (se > 0 && te > 0) os << "*";
    if (te > 0) os << "t" << (te > 1 ? "^" + std::to_string(te) : "");
  }
  return os.str();
}

// ---- free functions -------------------------------------------------------

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.field() != g.field()) throw Error(ErrorCode::FieldMismatch, "gcd of forms over different fields");
  Field fld = f.field();
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  Poly a(f.coeffs().begin(), f.coeffs().end());
  Poly b(g.coeffs().begin(), g.coeffs().end());
  trim(a);
  trim(b);
  int s_mult = std::min(f.s_multiplicity(), g.s_multiplicity());
  Poly h = upoly_gcd(std::move(a), std::move(b), fld);
  return homogenize(fld, h, deg(h) + s_mult).monic();
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (f.field() != g.field()) throw Error(ErrorCode::FieldMismatch, "division of forms over different fields");
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return BinaryForm(f.field());
  if (f.degree() < g.degree() || f.s_multiplicity() < g.s_multiplicity()) return std::nullopt;
  Poly a(f.coeffs().begin(), f.coeffs().end());
  Poly b(g.coeffs().begin(), g.coeffs().end());
  trim(b);
  Poly q, r;
  divmod(std::move(a), b, f.field(), q, r);
  if (!r.empty()) return std::nullopt;
  return homogenize(f.field(), q, f.degree() - g.degree());
}

BinaryForm compose(const BinaryForm& f, const BinaryForm& u, const BinaryForm& v) {
  Field fld = f.field();
  if (u.field() != fld || v.field() != fld) throw Error(ErrorCode::FieldMismatch, "composing forms over different fields");
  if (f.is_zero()) return BinaryForm(fld);
  const int d = f.degree();
  std::vector<BinaryForm> up(d + 1), vp(d + 1);
  up[0] = vp[0] = BinaryForm::constant(fld.one());
  for (int i = 1; i <= d; ++i) {
    up[i] = up[i - 1] * u;
    vp[i] = vp[i - 1] * v;
  }
  BinaryForm acc(fld);
  for (int i = 0; i <= d; ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    BinaryForm term = f.coeffs()[i] * (up[d - i] * vp[i]);
    if (acc.is_zero() || term.is_zero() || acc.degree() == term.degree()) {
      acc += term;
    } else {
      throw Error(ErrorCode::InvalidArgument, "compose needs u, v of a common degree");
    }
  }
  return acc;
}

int order_at(const BinaryForm& f, const Point& pt) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "order of the zero form is undefined");
  BinaryForm l = BinaryForm::vanishing_at(pt);
  BinaryForm cur = f;
  int k = 0;
  while (cur.degree() > 0) {
    auto q = divide_exact(cur, l);
    if (!q) break;
    cur = std::move(*q);
    ++k;
  }
  return k;
}

std::vector<std::pair<BinaryForm, int>> squarefree_factors(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "factoring the zero form");
  Field fld = f.field();
  std::vector<std::pair<BinaryForm, int>> out;
  const int a = f.t_multiplicity();
  const int b = f.s_multiplicity();
  if (a > 0) out.emplace_back(BinaryForm::t(fld), a);
  if (b > 0) out.emplace_back(BinaryForm::s(fld), b);
  Poly core(f.coeffs().begin() + a, f.coeffs().end() - b);
  if (deg(core) <= 0) return out;

  std::vector<std::pair<Poly, int>> parts;
  squarefree_rec(make_monic(core), fld, 1, parts);
  for (auto& [h, m] : parts) {
    Poly rest = h;
    if (!fld.is_rational() && fld.p() < kLinearSplitBound) {
      for (const Scalar& x0 : roots_by_evaluation(h, fld)) {
        Poly lin{-x0, fld.one()};
        rest = exact_quotient(rest, lin, fld);
        out.emplace_back(homogenize(fld, lin, 1), m);
      }
    }
    if (deg(rest) > 0) out.emplace_back(homogenize(fld, make_monic(rest), deg(rest)).monic(), m);
  }
  for (auto& [g, m] : out) g = g.monic();
  return out;
}

}  // namespace vfc
