#include "vfc/algebra/multi_form.hpp"

#include <numeric>
#include <sstream>

#include "vfc/error.hpp"

namespace vfc {

MultiForm MultiForm::zero(Field f, int n, int degree) {
  MultiForm m;
  m.field_ = f;
  m.n_ = n;
  m.degree_ = degree;
  return m;
}

MultiForm MultiForm::variable(Field f, int n, int i) {
  if (i < 0 || i > n) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Exponent e(n + 1, 0);
  e[i] = 1;
  return from_terms(f, n, 1, {{e, f.one()}});
}

MultiForm MultiForm::constant(Field f, int n, const Scalar& c) {
  return from_terms(f, n, 0, {{Exponent(n + 1, 0), c}});
}

MultiForm MultiForm::from_terms(Field f, int n, int degree, const std::map<Exponent, Scalar>& terms) {
  MultiForm m = zero(f, n, degree);
  for (const auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != n + 1)
      throw Error(ErrorCode::DimensionMismatch, "exponent tuple must have length n+1");
    int sum = 0;
    for (int x : e) {
      if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
      sum += x;
    }
    if (sum != degree) throw Error(ErrorCode::InvalidArgument, "term degree differs from form degree");
    if (c.field() != f) throw Error(ErrorCode::FieldMismatch, "coefficient outside the form's field");
    if (!c.is_zero()) m.terms_.emplace(e, c);
  }
  return m;
}

MultiForm& MultiForm::operator+=(const MultiForm& o) {
  if (o.field_ != field_) throw Error(ErrorCode::FieldMismatch, "adding forms over different fields");
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "adding forms in different numbers of variables");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    degree_ = o.degree_;
  } else if (o.degree_ != degree_) {
    throw Error(ErrorCode::InvalidArgument, "adding forms of different degrees");
  }
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiForm& MultiForm::operator-=(const MultiForm& o) { return *this += (-field_.one()) * o; }

MultiForm operator*(const MultiForm& a, const MultiForm& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "multiplying forms over different fields");
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "multiplying forms in different numbers of variables");
  MultiForm r = MultiForm::zero(a.field_, a.n_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.terms_.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiForm operator*(const Scalar& c, const MultiForm& a) {
  MultiForm r = MultiForm::zero(a.field_, a.n_, a.degree_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, c * x);
  return r;
}

MultiForm MultiForm::partial(int i) const {
  if (i < 0 || i > n_) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  MultiForm r = zero(field_, n_, degree_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Scalar k = field_.from_int(e[i]) * c;
    if (k.is_zero()) continue;
    Exponent e2 = e;
    --e2[i];
    r.terms_.emplace(std::move(e2), k);
  }
  return r;
}

std::vector<MultiForm> MultiForm::jacobian() const {
  std::vector<MultiForm> j;
  j.reserve(n_ + 1);
  for (int i = 0; i <= n_; ++i) j.push_back(partial(i));
  return j;
}

BinaryForm MultiForm::substitute(const RationalCurveMap& phi) const {
  if (phi.n() != n_) throw Error(ErrorCode::DimensionMismatch, "substituting a curve into P^" + std::to_string(phi.n()) +
                                                                  " into a form on P^" + std::to_string(n_));
  if (phi.field() != field_) throw Error(ErrorCode::FieldMismatch, "curve and form over different fields");
  if (is_zero()) return BinaryForm(field_);
  std::vector<int> max_exp(n_ + 1, 0);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i <= n_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  std::vector<std::vector<BinaryForm>> powers(n_ + 1);
  const BinaryForm one = BinaryForm::constant(field_.one());
  for (int i = 0; i <= n_; ++i) {
    powers[i].push_back(one);
    for (int k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * phi.component(i));
  }
  const int target_degree = degree_ * phi.degree();
  std::vector<Scalar> acc(static_cast<std::size_t>(target_degree) + 1, field_.zero());
  for (const auto& [e, c] : terms_) {
    BinaryForm term = BinaryForm::constant(c);
    for (int i = 0; i <= n_ && !term.is_zero(); ++i)
      if (e[i] > 0) term = term * powers[i][e[i]];
    if (term.is_zero()) continue;
    for (std::size_t k = 0; k < term.coeffs().size(); ++k) acc[k] += term.coeffs()[k];
  }
  return BinaryForm::from_coeffs(field_, std::move(acc));
}

std::string MultiForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool mono = std::accumulate(e.begin(), e.end(), 0) > 0;
    bool need_star = false;
    if (!c.is_one() || !mono) {
      os << c.to_string();
      need_star = mono;
    }
    for (int i = 0; i <= n_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace vfc
