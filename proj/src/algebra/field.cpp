#include "vfc/algebra/field.hpp"

#include <ostream>
#include <sstream>

#include "vfc/error.hpp"

namespace vfc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::characteristic(std::uint64_t p) {
  if (p == 0) return Field{};
  if (p > kMaxPrime || !is_prime(p))
    throw Error(ErrorCode::InvalidArgument,
                "characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (p_ == 0) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (p_ == 0) return Scalar(mpq_class(v));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r.get_ui()), p_});
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator: '" + s + "'");
  q.canonicalize();
  if (p_ == 0) return Scalar(q);
  Scalar num = from_mpz(q.get_num());
  Scalar den = from_mpz(q.get_den());
  if (den.is_zero())
    throw Error(ErrorCode::InvalidArgument, "denominator vanishes mod " + std::to_string(p_));
  return num / den;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

[[noreturn]] void mismatch() {
  throw Error(ErrorCode::FieldMismatch, "arithmetic between elements of different fields");
}

}  // namespace

Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&v_)) return Field(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&v_))
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto a = std::get_if<Residue>(&v_)) {
    auto b = std::get_if<Residue>(&o.v_);
    if (!b || b->modulus != a->modulus) mismatch();
    std::uint64_t s = std::uint64_t{a->value} + b->value;
    a->value = static_cast<std::uint32_t>(s >= a->modulus ? s - a->modulus : s);
    return *this;
  }
  auto b = std::get_if<mpq_class>(&o.v_);
  if (!b) mismatch();
  std::get<mpq_class>(v_) += *b;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto a = std::get_if<Residue>(&v_)) {
    auto b = std::get_if<Residue>(&o.v_);
    if (!b || b->modulus != a->modulus) mismatch();
    a->value = static_cast<std::uint32_t>(std::uint64_t{a->value} * b->value % a->modulus);
    return *this;
  }
  auto b = std::get_if<mpq_class>(&o.v_);
  if (!b) mismatch();
  std::get<mpq_class>(v_) *= *b;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (auto x = std::get_if<Scalar::Residue>(&a.v_)) {
    auto y = std::get_if<Scalar::Residue>(&b.v_);
    if (!y || y->modulus != x->modulus) mismatch();
    return x->value == y->value;
  }
  auto y = std::get_if<mpq_class>(&b.v_);
  if (!y) mismatch();
  return std::get<mpq_class>(a.v_) == *y;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (auto r = std::get_if<Residue>(&v_))
    return Scalar(Residue{inverse_mod(r->value, r->modulus), r->modulus});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar base = *this;
  Scalar acc = field().one();
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace vfc
