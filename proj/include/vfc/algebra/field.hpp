#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace vfc {

class Scalar;

/// The base field: F_p for a prime p < 2^31, or the rationals (characteristic 0).
class Field {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  Field() = default;  // rationals
  static Field rationals() { return Field{}; }
  /// Validates primality by trial division; throws InvalidArgument otherwise.
  static Field characteristic(std::uint64_t p);

  std::uint32_t p() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Decimal text, optionally "a/b". In F_p the value is reduced.
  Scalar parse(std::string_view text) const;

  friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(Field a, Field b) noexcept { return a.p_ != b.p_; }

  std::string name() const;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a Field. Arithmetic between elements of different fields
/// throws FieldMismatch.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  Scalar() : v_(mpq_class(0)) {}
  Scalar(Residue r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p). Only valid in F_p.
  std::uint32_t residue() const { return std::get<Residue>(v_).value; }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  std::string to_string() const;

 private:
  std::variant<Residue, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Modular inverse for 0 < a < p, p prime.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace vfc
