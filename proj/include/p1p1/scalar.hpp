#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace p1p1 {

/// Coefficient field descriptor: the rationals, or a prime field F_p.
/// The modulus is fixed per computation; elements carry their field so
/// cross-field arithmetic can be rejected at runtime.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t modulus() const { return p_; }

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

  std::string name() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;  // 0 = rationals
};

/// An element of the coefficient field. Immutable value type; all
/// arithmetic is exact. Rationals are kept in canonical reduced form
/// with positive denominator; prime-field values in [0, p).
class Scalar {
 public:
  explicit Scalar(Field f) : field_(f), rat_(0), val_(0) {}  // zero

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, long n);
  /// Canonical reduced rational n/d. Throws on d = 0.
  static Scalar rational(const mpz_class& n, const mpz_class& d);
  static Scalar rational(long n, long d) { return rational(mpz_class(n), mpz_class(d)); }
  static Scalar prime_element(Field f, const mpz_class& value);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Rational value; only valid over the rationals.
  const mpq_class& rat() const { return rat_; }
  /// Canonical representative in [0, p); only valid over F_p.
  std::uint64_t residue() const { return val_; }

  /// "n/d" or "n" over the rationals, decimal string over F_p.
  std::string str() const;
  static Scalar parse(const std::string& text, Field f);

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;       // used when field is QQ
  std::uint64_t val_;   // used when field is F_p
};

}  // namespace p1p1
