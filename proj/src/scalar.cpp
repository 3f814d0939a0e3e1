#include "p1p1/scalar.hpp"

namespace p1p1 {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = (unsigned __int128)(r)*b % p;
    b = (unsigned __int128)(b)*b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rationals() ? "QQ" : "F_" + std::to_string(p_);
}

Scalar Scalar::from_int(Field f, long n) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = n;
  } else {
    long p = f.modulus();
    long r = n % p;
    if (r < 0) r += p;
    s.val_ = (std::uint64_t)r;
  }
  return s;
}

Scalar Scalar::rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw std::domain_error("division by zero");
  Scalar s(Field::rationals());
  s.rat_ = mpq_class(n, d);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::prime_element(Field f, const mpz_class& value) {
  if (f.is_rationals()) throw std::invalid_argument("prime_element requires a prime field");
  Scalar s(f);
  mpz_class r = value % f.modulus();
  if (r < 0) r += f.modulus();
  s.val_ = r.get_ui();
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : val_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : val_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw std::invalid_argument("mixed fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ + o.rat_;
  else
    s.val_ = (val_ + o.val_) % field_.modulus();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ - o.rat_;
  else
    s.val_ = (val_ + field_.modulus() - o.val_) % field_.modulus();
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ * o.rat_;
  else
    s.val_ = (unsigned __int128)(val_)*o.val_ % field_.modulus();
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = -rat_;
  else
    s.val_ = val_ == 0 ? 0 : field_.modulus() - val_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("not invertible");
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.rat_ = 1 / rat_;
  } else {
    // Fermat: a^(p-2) mod p
    s.val_ = mod_pow(val_, field_.modulus() - 2, field_.modulus());
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rationals() ? rat_ == o.rat_ : val_ == o.val_;
}

std::string Scalar::str() const {
  if (!field_.is_rationals()) return std::to_string(val_);
  if (rat_.get_den() == 1) return rat_.get_num().get_str();
  return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
}

Scalar Scalar::parse(const std::string& text, Field f) {
  if (text.empty()) throw std::invalid_argument("empty scalar string");
  auto slash = text.find('/');
  try {
    if (f.is_rationals()) {
      if (slash == std::string::npos) {
        mpz_class n(text);
        return rational(n, 1);
      }
      mpz_class n(text.substr(0, slash));
      mpz_class d(text.substr(slash + 1));
      return rational(n, d);
    }
    if (slash != std::string::npos) {
      mpz_class n(text.substr(0, slash));
      mpz_class d(text.substr(slash + 1));
      return prime_element(f, n) / prime_element(f, d);
    }
    return prime_element(f, mpz_class(text));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bad scalar string: \"" + text + "\"");
  }
}

}  // namespace p1p1
