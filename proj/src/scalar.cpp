#include "lpa/scalar.hpp"

#include <ostream>

#include "lpa/error.hpp"

namespace lpa {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw DomainError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 10 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--field", text, "malformed field modulus");
    return prime(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw ParseError("--field", text, "unknown field (expected q or fp:<p>)");
}

std::string Field::name() const {
  return is_rational() ? "q" : "fp:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational())
    q_ = value;
  else
    r_ = reduce(mpz_class(value), field.modulus());
}

Scalar::Scalar(Field field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (den == 0) throw DomainError("zero denominator");
  if (field.is_rational()) {
    q_ = mpq_class(num, den);
    q_.canonicalize();
  } else {
    const std::uint32_t d = reduce(den, field.modulus());
    if (d == 0) throw DomainError("denominator vanishes in " + field.name());
    Scalar n(field, 0);
    n.r_ = reduce(num, field.modulus());
    Scalar dd(field, 0);
    dd.r_ = d;
    r_ = (n / dd).r_;
  }
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }
bool Scalar::is_negative() const { return field_.is_rational() && q_ < 0; }

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw DomainError("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + o.r_) % field_.modulus());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * o.r_ % field_.modulus());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return a.field_.modulus() < b.field_.modulus();
  return a.field_.is_rational() ? a.q_ < b.q_ : a.r_ < b.r_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(field_.modulus());
}

std::string Scalar::magnitude_str() const {
  if (field_.is_rational()) return mpq_class(abs(q_)).get_str();
  return str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace lpa
