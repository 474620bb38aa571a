#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace lpa {

/// The coefficient field: exact rationals (modulus 0) or GF(p) for a prime
/// p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  /// Accepts "q" or "fp:<p>".
  static Field parse(const std::string& text);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms with positive
/// denominator; residues in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// True when the printed form carries a leading minus (rationals only).
  bool is_negative() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Arbitrary total order for use as container keys.
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// `-3/2` for rationals, `5 mod 7` for residues.
  std::string str() const;
  /// Absolute value rendering for rationals; identical to str() for residues.
  std::string magnitude_str() const;

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace lpa
