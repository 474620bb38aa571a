#pragma once

#include <string>
#include <vector>

#include "lpa/scalar.hpp"

namespace lpa {

/// Dense univariate polynomial over a Field; coefficient i multiplies x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
class FieldPolynomial {
 public:
  explicit FieldPolynomial(Field f) : field_(f) {}
  FieldPolynomial(Field f, std::vector<Scalar> coefficients);
  /// Small-integer convenience constructor.
  FieldPolynomial(Field f, std::initializer_list<long> coefficients);

  static FieldPolynomial constant(const Scalar& c);

  Field field() const { return field_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coefficient(std::size_t i) const;
  Scalar leading() const { return coefficient(coeffs_.size() - 1); }

  /// Rescales so the constant term is 1; requires coefficient(0) != 0.
  FieldPolynomial unit_normalized() const;
  FieldPolynomial monic() const;

  FieldPolynomial& operator+=(const FieldPolynomial& o);
  FieldPolynomial& operator-=(const FieldPolynomial& o);
  friend FieldPolynomial operator+(FieldPolynomial a, const FieldPolynomial& b) { return a += b; }
  friend FieldPolynomial operator-(FieldPolynomial a, const FieldPolynomial& b) { return a -= b; }
  friend FieldPolynomial operator*(const FieldPolynomial& a, const FieldPolynomial& b);
  friend FieldPolynomial operator*(const Scalar& k, FieldPolynomial a);
  friend bool operator==(const FieldPolynomial&, const FieldPolynomial&) = default;

  std::string str() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> coeffs_;
};

struct PolyDivision {
  FieldPolynomial quotient;
  FieldPolynomial remainder;
};
PolyDivision divide(const FieldPolynomial& p, const FieldPolynomial& q);

/// d = gcd(p, q) with d = a*p + b*q. d is rescaled to d(0) = 1 when its
/// constant term is nonzero, and made monic otherwise.
struct GcdBezout {
  FieldPolynomial d;
  FieldPolynomial a;
  FieldPolynomial b;
};
GcdBezout poly_gcd_bezout(const FieldPolynomial& p, const FieldPolynomial& q);

}  // namespace lpa
