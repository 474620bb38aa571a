#include "lpa/polynomial.hpp"

#include <utility>

#include "lpa/error.hpp"

namespace lpa {

FieldPolynomial::FieldPolynomial(Field f, std::vector<Scalar> coefficients)
    : field_(f), coeffs_(std::move(coefficients)) {
  for (const Scalar& c : coeffs_)
    if (c.field() != f) throw DomainError("polynomial coefficient field mismatch");
  trim();
}

FieldPolynomial::FieldPolynomial(Field f, std::initializer_list<long> coefficients) : field_(f) {
  for (long c : coefficients) coeffs_.emplace_back(f, c);
  trim();
}

FieldPolynomial FieldPolynomial::constant(const Scalar& c) { return FieldPolynomial(c.field(), {c}); }

void FieldPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar FieldPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

FieldPolynomial FieldPolynomial::unit_normalized() const {
  const Scalar c0 = coefficient(0);
  if (c0.is_zero()) throw DomainError("cannot unit-normalize a polynomial with zero constant term");
  return c0.inverse() * *this;
}

FieldPolynomial FieldPolynomial::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

FieldPolynomial& FieldPolynomial::operator+=(const FieldPolynomial& o) {
  if (o.field_ != field_) throw DomainError("polynomial field mismatch");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

FieldPolynomial& FieldPolynomial::operator-=(const FieldPolynomial& o) {
  return *this += Scalar(field_, -1) * o;
}

FieldPolynomial operator*(const FieldPolynomial& a, const FieldPolynomial& b) {
  if (a.field_ != b.field_) throw DomainError("polynomial field mismatch");
  if (a.is_zero() || b.is_zero()) return FieldPolynomial(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return FieldPolynomial(a.field_, std::move(out));
}

FieldPolynomial operator*(const Scalar& k, FieldPolynomial a) {
  for (Scalar& c : a.coeffs_) c *= k;
  a.trim();
  return a;
}

std::string FieldPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.is_negative() ? " - " : " + ";
    else if (c.is_negative()) out += "-";
    const std::string mag = c.magnitude_str();
    if (i == 0) {
      out += mag;
      continue;
    }
    if (!(c.field().is_rational() && mag == "1")) out += mag + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

PolyDivision divide(const FieldPolynomial& p, const FieldPolynomial& q) {
  if (q.is_zero()) throw DomainError("polynomial division by zero");
  const Field f = p.field();
  FieldPolynomial rem = p;
  std::vector<Scalar> quot(std::max(0, p.degree() - q.degree() + 1), Scalar::zero(f));
  const Scalar lead_inv = q.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= q.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - q.degree());
    const Scalar c = rem.leading() * lead_inv;
    quot[shift] = c;
    std::vector<Scalar> term(shift + 1, Scalar::zero(f));
    term[shift] = c;
    rem -= FieldPolynomial(f, std::move(term)) * q;
  }
  return {FieldPolynomial(f, std::move(quot)), rem};
}

GcdBezout poly_gcd_bezout(const FieldPolynomial& p, const FieldPolynomial& q) {
  if (p.field() != q.field()) throw DomainError("polynomial field mismatch");
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  const Field f = p.field();

  // Invariant: r0 = s0*p + t0*q and r1 = s1*p + t1*q.
  FieldPolynomial r0 = p, r1 = q;
  FieldPolynomial s0 = FieldPolynomial::constant(Scalar::one(f)), s1(f);
  FieldPolynomial t0(f), t1 = FieldPolynomial::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    PolyDivision qr = divide(r0, r1);
    FieldPolynomial s2 = s0 - qr.quotient * s1;
    FieldPolynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Scalar c0 = r0.coefficient(0);
  const Scalar scale = (c0.is_zero() ? r0.leading() : c0).inverse();
  return {scale * r0, scale * s0, scale * t0};
}

}  // namespace lpa
