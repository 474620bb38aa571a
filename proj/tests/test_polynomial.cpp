#include <doctest.h>

#include "lpa/error.hpp"
#include "lpa/polynomial.hpp"

using namespace lpa;

namespace {

void check_bezout(const FieldPolynomial& p, const FieldPolynomial& q, const GcdBezout& r) {
  CHECK(r.a * p + r.b * q == r.d);
  if (!r.d.is_zero()) {
    CHECK(divide(p, r.d).remainder.is_zero());
    CHECK(divide(q, r.d).remainder.is_zero());
  }
}

}  // namespace

TEST_CASE("gcd of (1+x)^2 and 1+x") {
  const Field q = Field::rationals();
  const FieldPolynomial p(q, {1, 2, 1}), r(q, {1, 1});
  const GcdBezout g = poly_gcd_bezout(p, r);
  CHECK(g.d == FieldPolynomial(q, {1, 1}));
  CHECK(g.a.is_zero());
  CHECK(g.b == FieldPolynomial(q, {1}));
  check_bezout(p, r, g);
}

TEST_CASE("coprime inputs give the constant 1") {
  const Field q = Field::rationals();
  const FieldPolynomial p(q, {1, 1}), r(q, {1, 3});
  const GcdBezout g = poly_gcd_bezout(p, r);
  CHECK(g.d == FieldPolynomial(q, {1}));
  check_bezout(p, r, g);
}

TEST_CASE("gcd with zero rescales to d(0) = 1") {
  const Field q = Field::rationals();
  const FieldPolynomial p(q, {2, 4, 6});
  const GcdBezout g = poly_gcd_bezout(p, FieldPolynomial(q));
  CHECK(g.d == FieldPolynomial(q, {1, 2, 3}));
  check_bezout(p, FieldPolynomial(q), g);
  CHECK_THROWS_AS(poly_gcd_bezout(FieldPolynomial(q), FieldPolynomial(q)), DomainError);
}

TEST_CASE("gcd without constant term is monic") {
  const Field q = Field::rationals();
  const FieldPolynomial p(q, {0, 2, 2}), r(q, {0, 0, 3});
  const GcdBezout g = poly_gcd_bezout(p, r);
  CHECK(g.d == FieldPolynomial(q, {0, 1}));
  check_bezout(p, r, g);
}

TEST_CASE("gcd over a prime field") {
  const Field f = Field::prime(5);
  // x^2 - 1 = (x - 1)(x + 1) and x^2 + 2x + 1 = (x + 1)^2
  const FieldPolynomial p(f, {-1, 0, 1}), r(f, {1, 2, 1});
  const GcdBezout g = poly_gcd_bezout(p, r);
  CHECK(g.d == FieldPolynomial(f, {1, 1}));
  check_bezout(p, r, g);
}

TEST_CASE("division and printing") {
  const Field q = Field::rationals();
  const PolyDivision d = divide(FieldPolynomial(q, {1, 0, 0, 1}), FieldPolynomial(q, {1, 1}));
  CHECK(d.quotient == FieldPolynomial(q, {1, -1, 1}));
  CHECK(d.remainder.is_zero());
  CHECK(FieldPolynomial(q, {1, 2, 1}).str() == "1 + 2*x + x^2");
  CHECK(FieldPolynomial(q, {2, 4}).unit_normalized() == FieldPolynomial(q, {1, 2}));
  CHECK_THROWS_AS(divide(FieldPolynomial(q, {1}), FieldPolynomial(q)), DomainError);
}
