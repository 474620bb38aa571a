#include <doctest.h>

#include "lpa/oracle.hpp"
#include "lpa/quotient.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::test;

TEST_CASE("oracle finds one-term witnesses") {
  const GraphPtr r1 = fixture("R1");
  const Element x = el(r1, "g.g.g");
  const OracleResult r = membership_oracle({el(r1, "v")}, x, 4);
  REQUIRE(r.found());
  CHECK(check_witness(*r.witness, {el(r1, "v")}, x));
  CHECK(r.witness->combination.size() == 1);
}

TEST_CASE("oracle is reflexive") {
  const GraphPtr t = fixture("T");
  const Element x = el(t, "2*f.e - e.e*");
  const OracleResult r = membership_oracle({x}, x, 0);
  REQUIRE(r.found());
  CHECK(evaluate_witness(*r.witness, {x}) == x);
}

TEST_CASE("oracle reports inconclusive outside the ideal") {
  const GraphPtr t = fixture("T");
  for (std::size_t bound : {0u, 2u, 4u}) CHECK_FALSE(membership_oracle({el(t, "w")}, el(t, "v"), bound).found());
  CHECK_FALSE(graded_membership(quotient_graph(t, {vset(*t, {"w"}), {}}), el(t, "v")));
}

TEST_CASE("oracle uses bundle members from the inputs") {
  const GraphPtr b = fixture("B");
  const Element x = el(b, "b[5].b[5]*");
  const OracleResult r = membership_oracle({el(b, "h")}, x, 2);
  REQUIRE(r.found());
  CHECK(check_witness(*r.witness, {el(b, "h")}, x));
}

TEST_CASE("oracle needs two-sided factors") {
  const GraphPtr bp = fixture("Bprime");
  // v - g g* = (v - g g*) (v + g) ... found by search
  const Element x = el(bp, "v - g.g*");
  const OracleResult r = membership_oracle({el(bp, "v + g")}, x, 4);
  REQUIRE(r.found());
  CHECK(check_witness(*r.witness, {el(bp, "v + g")}, x));
}

TEST_CASE("basis monomials are irreducible") {
  const GraphPtr rose = fixture("rose2");
  const auto ms = basis_monomials(*rose, 2);
  for (const Monomial& m : ms) CHECK_FALSE(is_reducible(*rose, m));
  // length 0: v; length 1: e, f, e*, f*; length 2: 4 + 4 + (e f*, f e*, f f*)
  CHECK(ms.size() == 1 + 4 + 11);
}
