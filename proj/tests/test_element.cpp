#include <doctest.h>

#include <random>

#include "lpa/error.hpp"
#include "lpa/quotient.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {

std::string nf(const GraphPtr& g, const std::string& text) { return format_element(el(g, text)); }

}  // namespace

TEST_CASE("normal form examples") {
  const GraphPtr r1 = fixture("R1");
  CHECK(nf(r1, "g*.g") == "v");
  CHECK(nf(r1, "g.g*") == "v");  // the only out-edge is designated
  const GraphPtr rose = fixture("rose2");
  CHECK(nf(rose, "e.e*") == "v - f.f*");
  CHECK(nf(rose, "v") == "v");
  CHECK(el(rose, "v - v").is_zero());
  CHECK(nf(rose, "0") == "0");
}

TEST_CASE("products") {
  const GraphPtr t = fixture("T");
  CHECK(el(t, "v.w").is_zero());
  CHECK(multiply(el(t, "v"), el(t, "w")).is_zero());
  CHECK(multiply(el(t, "e*"), el(t, "f")).is_zero());
  CHECK(nf(t, "e*.f") == "0");
  const GraphPtr r1 = fixture("R1");
  CHECK(format_element(multiply(el(r1, "v + g"), el(r1, "v - g"))) == "v - g.g");
  CHECK(format_element(el(r1, "g") * el(r1, "g*")) == "v");
  CHECK_THROWS_AS(multiply(el(r1, "v"), el(t, "v")), DomainError);
  CHECK_THROWS_AS(multiply(el(r1, "v"), el(r1, "v", Field::prime(3))), DomainError);
}

TEST_CASE("involution") {
  const GraphPtr t = fixture("T");
  const Element es = involution(el(t, "e"));
  REQUIRE(es.terms().size() == 1);
  const Monomial& m = es.terms().begin()->first;
  CHECK(m.alpha.length() == 0);
  CHECK(m.alpha.source == t->vertex("w"));
  CHECK(m.beta.steps == std::vector<EdgeRef>{t->edge("e")});
  const GraphPtr r1 = fixture("R1");
  const Element g = el(r1, "g");
  CHECK(involution(g * g) == involution(g) * involution(g));
  CHECK(format_element(involution(g * g)) == "g*.g*");
}

TEST_CASE("breaking elements") {
  const Field q = Field::rationals();
  const GraphPtr b = fixture("B");
  const Element wh = breaking_element(b, q, vset(*b, {"h"}), b->vertex("w"));
  CHECK(format_element(wh) == "w - c.c*");
  CHECK(wh * wh == wh);
  const GraphPtr b2 = fixture("B2");
  CHECK(format_element(breaking_element(b2, q, vset(*b2, {"h"}), b2->vertex("w"))) == "w - c.c* - c2.c2*");
  CHECK_THROWS_AS(breaking_element(b, q, vset(*b, {"h"}), b->vertex("u")), DomainError);
}

TEST_CASE("expression parsing") {
  const GraphPtr r1 = fixture("R1");
  CHECK(nf(r1, "v + 2*g.g") == "v + 2*g.g");
  CHECK(nf(r1, "2 * (v + g) - g") == "2*v + g");
  CHECK(nf(r1, "-1/2*g^*") == "-1/2*g*");
  CHECK(nf(r1, "3") == "3*v");
  const GraphPtr b = fixture("B");
  const Element x = el(b, "b[3].b[3]*");
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms().begin()->first.alpha.steps == std::vector<EdgeRef>{b->edge("b", 3)});
  CHECK(nf(b, "b[3]*.b[2]") == "0");
  CHECK(nf(b, "b[3]*.b[3]") == "h");
  CHECK(format_element(el(r1, "4 mod 7*g", Field::prime(7))) == "4 mod 7*g");
}

TEST_CASE("expression errors carry offsets") {
  const GraphPtr t = fixture("T");
  auto offset = [&](const char* text) {
    try {
      el(t, text);
    } catch (const ParseError& e) {
      return e.location();
    }
    return std::string("accepted");
  };
  CHECK(offset("v + x") == "4");
  CHECK(offset("e.f") == "1");
  CHECK(offset("v + 1/0*w") == "6");
  CHECK(offset("v +") == "3");
  CHECK(offset("v $ w") == "2");
  CHECK(offset("e[1]") == "1");
  const GraphPtr b = fixture("B");
  CHECK_THROWS_AS(el(b, "b"), ParseError);
  CHECK_THROWS_AS(el(t, "1 mod 7*v"), ParseError);
}

TEST_CASE("printing round-trips") {
  std::mt19937 rng(7);
  for (const char* name : {"R1", "T", "L2", "rose2", "B", "mixed6"}) {
    const GraphPtr g = fixture(name);
    for (int i = 0; i < 40; ++i) {
      const Element x = random_element(g, Field::rationals(), rng);
      CHECK(el(g, format_element(x)) == x);
      const Element y = random_element(g, Field::prime(13), rng);
      CHECK(el(g, format_element(y), Field::prime(13)) == y);
    }
  }
}

TEST_CASE("ring laws on random elements") {
  std::mt19937 rng(11);
  for (const char* name : {"R1", "T", "rose2", "B", "mixed6"}) {
    CAPTURE(name);
    const GraphPtr g = fixture(name);
    const Field q = Field::rationals();
    const Element one = Element::identity(g, q);
    for (int i = 0; i < 25; ++i) {
      const Element x = random_element(g, q, rng), y = random_element(g, q, rng), z = random_element(g, q, rng);
      CHECK(normal_form(x) == x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(involution(involution(x)) == x);
      CHECK(involution(x * y) == involution(y) * involution(x));
      CHECK(one * x == x);
      CHECK(x * one == x);
    }
  }
}

TEST_CASE("CK-2 residual vanishes at regular vertices") {
  for (const char* name : {"R1", "T", "rose2", "B2", "mixed8", "chain12"}) {
    const GraphPtr g = fixture(name);
    const Field q = Field::rationals();
    for (VertexId v = 0; v < g->vertex_count(); ++v) {
      if (!g->is_regular(v)) continue;
      Element r = Element::vertex(g, q, v);
      for (ArrowId a : g->out_edges(v)) {
        Element e = Element::edge(g, q, {a, 0});
        r -= e * involution(e);
      }
      CHECK(normal_form(r).is_zero());
    }
  }
}
