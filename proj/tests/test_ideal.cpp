#include <doctest.h>

#include <algorithm>

#include "lpa/error.hpp"
#include "lpa/ideal.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {

CyclePolynomial cyc(const GraphPtr& g, const char* base, std::initializer_list<const char*> edges,
                    std::initializer_list<long> poly, Field f = Field::rationals()) {
  std::vector<EdgeRef> steps;
  for (const char* e : edges) steps.push_back(g->edge(e));
  return CyclePolynomial{g->vertex(base), Cycle{g->make_path(g->vertex(base), steps)}, FieldPolynomial(f, poly)};
}

StructuredGeneratorSet gens(std::vector<CyclePolynomial> ys, VertexSet v0 = {}, VertexSet s = {}) {
  return {Field::rationals(), std::move(v0), std::move(s), std::move(ys)};
}

}  // namespace

TEST_CASE("canonicalize merges by gcd") {
  const GraphPtr r1 = fixture("R1");
  const CanonicalIdealForm c = canonicalize(*r1, gens({cyc(r1, "v", {"g"}, {1, 2, 1}), cyc(r1, "v", {"g"}, {1, 1})}));
  CHECK(c.H.empty());
  REQUIRE(c.Y.size() == 1);
  CHECK(c.Y[0].poly == FieldPolynomial(Field::rationals(), {1, 1}));
  REQUIRE(c.trace.size() == 1);
  CHECK(c.trace[0].kind == TraceStep::Kind::GcdMerge);
}

TEST_CASE("unit gcd puts the base in H") {
  const GraphPtr r1 = fixture("R1");
  const CanonicalIdealForm c = canonicalize(*r1, gens({cyc(r1, "v", {"g"}, {1, 1}), cyc(r1, "v", {"g"}, {1, 3})}));
  CHECK(c.H == vset(*r1, {"v"}));
  CHECK(c.V0 == vset(*r1, {"v"}));
  CHECK(c.Y.empty());
}

TEST_CASE("exit ranges join the ideal") {
  // In T the ideal of v + f contains w = e^*(v + f)e. Modulo w the algebra is
  // K[x, 1/x] and v + f maps to the non-unit 1 + x, so v stays out.
  const GraphPtr t = fixture("T");
  const CanonicalIdealForm c = canonicalize(*t, gens({cyc(t, "v", {"f"}, {1, 1})}));
  CHECK(c.H == vset(*t, {"w"}));
  CHECK(c.V0.empty());
  REQUIRE(c.Y.size() == 1);
  CHECK(c.trace.front().kind == TraceStep::Kind::ExitRange);

  // With a unit gcd everything collapses.
  const CanonicalIdealForm all = canonicalize(*t, gens({cyc(t, "v", {"f"}, {1, 1}), cyc(t, "v", {"f"}, {1, -1})}));
  CHECK(all.H == vset(*t, {"v", "w"}));
  CHECK(all.Y.empty());
}

TEST_CASE("breaking generators follow the final H") {
  const GraphPtr b = fixture("B");
  // v^H with H = {h} reached from the vertex generator h
  const CanonicalIdealForm c = canonicalize(*b, gens({}, vset(*b, {"h"}), vset(*b, {"w"})));
  CHECK(c.H == vset(*b, {"h"}));
  CHECK(c.S == vset(*b, {"w"}));

  // once u joins, w has no edge leaving H and v^H degenerates to w
  const CanonicalIdealForm d = canonicalize(*b, gens({}, vset(*b, {"h", "u"}), vset(*b, {"w"})));
  CHECK(d.H == vset(*b, {"h", "u", "w"}));
  CHECK(d.S.empty());
  CHECK(std::any_of(d.trace.begin(), d.trace.end(),
                    [](const TraceStep& s) { return s.kind == TraceStep::Kind::BreakingDegenerate; }));

  // H empty: w is not a breaking vertex
  CHECK_THROWS_AS(canonicalize(*b, gens({}, {}, vset(*b, {"w"}))), DomainError);
}

TEST_CASE("cycles through a primed vertex force it into S") {
  // v -> w -> v with w an infinite emitter breaking for H = {h}
  GraphDescription d;
  d.vertices = {"h", "v", "w"};
  d.edges = {{"a", "v", "w"}, {"c", "w", "v"}};
  d.bundles = {{"b", "w", "h"}};
  const GraphPtr g = std::make_shared<const Graph>(Graph::validate(d));
  const CanonicalIdealForm c = canonicalize(*g, gens({cyc(g, "v", {"a", "c"}, {1, 1})}, vset(*g, {"h"})));
  CHECK(c.H == vset(*g, {"h"}));
  CHECK(c.S == vset(*g, {"w"}));
  CHECK(c.Y.size() == 1);
  const QuotientPresentation qp = quotient_graph(g, {c.H, c.S});
  for (const Cycle& cy : cycles(*qp.graph)) CHECK(cycle_exits(*qp.graph, cy, {}).empty());
}

TEST_CASE("canonicalize is idempotent") {
  const GraphPtr g = fixture("mixed8");
  const auto in = gens({cyc(g, "r", {"rr"}, {1, 2}), cyc(g, "z", {"zz"}, {1, 0, 1})}, vset(*g, {"s"}));
  const CanonicalIdealForm c = canonicalize(*g, in);
  const CanonicalIdealForm again = canonicalize(*g, c.as_generators(Field::rationals()));
  CHECK(again.H == c.H);
  CHECK(again.S == c.S);
  CHECK(again.Y.size() == c.Y.size());
  for (std::size_t i = 0; i < c.Y.size() && i < again.Y.size(); ++i) CHECK(again.Y[i].poly == c.Y[i].poly);
}

TEST_CASE("exit elimination order does not change H") {
  const GraphPtr g = fixture("mixed8");
  std::vector<CyclePolynomial> ys = {cyc(g, "p", {"pq", "qp"}, {1, 1}), cyc(g, "r", {"rr"}, {1, 2}),
                                     cyc(g, "x", {"xx"}, {1, 0, 3})};
  std::sort(ys.begin(), ys.end(), [](const auto& a, const auto& b) { return a.base < b.base; });
  const VertexSet h = canonicalize(*g, gens(ys)).H;
  do {
    CHECK(canonicalize(*g, gens(ys)).H == h);
  } while (std::next_permutation(ys.begin(), ys.end(), [](const auto& a, const auto& b) { return a.base < b.base; }));
}

TEST_CASE("orthogonalize examples") {
  const Field q = Field::rationals();
  const GraphPtr two = fixture("two_loops");
  CanonicalIdealForm c = canonicalize(*two, gens({cyc(two, "v1", {"g1"}, {1, 1}), cyc(two, "v2", {"g2"}, {1, 1})}));
  auto og = orthogonalize(two, q, c);
  REQUIRE(og.size() == 2);
  CHECK(format_element(og[0].y) == "v1 + g1");
  CHECK(format_element(og[1].y) == "v2 + g2");

  const GraphPtr bp = fixture("Bprime");
  CanonicalIdealForm manual;
  manual.H = vset(*bp, {"h"});
  manual.S = vset(*bp, {"v"});
  manual.Y = {cyc(bp, "v", {"g"}, {1, 1})};
  og = orthogonalize(bp, q, manual);
  REQUIRE(og.size() == 1);
  CHECK(format_element(og[0].y) == "v + g");

  const GraphPtr l2 = fixture("L2");
  CanonicalIdealForm single;
  single.V0 = single.H = vset(*l2, {"u", "v"});
  single.V0 = vset(*l2, {"u"});
  og = orthogonalize(l2, q, single);
  REQUIRE(og.size() == 1);
  CHECK(format_element(og[0].y) == "u");
}

TEST_CASE("principal generator examples") {
  const GraphPtr r1 = fixture("R1");
  PrincipalCertificate c =
      principal_generator(r1, gens({cyc(r1, "v", {"g"}, {1, 2, 1}), cyc(r1, "v", {"g"}, {1, 1})}), 6);
  CHECK(format_element(c.generator) == "v + g");
  CHECK(c.fully_verified());

  const GraphPtr two = fixture("two_loops");
  c = principal_generator(two, gens({cyc(two, "v1", {"g1"}, {1, 1}), cyc(two, "v2", {"g2"}, {1, 1})}), 6);
  CHECK(c.generator == el(two, "v1 + g1 + v2 + g2"));
  const Element v1 = el(two, "v1");
  CHECK(format_element(v1 * c.generator * v1) == "v1 + g1");

  const GraphPtr bp = fixture("Bprime");
  c = principal_generator(bp, gens({cyc(bp, "v", {"g"}, {1, 1})}, {}, vset(*bp, {"v"})), 6);
  CHECK(format_element(c.generator) == "v + g");
  REQUIRE(c.input_membership.size() == 2);
  CHECK(format_element(c.input_membership[0].element) == "v - g.g*");
  CHECK(c.fully_verified());
  for (const InputCheck& in : c.input_membership)
    CHECK(check_witness(*in.witness, {c.generator}, in.element));
}

TEST_CASE("graded inputs stay in the graded ideal") {
  // Y empty at the fixpoint: every input lies in I(H, S).
  const GraphPtr b = fixture("B");
  const auto in = gens({}, vset(*b, {"h"}), vset(*b, {"w"}));
  const CanonicalIdealForm c = canonicalize(*b, in);
  REQUIRE(c.Y.empty());
  const QuotientPresentation qp = quotient_graph(b, {c.H, c.S});
  CHECK(graded_membership(qp, el(b, "h")));
  CHECK(graded_membership(qp, breaking_element(b, Field::rationals(), c.H, b->vertex("w"))));
}

TEST_CASE("admissible pairs") {
  const GraphPtr t = fixture("T");
  auto names = [](const Graph& g, const std::vector<AdmissiblePair>& ps) {
    std::vector<std::string> out;
    for (const AdmissiblePair& p : ps) out.push_back(g.set_name(p.H) + "|" + g.set_name(p.S));
    return out;
  };
  CHECK(names(*t, admissible_pairs(*t)) == std::vector<std::string>{"{}|{}", "{w}|{}", "{v, w}|{}"});
  const GraphPtr r1 = fixture("R1");
  CHECK(names(*r1, admissible_pairs(*r1)) == std::vector<std::string>{"{}|{}", "{v}|{}"});
  const GraphPtr b = fixture("B");
  const auto pb = admissible_pairs(*b);
  CHECK(std::count(pb.begin(), pb.end(), AdmissiblePair{vset(*b, {"h"}), {}}) == 1);
  CHECK(std::count(pb.begin(), pb.end(), AdmissiblePair{vset(*b, {"h"}), vset(*b, {"w"})}) == 1);
  for (const char* name : {"mixed6", "mixed8", "chain12"}) {
    const GraphPtr g = fixture(name);
    std::size_t expected = 0;
    for (const VertexSet& h : bf_hereditary_saturated_sets(*g)) expected += 1u << breaking_vertices(*g, h).size();
    CHECK(admissible_pairs(*g).size() == expected);
  }
  CHECK_THROWS_AS(admissible_pairs(*fixture("chain12"), 8), DomainError);
}
