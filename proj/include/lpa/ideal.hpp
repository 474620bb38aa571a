#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/oracle.hpp"
#include "lpa/polynomial.hpp"
#include "lpa/quotient.hpp"

namespace lpa {

/// u + sum_i k_i g^{r_i}: a unit-normalized polynomial in a cycle g based at
/// u, with g^0 = u.
struct CyclePolynomial {
  VertexId base = 0;
  Cycle cycle;
  FieldPolynomial poly;

  Element element(const GraphPtr& g) const;
};

/// Throws DomainError unless the cycle is a genuine cycle of g based at
/// `base` and the polynomial has constant term 1 and degree >= 1.
void require_valid(const Graph& g, const CyclePolynomial& c);

/// Finite generating set of the form V0 ∪ {v^H : v ∈ S0} ∪ Y. Each breaking
/// generator stands for v^H relative to the H reached by canonicalization.
struct StructuredGeneratorSet {
  Field field;
  VertexSet vertices;
  VertexSet breaking;
  std::vector<CyclePolynomial> cycle_gens;
};

struct TraceStep {
  enum class Kind {
    ExitRange,           // range of a quotient exit enters V0
    CycleMeetsH,         // cycle touches H, its base enters V0
    PrimedExit,          // cycle runs through B_H \ S, vertex joins S
    BreakingInH,         // breaking generator absorbed by H
    BreakingDegenerate,  // v^H = v, vertex moves to V0
    GcdMerge,            // two polynomials at one base replaced by their gcd
    GcdUnit,             // gcd is 1, base enters V0
    Redundant,           // vertex generator implied by the others
  };
  TraceStep(Kind k, VertexId v, std::optional<EdgeRef> e = std::nullopt) : kind(k), vertex(v), edge(e) {}

  Kind kind;
  VertexId vertex = 0;
  std::optional<EdgeRef> edge;
  std::optional<FieldPolynomial> p, q, d, a, b;
};

std::string kind_name(TraceStep::Kind k);
std::string describe(const Graph& g, const TraceStep& step);

struct CanonicalIdealForm {
  VertexSet H;
  VertexSet V0;
  VertexSet S;
  std::vector<CyclePolynomial> Y;  // sorted by base
  std::vector<TraceStep> trace;

  StructuredGeneratorSet as_generators(Field f) const { return {f, V0, S, Y}; }
};

/// Fixpoint of closure, breaking-generator cleanup, exit elimination and gcd
/// merging. The result generates the same ideal as `gens`. V0 is pruned to
/// the vertices that the closure still needs once the ranges of exits of
/// cycles in Y (which those cycle polynomials generate) are taken into
/// account, so H need not equal closure(V0).
CanonicalIdealForm canonicalize(const Graph& g, const StructuredGeneratorSet& gens);

struct OrthogonalGenerator {
  enum class Source { Vertex, Breaking, Cycle };
  VertexId vertex;
  Element y;  // y = vertex * y * vertex
  Source source;
};

/// One generator per distinct vertex; a breaking generator sharing its
/// vertex with a cycle polynomial is dropped (it lies in the cycle's ideal).
std::vector<OrthogonalGenerator> orthogonalize(const GraphPtr& g, Field f, const CanonicalIdealForm& c);

struct InputCheck {
  enum class Status { Algebraic, Oracle, Unverified };
  std::string label;
  Element element;
  Status status = Status::Unverified;
  std::optional<MembershipWitness> witness;  // over the single generator a
};

struct PrincipalCertificate {
  StructuredGeneratorSet input;
  CanonicalIdealForm canonical;
  std::vector<OrthogonalGenerator> orthogonal;
  Element generator;
  std::vector<InputCheck> input_membership;
  std::size_t bound_used = 0;

  bool fully_verified() const;
};

/// canonicalize + orthogonalize + sum, with every identity re-checked by
/// normal form. Throws std::logic_error if a check that must hold fails.
PrincipalCertificate principal_generator(const GraphPtr& g, const StructuredGeneratorSet& gens,
                                         std::size_t verify_bound);

/// Every (H, S) with H hereditary saturated and S ⊆ B_H, ordered by |H|,
/// then H, then |S|, then S.
std::vector<AdmissiblePair> admissible_pairs(const Graph& g, std::size_t max_vertices = 16);

}  // namespace lpa
