#pragma once

#include <map>
#include <memory>
#include <optional>

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

using GraphPtr = std::shared_ptr<const Graph>;

/// The monomial alpha beta^*. Both paths end at the same vertex; `beta` is
/// stored in forward orientation.
struct Monomial {
  Path alpha;
  Path beta;

  std::size_t length() const { return alpha.length() + beta.length(); }
  VertexId left_vertex() const { return alpha.source; }
  VertexId right_vertex() const { return beta.source; }

  static Monomial vertex(VertexId v) { return {Path::vertex(v), Path::vertex(v)}; }
  static Monomial real(const Path& p) { return {p, Path::vertex(p.range)}; }
  static Monomial ghost(const Path& p) { return {Path::vertex(p.range), p}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Deterministic order: total length, then alpha, then beta.
bool operator<(const Monomial& a, const Monomial& b);

/// (alpha beta^*)(gamma delta^*) in the path algebra with CK-1 applied; the
/// result is a single monomial or zero. Not basis-reduced.
std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& a, const Monomial& b);

/// alpha beta^* -> beta alpha^*.
inline Monomial adjoint(const Monomial& m) { return {m.beta, m.alpha}; }

/// True if the monomial is reducible by the CK-2 rewrite at its middle
/// junction (both paths end in the designated edge of a regular vertex).
bool is_reducible(const Graph& g, const Monomial& m);

/// Finite K-linear combination of monomials over one graph.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element(GraphPtr graph, Field field) : graph_(std::move(graph)), field_(field) {}

  static Element vertex(GraphPtr g, Field f, VertexId v);
  static Element edge(GraphPtr g, Field f, EdgeRef e);
  static Element ghost(GraphPtr g, Field f, EdgeRef e);
  static Element path(GraphPtr g, Field f, const Path& p);
  static Element monomial(GraphPtr g, Field f, const Monomial& m, const Scalar& k);
  /// The sum of all vertices: the unit of the algebra of a finite graph.
  static Element identity(GraphPtr g, Field f);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t max_length() const;

  /// Raw accumulation; does not normalize.
  void add_term(const Monomial& m, const Scalar& k);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& k);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& k) { return a *= k; }
  friend Element operator*(const Scalar& k, Element a) { return a *= k; }
  /// Same as multiply().
  friend Element operator*(const Element& a, const Element& b);

  /// Term maps compared directly; meaningful for normal forms.
  friend bool operator==(const Element& a, const Element& b);

  /// Throws DomainError if the ambient graph or field differs.
  void require_compatible(const Element& o) const;

 private:
  GraphPtr graph_;
  Field field_;
  Terms terms_;
};

/// Canonical basis form: repeatedly replaces alpha0 f (beta0 f)^* with
/// alpha0 beta0^* - sum_{e != f, s(e) = s(f)} (alpha0 e)(beta0 e)^* where f is
/// the designated edge at s(f).
Element normal_form(const Element& x);
Element multiply(const Element& x, const Element& y);
Element involution(const Element& x);

}  // namespace lpa
