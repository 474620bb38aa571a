#pragma once

#include <map>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph_algorithms.hpp"

namespace lpa {

/// Hereditary saturated H together with chosen breaking vertices S ⊆ B_H.
struct AdmissiblePair {
  VertexSet H;
  VertexSet S;
  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// Throws DomainError unless `pair` is admissible for g.
void require_admissible(const Graph& g, const AdmissiblePair& pair);

/// The quotient graph E\(H,S) and the images of E's generators under the
/// canonical epimorphism onto its Leavitt path algebra.
struct QuotientPresentation {
  GraphPtr source;
  AdmissiblePair pair;
  VertexSet breaking;  // B_H
  GraphPtr graph;

  /// v in B_H\S -> the new sink v'.
  std::map<VertexId, VertexId> primed_vertices;
  /// Retained arrow with range in B_H\S -> its primed copy.
  std::map<ArrowId, ArrowId> primed_edges;

  /// Quotient vertices whose sum is the image of each original vertex;
  /// empty means the vertex maps to 0.
  std::vector<std::vector<VertexId>> vertex_images;
  /// Same for arrows; bundle members map member-wise.
  std::vector<std::vector<ArrowId>> arrow_images;

  Element vertex_image(VertexId v, Field f) const;
  Element edge_image(EdgeRef e, Field f) const;
};

QuotientPresentation quotient_graph(GraphPtr g, const AdmissiblePair& pair);

/// v^H = v - sum of e e^* over ordinary out-edges of v leaving H.
Element breaking_element(GraphPtr g, Field f, const VertexSet& h, VertexId v);

/// The epimorphism onto the quotient algebra, applied term by term.
Element apply_phi(const QuotientPresentation& q, const Element& x);

/// Exact test of x ∈ I_(H,S): the kernel of apply_phi.
bool graded_membership(const QuotientPresentation& q, const Element& x);

}  // namespace lpa
