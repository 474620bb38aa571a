#pragma once

#include <string>

#include <json.hpp>

#include "lpa/element.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

using Json = nlohmann::ordered_json;

/// Graph document: {"vertices": [...], "edges": [{name, src, dst}],
/// "bundles": [{name, src, dst}]}. Unknown fields are rejected; errors
/// carry a JSON pointer to the offending token.
GraphDescription parse_graph_document(const std::string& text);
GraphPtr parse_graph_text(const std::string& text);
GraphPtr load_graph(const std::string& path);

Json graph_json(const Graph& g);
std::string emit_graph(const Graph& g);

/// "e" or "b[3]".
EdgeRef parse_edge_ref(const Graph& g, const std::string& text);

/// Generator document: {"vertices": [...], "breaking": [...],
/// "cycle_polys": [{"base", "cycle": [edges], "poly": [[exponent, scalar]]}]}
/// with an implicit constant term 1.
StructuredGeneratorSet parse_generators(const Graph& g, Field f, const std::string& text);
StructuredGeneratorSet load_generators(const Graph& g, Field f, const std::string& path);

Json vertex_set_json(const Graph& g, const VertexSet& s);
Json cycle_polynomial_json(const GraphPtr& g, const CyclePolynomial& c);
Json generators_json(const GraphPtr& g, const StructuredGeneratorSet& s);
Json witness_json(const Graph& g, const MembershipWitness& w);
Json certificate_json(const GraphPtr& g, const PrincipalCertificate& c);

std::string read_file(const std::string& path);

}  // namespace lpa
