#include "lpa/quotient.hpp"

#include <algorithm>

#include "lpa/error.hpp"

namespace lpa {

void require_admissible(const Graph& g, const AdmissiblePair& pair) {
  for (VertexId v : pair.H)
    if (v >= g.vertex_count()) throw DomainError("unknown vertex id in H");
  if (!is_hereditary_saturated(g, pair.H))
    throw DomainError("H = " + g.set_name(pair.H) + " is not hereditary and saturated");
  const VertexSet b = breaking_vertices(g, pair.H);
  for (VertexId v : pair.S)
    if (!b.count(v))
      throw DomainError("'" + (v < g.vertex_count() ? g.vertex_name(v) : std::to_string(v)) +
                        "' is not a breaking vertex of H = " + g.set_name(pair.H));
}

QuotientPresentation quotient_graph(GraphPtr gp, const AdmissiblePair& pair) {
  const Graph& g = *gp;
  require_admissible(g, pair);

  QuotientPresentation q;
  q.source = gp;
  q.pair = pair;
  q.breaking = breaking_vertices(g, pair.H);

  VertexSet unsplit;  // B_H \ S
  for (VertexId v : q.breaking)
    if (!pair.S.count(v)) unsplit.insert(v);

  std::set<std::string> taken;
  for (VertexId v = 0; v < g.vertex_count(); ++v) taken.insert(g.vertex_name(v));
  for (ArrowId a = 0; a < g.arrow_count(); ++a) taken.insert(g.arrow(a).name);
  auto primed = [&](const std::string& name) {
    std::string p = name + "'";
    while (taken.count(p)) p += "'";
    taken.insert(p);
    return p;
  };

  GraphDescription d;
  std::map<VertexId, std::string> vprime;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!pair.H.count(v)) d.vertices.push_back(g.vertex_name(v));
  for (VertexId v : unsplit) {
    vprime[v] = primed(g.vertex_name(v));
    d.vertices.push_back(vprime[v]);
  }
  std::map<ArrowId, std::string> aprime;
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    const auto& arrow = g.arrow(a);
    if (pair.H.count(arrow.dst)) continue;
    auto& list = arrow.bundle ? d.bundles : d.edges;
    list.push_back({arrow.name, g.vertex_name(arrow.src), g.vertex_name(arrow.dst)});
    if (unsplit.count(arrow.dst)) {
      aprime[a] = primed(arrow.name);
      list.push_back({aprime[a], g.vertex_name(arrow.src), vprime[arrow.dst]});
    }
  }
  auto qg = std::make_shared<const Graph>(Graph::validate(d));
  q.graph = qg;

  for (const auto& [v, name] : vprime) q.primed_vertices[v] = qg->vertex(name);
  for (const auto& [a, name] : aprime) q.primed_edges[a] = *qg->find_arrow(name);

  q.vertex_images.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (pair.H.count(v)) continue;
    q.vertex_images[v].push_back(qg->vertex(g.vertex_name(v)));
    if (auto it = q.primed_vertices.find(v); it != q.primed_vertices.end())
      q.vertex_images[v].push_back(it->second);
  }
  q.arrow_images.resize(g.arrow_count());
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    if (pair.H.count(g.arrow(a).dst)) continue;
    q.arrow_images[a].push_back(*qg->find_arrow(g.arrow(a).name));
    if (auto it = q.primed_edges.find(a); it != q.primed_edges.end()) q.arrow_images[a].push_back(it->second);
  }
  return q;
}

Element QuotientPresentation::vertex_image(VertexId v, Field f) const {
  Element out(graph, f);
  for (VertexId w : vertex_images.at(v)) out.add_term(Monomial::vertex(w), Scalar::one(f));
  return out;
}

Element QuotientPresentation::edge_image(EdgeRef e, Field f) const {
  Element out(graph, f);
  for (ArrowId a : arrow_images.at(e.arrow)) {
    const EdgeRef img{a, e.member};
    out.add_term(Monomial::real(graph->make_path(graph->source(img), {img})), Scalar::one(f));
  }
  return normal_form(out);
}

Element breaking_element(GraphPtr gp, Field f, const VertexSet& h, VertexId v) {
  const Graph& g = *gp;
  if (!breaking_vertices(g, h).count(v))
    throw DomainError("'" + (v < g.vertex_count() ? g.vertex_name(v) : std::to_string(v)) +
                      "' is not a breaking vertex of " + g.set_name(h));
  Element out(gp, f);
  out.add_term(Monomial::vertex(v), Scalar::one(f));
  for (const EdgeRef& e : edges_leaving(g, v, h)) {
    const Path p = g.make_path(v, {e});
    out.add_term(Monomial{p, p}, -Scalar::one(f));
  }
  return normal_form(out);
}

Element apply_phi(const QuotientPresentation& q, const Element& x) {
  if (x.graph_ptr() != q.source && !(x.graph() == *q.source))
    throw DomainError("element is not over the quotient's source graph");
  const Field f = x.field();
  Element out(q.graph, f);
  for (const auto& [m, k] : x.terms()) {
    if (m.length() == 0) {
      out += q.vertex_image(m.alpha.source, f) * k;
      continue;
    }
    std::optional<Element> acc;
    auto absorb = [&](const Element& factor) {
      acc = acc ? multiply(*acc, factor) : factor;
    };
    for (const EdgeRef& e : m.alpha.steps) absorb(q.edge_image(e, f));
    for (auto it = m.beta.steps.rbegin(); it != m.beta.steps.rend(); ++it)
      absorb(involution(q.edge_image(*it, f)));
    out += *acc * k;
  }
  return normal_form(out);
}

bool graded_membership(const QuotientPresentation& q, const Element& x) { return apply_phi(q, x).is_zero(); }

}  // namespace lpa
