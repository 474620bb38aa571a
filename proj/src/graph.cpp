#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>

#include "lpa/error.hpp"

namespace lpa {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  const unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (!(std::isalpha(c0) || c0 == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    const unsigned char c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '\'';
  });
}

}  // namespace

Graph Graph::validate(const GraphDescription& raw) {
  Graph g;
  std::set<std::string> seen;
  auto claim = [&](const std::string& name, const std::string& where) {
    if (name.empty()) throw ParseError(where, name, "empty identifier");
    if (!is_identifier(name)) throw ParseError(where, name, "invalid identifier '" + name + "'");
    if (name == "mod") throw ParseError(where, name, "'mod' is reserved");
    if (!seen.insert(name).second) throw ParseError(where, name, "duplicate name '" + name + "'");
  };

  for (std::size_t i = 0; i < raw.vertices.size(); ++i)
    claim(raw.vertices[i], "/vertices/" + std::to_string(i));
  std::vector<std::string> vnames = raw.vertices;
  std::sort(vnames.begin(), vnames.end());
  for (VertexId v = 0; v < vnames.size(); ++v) g.vertex_index_[vnames[v]] = v;
  g.vertex_names_ = std::move(vnames);

  struct Pending {
    const GraphDescription::Arrow* arrow;
    bool bundle;
  };
  std::vector<Pending> pending;
  auto collect = [&](const std::vector<GraphDescription::Arrow>& list, bool bundle, const char* field) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& a = list[i];
      const std::string where = std::string("/") + field + "/" + std::to_string(i);
      claim(a.name, where + "/name");
      if (!g.vertex_index_.count(a.src))
        throw ParseError(where + "/src", a.src, "dangling endpoint '" + a.src + "'");
      if (!g.vertex_index_.count(a.dst))
        throw ParseError(where + "/dst", a.dst, "dangling endpoint '" + a.dst + "'");
      pending.push_back({&a, bundle});
    }
  };
  collect(raw.edges, false, "edges");
  collect(raw.bundles, true, "bundles");

  std::sort(pending.begin(), pending.end(),
            [](const Pending& a, const Pending& b) { return a.arrow->name < b.arrow->name; });
  const std::size_t n = g.vertex_names_.size();
  g.out_edges_.assign(n, {});
  g.out_bundles_.assign(n, {});
  g.in_arrows_.assign(n, {});
  for (const auto& p : pending) {
    const ArrowId id = static_cast<ArrowId>(g.arrows_.size());
    Arrow a{p.arrow->name, g.vertex_index_.at(p.arrow->src), g.vertex_index_.at(p.arrow->dst), p.bundle};
    g.arrow_index_[a.name] = id;
    (a.bundle ? g.out_bundles_ : g.out_edges_)[a.src].push_back(id);
    g.in_arrows_[a.dst].push_back(id);
    g.arrows_.push_back(std::move(a));
  }
  return g;
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Graph::find_arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw DomainError("unknown vertex '" + name + "'");
}

EdgeRef Graph::edge(const std::string& name, std::uint64_t member) const {
  auto a = find_arrow(name);
  if (!a) throw DomainError("unknown edge '" + name + "'");
  if (!arrows_[*a].bundle && member != 0)
    throw DomainError("edge '" + name + "' is not a bundle");
  return EdgeRef{*a, member};
}

std::string Graph::ref_name(EdgeRef e) const {
  const Arrow& a = arrows_.at(e.arrow);
  if (!a.bundle) return a.name;
  return a.name + "[" + std::to_string(e.member) + "]";
}

VertexKind Graph::kind(VertexId v) const {
  if (!out_bundles_.at(v).empty()) return VertexKind::InfiniteEmitter;
  if (!out_edges_.at(v).empty()) return VertexKind::Regular;
  return VertexKind::Sink;
}

std::optional<ArrowId> Graph::designated_edge(VertexId v) const {
  if (!is_regular(v)) return std::nullopt;
  return out_edges_[v].front();
}

Path Graph::make_path(VertexId start, std::vector<EdgeRef> steps) const {
  Path p{start, start, std::move(steps)};
  for (const EdgeRef& e : p.steps) {
    if (e.arrow >= arrows_.size()) throw DomainError("edge id out of range");
    if (!arrows_[e.arrow].bundle && e.member != 0) throw DomainError("member index on an ordinary edge");
    if (source(e) != p.range)
      throw DomainError("path does not compose at '" + ref_name(e) + "'");
    p.range = range(e);
  }
  return p;
}

Path Graph::make_path(std::vector<EdgeRef> steps) const {
  if (steps.empty()) throw DomainError("empty edge list needs an explicit base vertex");
  const VertexId s = source(steps.front());
  return make_path(s, std::move(steps));
}

bool Graph::is_cycle(const Path& p) const {
  if (p.steps.empty() || p.range != p.source) return false;
  std::set<VertexId> seen;
  for (const EdgeRef& e : p.steps)
    if (!seen.insert(source(e)).second) return false;
  return true;
}

std::string Graph::path_name(const Path& p) const {
  if (p.steps.empty()) return vertex_name(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (i) out += '.';
    out += ref_name(p.steps[i]);
  }
  return out;
}

std::string Graph::set_name(const VertexSet& s) const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ", ";
    first = false;
    out += vertex_name(v);
  }
  return out + "}";
}

GraphDescription Graph::describe() const {
  GraphDescription d;
  d.vertices = vertex_names_;
  for (const Arrow& a : arrows_)
    (a.bundle ? d.bundles : d.edges).push_back({a.name, vertex_names_[a.src], vertex_names_[a.dst]});
  return d;
}

bool Graph::operator==(const Graph& o) const {
  if (vertex_names_ != o.vertex_names_ || arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow &a = arrows_[i], &b = o.arrows_[i];
    if (a.name != b.name || a.src != b.src || a.dst != b.dst || a.bundle != b.bundle) return false;
  }
  return true;
}

}  // namespace lpa
