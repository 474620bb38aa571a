#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lpa {

using VertexId = std::uint32_t;
/// Ordinary edges and ω-bundles share one id space, ordered by name.
using ArrowId = std::uint32_t;
using VertexSet = std::set<VertexId>;

/// A single edge of the graph: an ordinary edge (member is always 0) or the
/// member-th edge of an ω-bundle.
struct EdgeRef {
  ArrowId arrow = 0;
  std::uint64_t member = 0;

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Unvalidated graph document, as read from a file.
struct GraphDescription {
  struct Arrow {
    std::string name;
    std::string src;
    std::string dst;
  };
  std::vector<std::string> vertices;
  std::vector<Arrow> edges;
  std::vector<Arrow> bundles;
};

enum class VertexKind { Sink, Regular, InfiniteEmitter };

/// Finite path. `source` is the base for length 0 and s(first step)
/// otherwise; `range` is cached.
struct Path {
  VertexId source = 0;
  VertexId range = 0;
  std::vector<EdgeRef> steps;

  std::size_t length() const { return steps.size(); }
  static Path vertex(VertexId v) { return Path{v, v, {}}; }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.steps == b.steps;
  }
};

/// Vertex-simple closed path of length >= 1.
struct Cycle {
  Path path;
  VertexId base() const { return path.source; }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Immutable, validated directed graph with ω-bundles. Vertices and arrows
/// are numbered in lexicographic order of their names.
class Graph {
 public:
  struct Arrow {
    std::string name;
    VertexId src = 0;
    VertexId dst = 0;
    bool bundle = false;
  };

  /// Checks name uniqueness and endpoints; throws ParseError naming the
  /// offending token.
  static Graph validate(const GraphDescription& raw);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;
  /// Throws DomainError for unknown names.
  VertexId vertex(const std::string& name) const;
  EdgeRef edge(const std::string& name, std::uint64_t member = 0) const;

  VertexId source(EdgeRef e) const { return arrows_.at(e.arrow).src; }
  VertexId range(EdgeRef e) const { return arrows_.at(e.arrow).dst; }
  bool is_bundle(EdgeRef e) const { return arrows_.at(e.arrow).bundle; }
  /// "e" for ordinary edges, "b[3]" for bundle members.
  std::string ref_name(EdgeRef e) const;

  /// Ordinary out-edges, ascending by name.
  const std::vector<ArrowId>& out_edges(VertexId v) const { return out_edges_.at(v); }
  const std::vector<ArrowId>& out_bundles(VertexId v) const { return out_bundles_.at(v); }
  /// Every arrow (edge or bundle) with range v.
  const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_arrows_.at(v); }

  VertexKind kind(VertexId v) const;
  bool is_regular(VertexId v) const { return kind(v) == VertexKind::Regular; }
  /// Smallest out-edge name at a regular vertex; the CK-2 basis pivot.
  std::optional<ArrowId> designated_edge(VertexId v) const;

  /// Builds a path from `source` through `steps`; throws DomainError if two
  /// consecutive steps do not compose.
  Path make_path(VertexId source, std::vector<EdgeRef> steps) const;
  Path make_path(std::vector<EdgeRef> steps) const;
  bool is_cycle(const Path& p) const;

  std::string path_name(const Path& p) const;
  std::string set_name(const VertexSet& s) const;

  GraphDescription describe() const;

  bool operator==(const Graph& o) const;

 private:
  std::vector<std::string> vertex_names_;
  std::map<std::string, VertexId> vertex_index_;
  std::vector<Arrow> arrows_;
  std::map<std::string, ArrowId> arrow_index_;
  std::vector<std::vector<ArrowId>> out_edges_;
  std::vector<std::vector<ArrowId>> out_bundles_;
  std::vector<std::vector<ArrowId>> in_arrows_;
};

}  // namespace lpa
