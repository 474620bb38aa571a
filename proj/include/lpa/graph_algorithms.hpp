#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

bool is_hereditary(const Graph& g, const VertexSet& h);
/// Saturation only fires at regular vertices.
bool is_saturated(const Graph& g, const VertexSet& h);
inline bool is_hereditary_saturated(const Graph& g, const VertexSet& h) {
  return is_hereditary(g, h) && is_saturated(g, h);
}

/// Why a vertex belongs to a hereditary saturated closure.
struct ClosureReason {
  enum class Kind { Seed, Hereditary, Saturated };
  Kind kind = Kind::Seed;
  /// For Hereditary: the edge (member 0 for bundles) whose source entered
  /// the closure earlier and whose range is this vertex.
  EdgeRef via{};
};

struct ClosureTrace {
  VertexSet closure;
  /// One entry per closure vertex; every Hereditary/Saturated reason only
  /// refers to vertices with a strictly earlier `order`.
  std::map<VertexId, ClosureReason> reason;
  std::vector<VertexId> order;
};

/// Smallest hereditary saturated superset of `seed`.
VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& seed);
ClosureTrace closure_trace(const Graph& g, const VertexSet& seed);

/// Breaking vertices of a hereditary saturated H: infinite emitters outside
/// H whose bundles all land in H and that keep at least one ordinary edge
/// leaving H.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

/// Ordinary out-edges of v whose range lies outside h.
std::vector<EdgeRef> edges_leaving(const Graph& g, VertexId v, const VertexSet& h);

/// All vertex-simple cycles, rotated to start at their smallest vertex and
/// sorted by edge sequence. Bundles take part through member 0.
std::vector<Cycle> cycles(const Graph& g);

/// Edges leaving the cycle whose range is not in `exclude`, ascending.
/// A bundle sourced on the cycle contributes one member as witness.
std::vector<EdgeRef> cycle_exits(const Graph& g, const Cycle& c, const VertexSet& exclude);

struct ConditionL {
  bool holds = true;
  std::optional<Cycle> witness;
};
ConditionL condition_L(const Graph& g);

struct ConditionK {
  bool holds = true;
  std::optional<VertexId> witness;
};
/// A vertex violates (K) iff exactly one cycle passes through it and no exit
/// of that cycle leads back to it.
ConditionK condition_K(const Graph& g);

/// Vertices reachable from `from` (including it).
VertexSet reachable_from(const Graph& g, VertexId from);

/// Throws DomainError unless `c` is a cycle of g.
void require_cycle(const Graph& g, const Cycle& c);

}  // namespace lpa
