#include "lpa/graph_algorithms.hpp"

#include <algorithm>
#include <deque>

#include "lpa/error.hpp"

namespace lpa {

namespace {

void require_vertices(const Graph& g, const VertexSet& s) {
  for (VertexId v : s)
    if (v >= g.vertex_count()) throw DomainError("unknown vertex id " + std::to_string(v));
}

template <class F>
void for_each_out_arrow(const Graph& g, VertexId v, F&& f) {
  for (ArrowId a : g.out_edges(v)) f(a);
  for (ArrowId a : g.out_bundles(v)) f(a);
}

}  // namespace

bool is_hereditary(const Graph& g, const VertexSet& h) {
  for (VertexId v : h) {
    bool ok = true;
    for_each_out_arrow(g, v, [&](ArrowId a) { ok = ok && h.count(g.arrow(a).dst); });
    if (!ok) return false;
  }
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.count(v) || !g.is_regular(v)) continue;
    const auto& out = g.out_edges(v);
    if (std::all_of(out.begin(), out.end(), [&](ArrowId a) { return h.count(g.arrow(a).dst) > 0; }))
      return false;
  }
  return true;
}

ClosureTrace closure_trace(const Graph& g, const VertexSet& seed) {
  require_vertices(g, seed);
  ClosureTrace t;
  std::deque<VertexId> queue;
  auto add = [&](VertexId v, ClosureReason r) {
    if (!t.closure.insert(v).second) return;
    t.reason[v] = r;
    t.order.push_back(v);
    queue.push_back(v);
  };
  for (VertexId v : seed) add(v, {});

  for (;;) {
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for_each_out_arrow(g, v, [&](ArrowId a) {
        add(g.arrow(a).dst, {ClosureReason::Kind::Hereditary, EdgeRef{a, 0}});
      });
    }
    bool grew = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (t.closure.count(v) || !g.is_regular(v)) continue;
      const auto& out = g.out_edges(v);
      if (std::all_of(out.begin(), out.end(), [&](ArrowId a) { return t.closure.count(g.arrow(a).dst) > 0; })) {
        add(v, {ClosureReason::Kind::Saturated, {}});
        grew = true;
      }
    }
    if (!grew) break;
  }
  return t;
}

VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& seed) {
  return closure_trace(g, seed).closure;
}

std::vector<EdgeRef> edges_leaving(const Graph& g, VertexId v, const VertexSet& h) {
  std::vector<EdgeRef> out;
  for (ArrowId a : g.out_edges(v))
    if (!h.count(g.arrow(a).dst)) out.push_back(EdgeRef{a, 0});
  return out;
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  require_vertices(g, h);
  if (!is_hereditary_saturated(g, h))
    throw DomainError("vertex set " + g.set_name(h) + " is not hereditary and saturated");
  VertexSet out;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (h.count(w) || g.kind(w) != VertexKind::InfiniteEmitter) continue;
    const auto& bundles = g.out_bundles(w);
    const bool bundles_in_h =
        std::all_of(bundles.begin(), bundles.end(), [&](ArrowId a) { return h.count(g.arrow(a).dst) > 0; });
    if (bundles_in_h && !edges_leaving(g, w, h).empty()) out.insert(w);
  }
  return out;
}

std::vector<Cycle> cycles(const Graph& g) {
  std::vector<Cycle> found;
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<EdgeRef> steps;

  // Johnson-style restriction: cycles through `start` use only vertices >= start,
  // so each cycle is produced exactly once, already in canonical rotation.
  auto dfs = [&](auto&& self, VertexId start, VertexId v) -> void {
    for_each_out_arrow(g, v, [&](ArrowId a) {
      const VertexId w = g.arrow(a).dst;
      if (w < start) return;
      steps.push_back(EdgeRef{a, 0});
      if (w == start) {
        found.push_back(Cycle{g.make_path(start, steps)});
      } else if (!on_path[w]) {
        on_path[w] = true;
        self(self, start, w);
        on_path[w] = false;
      }
      steps.pop_back();
    });
  };
  for (VertexId s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  std::sort(found.begin(), found.end(),
            [](const Cycle& a, const Cycle& b) { return a.path.steps < b.path.steps; });
  return found;
}

void require_cycle(const Graph& g, const Cycle& c) {
  const Path& p = c.path;
  if (p.steps.empty()) throw DomainError("a cycle needs at least one edge");
  Path rebuilt = g.make_path(p.source, p.steps);
  if (!g.is_cycle(rebuilt)) throw DomainError("'" + g.path_name(p) + "' is not a cycle");
}

std::vector<EdgeRef> cycle_exits(const Graph& g, const Cycle& c, const VertexSet& exclude) {
  require_cycle(g, c);
  std::vector<EdgeRef> exits;
  for (const EdgeRef& step : c.path.steps) {
    const VertexId v = g.source(step);
    for (ArrowId a : g.out_edges(v)) {
      const EdgeRef e{a, 0};
      if (e != step && !exclude.count(g.arrow(a).dst)) exits.push_back(e);
    }
    for (ArrowId a : g.out_bundles(v)) {
      if (exclude.count(g.arrow(a).dst)) continue;
      // Any member other than the one the cycle walks along leaves it.
      const std::uint64_t member = step.arrow == a ? step.member + 1 : 0;
      exits.push_back(EdgeRef{a, member});
    }
  }
  std::sort(exits.begin(), exits.end());
  exits.erase(std::unique(exits.begin(), exits.end()), exits.end());
  return exits;
}

ConditionL condition_L(const Graph& g) {
  for (const Cycle& c : cycles(g))
    if (cycle_exits(g, c, {}).empty()) return {false, c};
  return {};
}

VertexSet reachable_from(const Graph& g, VertexId from) {
  VertexSet seen{from};
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for_each_out_arrow(g, v, [&](ArrowId a) {
      if (seen.insert(g.arrow(a).dst).second) queue.push_back(g.arrow(a).dst);
    });
  }
  return seen;
}

ConditionK condition_K(const Graph& g) {
  const auto all = cycles(g);
  std::vector<VertexSet> reach(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) reach[v] = reachable_from(g, v);

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Cycle* only = nullptr;
    int through = 0;
    for (const Cycle& c : all) {
      const bool passes = std::any_of(c.path.steps.begin(), c.path.steps.end(),
                                      [&](const EdgeRef& e) { return g.source(e) == v; });
      if (passes) {
        ++through;
        only = &c;
      }
    }
    if (through != 1) continue;
    const auto exits = cycle_exits(g, *only, {});
    const bool returns = std::any_of(exits.begin(), exits.end(),
                                     [&](const EdgeRef& e) { return reach[g.range(e)].count(v) > 0; });
    if (!returns) return {false, v};
  }
  return {};
}

}  // namespace lpa
