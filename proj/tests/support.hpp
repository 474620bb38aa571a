#pragma once

// Shared helpers for the unit and acceptance binaries. The brute-force
// predicates here are written against the raw edge lists on purpose, so they
// do not share code with the library's closure routines.

#include <algorithm>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/expression.hpp"
#include "lpa/graph_algorithms.hpp"
#include "lpa/io.hpp"

namespace lpa::test {

inline std::string fixture_path(const std::string& name) { return std::string(LPA_FIXTURES) + "/" + name; }

inline GraphPtr fixture(const std::string& name) { return load_graph(fixture_path(name + ".json")); }

inline Element el(const GraphPtr& g, const std::string& text, Field f = Field::rationals()) {
  return parse_element(g, f, text);
}

inline VertexSet vset(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) s.insert(g.vertex(n));
  return s;
}

/// Every edge with source in h has range in h.
inline bool bf_hereditary(const Graph& g, const VertexSet& h) {
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    if (h.count(g.arrow(a).src) && !h.count(g.arrow(a).dst)) return false;
  return true;
}

/// Every regular vertex whose out-edges all land in h lies in h.
inline bool bf_saturated(const Graph& g, const VertexSet& h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool has_bundle = false, has_edge = false, all_in = true;
    for (ArrowId a = 0; a < g.arrow_count(); ++a) {
      if (g.arrow(a).src != v) continue;
      (g.arrow(a).bundle ? has_bundle : has_edge) = true;
      all_in = all_in && h.count(g.arrow(a).dst) > 0;
    }
    if (!has_bundle && has_edge && all_in && !h.count(v)) return false;
  }
  return true;
}

inline VertexSet from_mask(std::uint32_t mask) {
  VertexSet s;
  for (VertexId v = 0; v < 32; ++v)
    if (mask >> v & 1) s.insert(v);
  return s;
}

/// All hereditary saturated subsets, by exhausting the subset lattice.
inline std::vector<VertexSet> bf_hereditary_saturated_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << g.vertex_count()); ++mask) {
    VertexSet s = from_mask(mask);
    if (bf_hereditary(g, s) && bf_saturated(g, s)) out.push_back(std::move(s));
  }
  return out;
}

/// Intersection of every hereditary saturated superset of the seed. The
/// caller checks that it is itself hereditary and saturated.
inline VertexSet bf_closure(const Graph& g, const std::vector<VertexSet>& hs_sets, const VertexSet& seed) {
  VertexSet out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.insert(v);
  for (const VertexSet& s : hs_sets) {
    if (!std::includes(s.begin(), s.end(), seed.begin(), seed.end())) continue;
    VertexSet meet;
    std::set_intersection(out.begin(), out.end(), s.begin(), s.end(), std::inserter(meet, meet.end()));
    out = std::move(meet);
  }
  return out;
}

/// A random path of the given length, or the shortest dead end reached
/// before it. Bundles are entered through members 0..2.
inline Path random_path(const Graph& g, std::mt19937& rng, VertexId start, std::size_t len) {
  std::vector<EdgeRef> steps;
  VertexId at = start;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<EdgeRef> options;
    for (ArrowId a : g.out_edges(at)) options.push_back({a, 0});
    for (ArrowId a : g.out_bundles(at))
      for (std::uint64_t m = 0; m < 3; ++m) options.push_back({a, m});
    if (options.empty()) break;
    const EdgeRef e = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    steps.push_back(e);
    at = g.range(e);
  }
  return g.make_path(start, std::move(steps));
}

/// All paths of length `len` ending at v, by walking arrows backwards.
inline std::vector<Path> paths_into(const Graph& g, VertexId v, std::size_t len) {
  if (len == 0) return {Path::vertex(v)};
  std::vector<Path> out;
  for (ArrowId a : g.in_arrows(v)) {
    const EdgeRef e{a, 0};
    for (Path p : paths_into(g, g.source(e), len - 1)) {
      p.steps.push_back(e);
      out.push_back(g.make_path(p.source, p.steps));
    }
  }
  return out;
}

/// Random monomial alpha beta^* with |alpha| + |beta| <= max_len.
inline Monomial random_monomial(const Graph& g, std::mt19937& rng, std::size_t max_len) {
  const VertexId s = std::uniform_int_distribution<VertexId>(0, g.vertex_count() - 1)(rng);
  const Path alpha = random_path(g, rng, s, std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  const std::size_t rest = max_len - alpha.length();
  const auto back = paths_into(g, alpha.range, std::uniform_int_distribution<std::size_t>(0, rest)(rng));
  if (back.empty()) return Monomial::real(alpha);
  const Path beta = back[std::uniform_int_distribution<std::size_t>(0, back.size() - 1)(rng)];
  return Monomial{alpha, beta};
}

/// Random element in normal form: up to `terms` monomials with small
/// nonzero integer coefficients.
inline Element random_element(const GraphPtr& g, Field f, std::mt19937& rng, std::size_t terms = 6,
                              std::size_t max_len = 4) {
  Element x(g, f);
  if (g->vertex_count() == 0) return x;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, terms)(rng);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (std::size_t i = 0; i < n; ++i) {
    long k = coeff(rng);
    if (k == 0) k = 1;
    x.add_term(random_monomial(*g, rng, max_len), Scalar(f, k));
  }
  return normal_form(x);
}

}  // namespace lpa::test
