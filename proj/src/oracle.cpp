#include "lpa/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "lpa/error.hpp"

namespace lpa {

namespace {

using Row = std::map<Monomial, Scalar>;
using Combination = std::map<std::size_t, Scalar>;

void axpy(Row& into, const Scalar& c, const Row& from) {
  for (const auto& [m, k] : from) {
    auto [it, inserted] = into.try_emplace(m, c * k);
    if (!inserted) {
      it->second += c * k;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

void axpy(Combination& into, const Scalar& c, const Combination& from) {
  for (const auto& [i, k] : from) {
    auto [it, inserted] = into.try_emplace(i, c * k);
    if (!inserted) {
      it->second += c * k;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

/// Row echelon form keyed by each row's smallest monomial.
class Echelon {
 public:
  struct Pivot {
    Row row;  // leading coefficient 1
    Combination comb;
  };

  /// Reduces (row, comb) in place; returns true if it became zero.
  bool reduce(Row& row, Combination& comb) const {
    while (!row.empty()) {
      const auto lead = row.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) return false;
      const Scalar c = -lead->second;
      axpy(row, c, it->second.row);
      axpy(comb, c, it->second.comb);
    }
    return true;
  }

  void insert(Row row, Combination comb) {
    if (reduce(row, comb)) return;
    const Scalar inv = row.begin()->second.inverse();
    for (auto& [m, k] : row) k *= inv;
    for (auto& [i, k] : comb) k *= inv;
    const Monomial lead = row.begin()->first;
    pivots_.emplace(lead, Pivot{std::move(row), std::move(comb)});
  }

 private:
  std::map<Monomial, Pivot> pivots_;
};

void collect_members(const Element& x, std::vector<std::set<std::uint64_t>>& members) {
  const Graph& g = x.graph();
  for (const auto& [m, k] : x.terms())
    for (const Path* p : {&m.alpha, &m.beta})
      for (const EdgeRef& e : p->steps)
        if (g.is_bundle(e)) members[e.arrow].insert(e.member);
}

}  // namespace

std::vector<Monomial> basis_monomials(const Graph& g, std::size_t max_len,
                                      const std::vector<std::vector<std::uint64_t>>& members) {
  // paths_to[v][len]: all paths of that length ending at v.
  std::vector<std::vector<std::vector<Path>>> paths_to(g.vertex_count(),
                                                       std::vector<std::vector<Path>>(max_len + 1));
  for (VertexId v = 0; v < g.vertex_count(); ++v) paths_to[v][0].push_back(Path::vertex(v));
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (const Path& p : paths_to[v][len - 1]) {
        auto extend = [&](ArrowId a, std::uint64_t member) {
          Path q = p;
          q.steps.push_back(EdgeRef{a, member});
          q.range = g.arrow(a).dst;
          paths_to[q.range][len].push_back(std::move(q));
        };
        for (ArrowId a : g.out_edges(v)) extend(a, 0);
        for (ArrowId a : g.out_bundles(v)) {
          if (a < members.size() && !members[a].empty())
            for (std::uint64_t k : members[a]) extend(a, k);
          else
            extend(a, 0);
        }
      }
    }
  }
  std::vector<Monomial> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (std::size_t la = 0; la <= max_len; ++la)
      for (std::size_t lb = 0; la + lb <= max_len; ++lb)
        for (const Path& a : paths_to[v][la])
          for (const Path& b : paths_to[v][lb]) {
            Monomial m{a, b};
            if (!is_reducible(g, m)) out.push_back(std::move(m));
          }
  std::sort(out.begin(), out.end());
  return out;
}

Element evaluate_witness(const MembershipWitness& w, const std::vector<Element>& gens) {
  if (gens.empty()) throw DomainError("witness evaluation needs at least one generator");
  const GraphPtr& g = gens.front().graph_ptr();
  const Field f = gens.front().field();
  Element sum(g, f);
  for (const WitnessTerm& t : w.combination) {
    if (t.generator >= gens.size()) throw DomainError("witness refers to a missing generator");
    const Element left = Element::monomial(g, f, t.left, t.coefficient);
    const Element right = Element::monomial(g, f, t.right, Scalar::one(f));
    sum += multiply(multiply(left, gens[t.generator]), right);
  }
  return sum;
}

bool check_witness(const MembershipWitness& w, const std::vector<Element>& gens, const Element& x) {
  return evaluate_witness(w, gens) == normal_form(x);
}

OracleResult membership_oracle(const std::vector<Element>& gens, const Element& x, std::size_t max_len) {
  for (const Element& gen : gens) x.require_compatible(gen);
  const Graph& g = x.graph();
  const Field f = x.field();
  const Element target = normal_form(x);

  OracleResult result;
  result.bound = max_len;
  if (target.is_zero()) {
    result.witness = MembershipWitness{{}, max_len};
    return result;
  }
  if (gens.empty()) return result;

  std::vector<std::set<std::uint64_t>> seen(g.arrow_count());
  collect_members(target, seen);
  for (const Element& gen : gens) collect_members(gen, seen);
  std::vector<std::vector<std::uint64_t>> members(g.arrow_count());
  for (ArrowId a = 0; a < g.arrow_count(); ++a) {
    if (!g.arrow(a).bundle) continue;
    seen[a].insert(0);
    members[a].assign(seen[a].begin(), seen[a].end());
  }
  const std::vector<Monomial> basis = basis_monomials(g, max_len, members);

  struct Candidate {
    std::size_t generator;
    const Monomial* left;
    const Monomial* right;
  };
  std::vector<Candidate> candidates;

  // Left products m1 * gen, deduplicated per generator.
  struct Left {
    std::size_t generator;
    const Monomial* m1;
    Element value;
  };
  std::vector<Left> lefts;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::set<Element::Terms> dedupe;
    for (const Monomial& m1 : basis) {
      Element v = multiply(Element::monomial(x.graph_ptr(), f, m1, Scalar::one(f)), gens[i]);
      if (v.is_zero() || !dedupe.insert(v.terms()).second) continue;
      lefts.push_back({i, &m1, std::move(v)});
    }
  }

  Echelon echelon;
  std::set<Element::Terms> dedupe;
  // Walk total factor length upward so short witnesses are found first.
  for (std::size_t level = 0; level <= 2 * max_len; ++level) {
    for (const Left& l : lefts) {
      const std::size_t l1 = l.m1->length();
      if (l1 > level || level - l1 > max_len) continue;
      for (const Monomial& m2 : basis) {
        if (m2.length() != level - l1) continue;
        Element v = multiply(l.value, Element::monomial(x.graph_ptr(), f, m2, Scalar::one(f)));
        ++result.candidates;
        if (v.is_zero() || !dedupe.insert(v.terms()).second) continue;
        const std::size_t idx = candidates.size();
        candidates.push_back({l.generator, l.m1, &m2});
        echelon.insert(Row(v.terms().begin(), v.terms().end()), Combination{{idx, Scalar::one(f)}});
      }
    }
    Row row(target.terms().begin(), target.terms().end());
    Combination comb;
    if (!echelon.reduce(row, comb)) continue;

    MembershipWitness w;
    w.bound = max_len;
    // target - sum(comb) == 0, so target = -comb.
    for (const auto& [idx, k] : comb)
      w.combination.push_back({-k, *candidates[idx].left, candidates[idx].generator, *candidates[idx].right});
    if (!check_witness(w, gens, target)) throw std::logic_error("membership oracle produced an invalid witness");
    result.witness = std::move(w);
    return result;
  }
  return result;
}

}  // namespace lpa
