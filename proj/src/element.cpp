#include "lpa/element.hpp"

#include <algorithm>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

namespace {

// Length-0 paths sort before non-trivial ones.
int compare_paths(const Path& a, const Path& b) {
  const bool at = a.steps.empty(), bt = b.steps.empty();
  if (at != bt) return at ? -1 : 1;
  if (at) return a.source < b.source ? -1 : (a.source > b.source ? 1 : 0);
  if (a.steps < b.steps) return -1;
  if (b.steps < a.steps) return 1;
  return 0;
}

bool is_prefix(const Path& p, const Path& q) {
  if (p.source != q.source || p.steps.size() > q.steps.size()) return false;
  return std::equal(p.steps.begin(), p.steps.end(), q.steps.begin());
}

Path concat_tail(const Graph& g, const Path& head, const Path& full, std::size_t skip) {
  Path out = head;
  for (std::size_t i = skip; i < full.steps.size(); ++i) out.steps.push_back(full.steps[i]);
  if (full.steps.size() > skip) out.range = g.range(full.steps.back());
  return out;
}

void check_monomial(const Graph& g, const Monomial& m) {
  if (m.alpha.range != m.beta.range)
    throw DomainError("monomial " + g.path_name(m.alpha) + " (" + g.path_name(m.beta) +
                      ")* has mismatched ranges");
}

}  // namespace

bool operator<(const Monomial& a, const Monomial& b) {
  const std::size_t la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  if (int c = compare_paths(a.alpha, b.alpha)) return c < 0;
  return compare_paths(a.beta, b.beta) < 0;
}

std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& a, const Monomial& b) {
  // gamma = beta gamma'  ->  alpha gamma' delta^*
  if (is_prefix(a.beta, b.alpha))
    return Monomial{concat_tail(g, a.alpha, b.alpha, a.beta.length()), b.beta};
  // beta = gamma beta'   ->  alpha (delta beta')^*
  if (is_prefix(b.alpha, a.beta))
    return Monomial{a.alpha, concat_tail(g, b.beta, a.beta, b.alpha.length())};
  return std::nullopt;
}

bool is_reducible(const Graph& g, const Monomial& m) {
  if (m.alpha.steps.empty() || m.beta.steps.empty()) return false;
  const EdgeRef f = m.alpha.steps.back();
  if (f != m.beta.steps.back()) return false;
  const auto d = g.designated_edge(g.source(f));
  return d && *d == f.arrow;
}

Element Element::vertex(GraphPtr g, Field f, VertexId v) {
  if (v >= g->vertex_count()) throw DomainError("vertex id out of range");
  return monomial(std::move(g), f, Monomial::vertex(v), Scalar::one(f));
}

Element Element::edge(GraphPtr g, Field f, EdgeRef e) {
  const Path p = g->make_path(g->source(e), {e});
  return monomial(std::move(g), f, Monomial::real(p), Scalar::one(f));
}

Element Element::ghost(GraphPtr g, Field f, EdgeRef e) {
  const Path p = g->make_path(g->source(e), {e});
  return monomial(std::move(g), f, Monomial::ghost(p), Scalar::one(f));
}

Element Element::path(GraphPtr g, Field f, const Path& p) {
  return monomial(std::move(g), f, Monomial::real(p), Scalar::one(f));
}

Element Element::monomial(GraphPtr g, Field f, const Monomial& m, const Scalar& k) {
  Element x(std::move(g), f);
  x.add_term(m, k);
  return normal_form(x);
}

Element Element::identity(GraphPtr g, Field f) {
  Element x(g, f);
  for (VertexId v = 0; v < g->vertex_count(); ++v) x.add_term(Monomial::vertex(v), Scalar::one(f));
  return x;
}

std::size_t Element::max_length() const {
  std::size_t out = 0;
  for (const auto& [m, k] : terms_) out = std::max(out, m.length());
  return out;
}

void Element::add_term(const Monomial& m, const Scalar& k) {
  if (k.field() != field_) throw DomainError("coefficient field does not match element field");
  if (k.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, k);
  if (!inserted) {
    it->second += k;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::require_compatible(const Element& o) const {
  if (field_ != o.field_) throw DomainError("elements live over different fields");
  if (graph_ != o.graph_ && !(*graph_ == *o.graph_))
    throw DomainError("elements live over different graphs");
}

Element& Element::operator+=(const Element& o) {
  require_compatible(o);
  for (const auto& [m, k] : o.terms_) add_term(m, k);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_compatible(o);
  for (const auto& [m, k] : o.terms_) add_term(m, -k);
  return *this;
}

Element& Element::operator*=(const Scalar& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

bool operator==(const Element& a, const Element& b) {
  if (a.field_ != b.field_) return false;
  if (a.graph_ != b.graph_ && !(*a.graph_ == *b.graph_)) return false;
  return a.terms_ == b.terms_;
}

Element normal_form(const Element& x) {
  const Graph& g = x.graph();
  Element out(x.graph_ptr(), x.field());
  std::vector<std::pair<Monomial, Scalar>> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto [m, k] = std::move(work.back());
    work.pop_back();
    check_monomial(g, m);
    if (!is_reducible(g, m)) {
      out.add_term(m, k);
      continue;
    }
    const EdgeRef f = m.alpha.steps.back();
    const VertexId v = g.source(f);
    Monomial base = m;
    base.alpha.steps.pop_back();
    base.beta.steps.pop_back();
    base.alpha.range = v;
    base.beta.range = v;
    for (ArrowId a : g.out_edges(v)) {
      if (a == f.arrow) continue;
      Monomial side = base;
      side.alpha.steps.push_back(EdgeRef{a, 0});
      side.beta.steps.push_back(EdgeRef{a, 0});
      side.alpha.range = side.beta.range = g.arrow(a).dst;
      work.emplace_back(std::move(side), -k);
    }
    work.emplace_back(std::move(base), k);
  }
  return out;
}

Element multiply(const Element& x, const Element& y) {
  x.require_compatible(y);
  const Graph& g = x.graph();
  Element raw(x.graph_ptr(), x.field());
  for (const auto& [a, ka] : x.terms())
    for (const auto& [b, kb] : y.terms())
      if (auto m = multiply_monomials(g, a, b)) raw.add_term(*m, ka * kb);
  return normal_form(raw);
}

Element involution(const Element& x) {
  Element out(x.graph_ptr(), x.field());
  for (const auto& [m, k] : x.terms()) out.add_term(adjoint(m), k);
  return normal_form(out);
}

}  // namespace lpa
