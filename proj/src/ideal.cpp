#include "lpa/ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "lpa/error.hpp"
#include "lpa/expression.hpp"
#include "lpa/graph_algorithms.hpp"

namespace lpa {

namespace {

Path cycle_power(const Cycle& c, std::size_t n) {
  Path p = Path::vertex(c.base());
  for (std::size_t i = 0; i < n; ++i)
    for (const EdgeRef& e : c.path.steps) p.steps.push_back(e);
  return p;
}

bool touches(const Cycle& c, const Graph& g, const VertexSet& set) {
  return std::any_of(c.path.steps.begin(), c.path.steps.end(),
                     [&](const EdgeRef& e) { return set.count(g.source(e)) > 0; });
}

/// For every exit e of a cycle in `ys`, the path mu e from the cycle's base
/// that runs along the cycle and leaves through e. Since e^* mu^* p(g) mu e
/// = r(e), each range is generated by the cycle polynomial alone.
std::map<VertexId, Path> exit_paths(const Graph& g, const std::vector<CyclePolynomial>& ys) {
  std::map<VertexId, Path> out;
  for (const CyclePolynomial& y : ys) {
    const auto& steps = y.cycle.path.steps;
    std::vector<EdgeRef> prefix;
    for (const EdgeRef& step : steps) {
      const VertexId x = g.source(step);
      std::vector<EdgeRef> leave;
      for (ArrowId a : g.out_edges(x))
        if (a != step.arrow) leave.push_back({a, 0});
      for (ArrowId a : g.out_bundles(x)) leave.push_back({a, a == step.arrow ? step.member + 1 : 0});
      for (const EdgeRef& e : leave) {
        std::vector<EdgeRef> p = prefix;
        p.push_back(e);
        out.emplace(g.range(e), g.make_path(y.base, std::move(p)));
      }
      prefix.push_back(step);
    }
  }
  return out;
}

/// k * left * u * right with u a vertex generator.
struct VertexTerm {
  Scalar k;
  Monomial left;
  VertexId u;
  Monomial right;
};

/// Expresses each vertex of H as a combination of sandwiched generators,
/// following the order in which the closure was built. Seeds are vertices of
/// V0 or ranges of cycle exits (reached through the cycle's base).
class VertexDerivations {
 public:
  VertexDerivations(const Graph& g, Field f, const VertexSet& v0, std::map<VertexId, Path> exits)
      : g_(g), f_(f), v0_(v0), exits_(std::move(exits)) {
    VertexSet seeds = v0;
    for (const auto& [v, p] : exits_) seeds.insert(v);
    trace_ = closure_trace(g, seeds);
  }

  const std::vector<VertexTerm>& of(VertexId h) {
    if (auto it = memo_.find(h); it != memo_.end()) return it->second;
    const ClosureReason& why = trace_.reason.at(h);
    std::vector<VertexTerm> out;
    switch (why.kind) {
      case ClosureReason::Kind::Seed:
        if (v0_.count(h)) {
          out.push_back({Scalar::one(f_), Monomial::vertex(h), h, Monomial::vertex(h)});
        } else {
          const Path& p = exits_.at(h);
          out.push_back({Scalar::one(f_), Monomial::ghost(p), p.source, Monomial::real(p)});
        }
        break;
      case ClosureReason::Kind::Hereditary: {
        // h = e^* s(e) e
        const Path e = g_.make_path(g_.source(why.via), {why.via});
        for (const VertexTerm& t : of(g_.source(why.via))) {
          auto l = multiply_monomials(g_, Monomial::ghost(e), t.left);
          auto r = multiply_monomials(g_, t.right, Monomial::real(e));
          if (l && r) out.push_back({t.k, *l, t.u, *r});
        }
        break;
      }
      case ClosureReason::Kind::Saturated:
        // h = sum over out-edges f of f r(f) f^*
        for (ArrowId a : g_.out_edges(h)) {
          const Path f = g_.make_path(h, {EdgeRef{a, 0}});
          for (const VertexTerm& t : of(g_.arrow(a).dst)) {
            auto l = multiply_monomials(g_, Monomial::real(f), t.left);
            auto r = multiply_monomials(g_, t.right, Monomial::ghost(f));
            if (l && r) out.push_back({t.k, *l, t.u, *r});
          }
        }
        break;
    }
    return memo_[h] = std::move(out);
  }

 private:
  const Graph& g_;
  Field f_;
  VertexSet v0_;
  std::map<VertexId, Path> exits_;
  ClosureTrace trace_;
  std::map<VertexId, std::vector<VertexTerm>> memo_;
};

/// Substitutes u = u a u into each vertex term.
MembershipWitness through_generator(const Graph& g, const std::vector<VertexTerm>& terms) {
  MembershipWitness w;
  for (const VertexTerm& t : terms) {
    auto l = multiply_monomials(g, t.left, Monomial::vertex(t.u));
    auto r = multiply_monomials(g, Monomial::vertex(t.u), t.right);
    if (l && r) w.combination.push_back({t.k, *l, 0, *r});
  }
  return w;
}

MembershipWitness times_right(const Graph& g, const MembershipWitness& w, const Element& x) {
  MembershipWitness out;
  for (const WitnessTerm& t : w.combination)
    for (const auto& [m, c] : x.terms())
      if (auto r = multiply_monomials(g, t.right, m)) out.combination.push_back({t.coefficient * c, t.left, 0, *r});
  return out;
}

MembershipWitness times_left(const Graph& g, const Element& x, const MembershipWitness& w) {
  MembershipWitness out;
  for (const auto& [m, c] : x.terms())
    for (const WitnessTerm& t : w.combination)
      if (auto l = multiply_monomials(g, m, t.left)) out.combination.push_back({c * t.coefficient, *l, 0, t.right});
  return out;
}

}  // namespace

Element CyclePolynomial::element(const GraphPtr& g) const {
  const Field f = poly.field();
  Element out(g, f);
  const auto& cs = poly.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) out.add_term(Monomial::real(g->make_path(base, cycle_power(cycle, i).steps)), cs[i]);
  return normal_form(out);
}

void require_valid(const Graph& g, const CyclePolynomial& c) {
  require_cycle(g, c.cycle);
  if (c.cycle.base() != c.base)
    throw DomainError("cycle '" + g.path_name(c.cycle.path) + "' is not based at '" + g.vertex_name(c.base) + "'");
  if (c.poly.degree() < 1) throw DomainError("cycle polynomial must have degree >= 1");
  if (!c.poly.coefficient(0).is_one()) throw DomainError("cycle polynomial must have constant term 1");
}

std::string kind_name(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::ExitRange: return "exit-range";
    case TraceStep::Kind::CycleMeetsH: return "cycle-meets-H";
    case TraceStep::Kind::PrimedExit: return "primed-exit";
    case TraceStep::Kind::BreakingInH: return "breaking-in-H";
    case TraceStep::Kind::BreakingDegenerate: return "breaking-degenerate";
    case TraceStep::Kind::GcdMerge: return "gcd-merge";
    case TraceStep::Kind::GcdUnit: return "gcd-unit";
    case TraceStep::Kind::Redundant: return "redundant";
  }
  return "?";
}

std::string describe(const Graph& g, const TraceStep& s) {
  const std::string v = g.vertex_name(s.vertex);
  switch (s.kind) {
    case TraceStep::Kind::ExitRange:
      return "exit " + g.ref_name(*s.edge) + " leaves a cycle; its range " + v + " enters V0";
    case TraceStep::Kind::CycleMeetsH:
      return "cycle based at " + v + " meets H; " + v + " enters V0";
    case TraceStep::Kind::PrimedExit:
      return "cycle step " + g.ref_name(*s.edge) + " enters " + v + " in B_H\\S; " + v + " joins S";
    case TraceStep::Kind::BreakingInH:
      return "breaking generator " + v + " lies in H; dropped";
    case TraceStep::Kind::BreakingDegenerate:
      return "breaking generator " + v + " has no edge leaving H; " + v + " enters V0";
    case TraceStep::Kind::GcdMerge:
      return "at " + v + ": gcd(" + s.p->str() + ", " + s.q->str() + ") = " + s.d->str() + " = (" + s.a->str() +
             ")*p + (" + s.b->str() + ")*q";
    case TraceStep::Kind::GcdUnit:
      return "at " + v + ": gcd(" + s.p->str() + ", " + s.q->str() + ") = 1; " + v + " enters V0";
    case TraceStep::Kind::Redundant:
      return v + " is generated by the remaining generators; removed from V0";
  }
  return "";
}

CanonicalIdealForm canonicalize(const Graph& g, const StructuredGeneratorSet& gens) {
  for (VertexId v : gens.vertices)
    if (v >= g.vertex_count()) throw DomainError("vertex generator out of range");
  for (VertexId v : gens.breaking)
    if (v >= g.vertex_count()) throw DomainError("breaking generator out of range");
  for (const CyclePolynomial& c : gens.cycle_gens) {
    require_valid(g, c);
    if (c.poly.field() != gens.field) throw DomainError("cycle polynomial over the wrong field");
  }

  CanonicalIdealForm out;
  VertexSet v0 = gens.vertices;
  VertexSet pending = gens.breaking;
  std::vector<CyclePolynomial> ys = gens.cycle_gens;
  VertexSet h, s;

  for (;;) {
    h = hereditary_saturated_closure(g, v0);

    bool restart = false;
    for (auto it = pending.begin(); it != pending.end();) {
      const VertexId v = *it;
      if (h.count(v)) {
        out.trace.push_back({TraceStep::Kind::BreakingInH, v});
        it = pending.erase(it);
        continue;
      }
      const auto& bundles = g.out_bundles(v);
      const bool bundles_in_h =
          std::all_of(bundles.begin(), bundles.end(), [&](ArrowId a) { return h.count(g.arrow(a).dst) > 0; });
      if (g.kind(v) == VertexKind::InfiniteEmitter && bundles_in_h && edges_leaving(g, v, h).empty()) {
        out.trace.push_back({TraceStep::Kind::BreakingDegenerate, v});
        v0.insert(v);
        pending.erase(it);
        restart = true;
        break;
      }
      ++it;
    }
    if (restart) continue;

    const VertexSet bh = breaking_vertices(g, h);
    s.clear();
    for (VertexId v : pending)
      if (bh.count(v)) s.insert(v);

    for (auto it = ys.begin(); it != ys.end(); ++it) {
      if (!touches(it->cycle, g, h)) continue;
      out.trace.push_back({TraceStep::Kind::CycleMeetsH, it->base});
      v0.insert(it->base);
      ys.erase(it);
      restart = true;
      break;
    }
    if (restart) continue;

    for (const CyclePolynomial& y : ys) {
      const auto exits = cycle_exits(g, y.cycle, h);
      if (!exits.empty()) {
        const VertexId r = g.range(exits.front());
        out.trace.push_back({TraceStep::Kind::ExitRange, r, exits.front()});
        v0.insert(r);
        restart = true;
        break;
      }
      // A cycle edge into w ∈ B_H \ S has a primed twin in the quotient,
      // which is an exit; it forces w^H into the ideal.
      for (const EdgeRef& e : y.cycle.path.steps) {
        const VertexId w = g.range(e);
        if (bh.count(w) && !s.count(w)) {
          out.trace.push_back({TraceStep::Kind::PrimedExit, w, e});
          pending.insert(w);
          restart = true;
          break;
        }
      }
      if (restart) break;
    }
    if (restart) continue;

    std::map<VertexId, std::vector<std::size_t>> by_base;
    for (std::size_t i = 0; i < ys.size(); ++i) by_base[ys[i].base].push_back(i);
    std::vector<CyclePolynomial> merged;
    for (const auto& [base, idx] : by_base) {
      CyclePolynomial acc = ys[idx.front()];
      bool unit = false;
      for (std::size_t j = 1; j < idx.size() && !unit; ++j) {
        const CyclePolynomial& other = ys[idx[j]];
        if (!(other.cycle == acc.cycle))
          throw std::logic_error("two exitless cycles share base " + g.vertex_name(base));
        GcdBezout gb = poly_gcd_bezout(acc.poly, other.poly);
        TraceStep step{gb.d.degree() == 0 ? TraceStep::Kind::GcdUnit : TraceStep::Kind::GcdMerge, base};
        step.p = acc.poly;
        step.q = other.poly;
        step.d = gb.d;
        step.a = gb.a;
        step.b = gb.b;
        out.trace.push_back(step);
        if (gb.d.degree() == 0) {
          unit = true;
        } else {
          acc.poly = gb.d;
        }
      }
      if (unit) {
        v0.insert(base);
        restart = true;
      } else {
        merged.push_back(std::move(acc));
      }
    }
    ys = std::move(merged);
    if (restart) continue;
    break;
  }

  const VertexSet bh = breaking_vertices(g, h);
  for (VertexId v : pending)
    if (!bh.count(v))
      throw DomainError("breaking generator '" + g.vertex_name(v) + "' is not a breaking vertex of H = " +
                        g.set_name(h));
  // Drop vertex generators the others already produce, largest first.
  VertexSet derived;
  for (const auto& [v, p] : exit_paths(g, ys)) derived.insert(v);
  VertexSet kept = v0;
  for (auto it = v0.rbegin(); it != v0.rend(); ++it) {
    VertexSet trial = kept;
    trial.erase(*it);
    VertexSet seeds = trial;
    seeds.insert(derived.begin(), derived.end());
    if (hereditary_saturated_closure(g, seeds) == h) {
      out.trace.push_back({TraceStep::Kind::Redundant, *it});
      kept = std::move(trial);
    }
  }

  out.H = std::move(h);
  out.V0 = std::move(kept);
  out.S = std::move(pending);
  out.Y = std::move(ys);
  return out;
}

std::vector<OrthogonalGenerator> orthogonalize(const GraphPtr& gp, Field f, const CanonicalIdealForm& c) {
  const Graph& g = *gp;
  std::map<VertexId, OrthogonalGenerator> by_vertex;
  auto claim = [&](VertexId v, Element y, OrthogonalGenerator::Source src) {
    if (!by_vertex.emplace(v, OrthogonalGenerator{v, std::move(y), src}).second)
      throw DomainError("canonical form uses vertex '" + g.vertex_name(v) + "' twice");
  };
  for (VertexId v : c.V0) {
    if (!c.H.count(v)) throw DomainError("V0 is not contained in H");
    claim(v, Element::vertex(gp, f, v), OrthogonalGenerator::Source::Vertex);
  }
  for (const CyclePolynomial& y : c.Y) {
    if (touches(y.cycle, g, c.H)) throw DomainError("a cycle of Y meets H");
    claim(y.base, y.element(gp), OrthogonalGenerator::Source::Cycle);
  }
  for (VertexId v : c.S) {
    // v^H (v + sum k g^r) = v^H, so v^H is redundant next to a cycle at v.
    if (by_vertex.count(v) && by_vertex.at(v).source == OrthogonalGenerator::Source::Cycle) continue;
    claim(v, breaking_element(gp, f, c.H, v), OrthogonalGenerator::Source::Breaking);
  }
  std::vector<OrthogonalGenerator> out;
  for (auto& [v, og] : by_vertex) out.push_back(std::move(og));
  return out;
}

bool PrincipalCertificate::fully_verified() const {
  return std::all_of(input_membership.begin(), input_membership.end(),
                     [](const InputCheck& c) { return c.status != InputCheck::Status::Unverified; });
}

PrincipalCertificate principal_generator(const GraphPtr& gp, const StructuredGeneratorSet& gens,
                                         std::size_t verify_bound) {
  const Graph& g = *gp;
  const Field f = gens.field;
  PrincipalCertificate cert{gens, canonicalize(g, gens), {}, Element(gp, f), {}, 0};
  const CanonicalIdealForm& cf = cert.canonical;
  cert.orthogonal = orthogonalize(gp, f, cf);

  for (const OrthogonalGenerator& og : cert.orthogonal) cert.generator += og.y;
  const std::vector<Element> principal{cert.generator};

  for (std::size_t i = 0; i < cert.orthogonal.size(); ++i) {
    const auto& oi = cert.orthogonal[i];
    const Element v = Element::vertex(gp, f, oi.vertex);
    if (!(v * cert.generator * v == oi.y))
      throw std::logic_error("recovery v a v = y fails at " + g.vertex_name(oi.vertex));
    for (std::size_t j = 0; j < cert.orthogonal.size(); ++j)
      if (i != j && !(oi.y * cert.orthogonal[j].y).is_zero())
        throw std::logic_error("orthogonal generators at " + g.vertex_name(oi.vertex) + " and " +
                               g.vertex_name(cert.orthogonal[j].vertex) + " do not annihilate");
  }

  VertexDerivations derive(g, f, cf.V0, exit_paths(g, cf.Y));
  std::map<VertexId, const CyclePolynomial*> y_at;
  for (const CyclePolynomial& y : cf.Y) y_at[y.base] = &y;

  auto record = [&](std::string label, Element x, std::optional<MembershipWitness> w) {
    InputCheck check{std::move(label), x, InputCheck::Status::Unverified, std::nullopt};
    if (w && check_witness(*w, principal, x)) {
      check.status = InputCheck::Status::Algebraic;
      check.witness = std::move(w);
    } else {
      OracleResult r = membership_oracle(principal, x, verify_bound);
      cert.bound_used = std::max(cert.bound_used, verify_bound);
      if (r.found()) {
        check.status = InputCheck::Status::Oracle;
        check.witness = std::move(r.witness);
      }
    }
    cert.input_membership.push_back(std::move(check));
  };

  for (VertexId v : gens.vertices)
    record("vertex " + g.vertex_name(v), Element::vertex(gp, f, v), through_generator(g, derive.of(v)));

  for (VertexId v : gens.breaking) {
    const std::string label = "breaking " + g.vertex_name(v);
    if (cf.H.count(v)) {
      record(label, Element::vertex(gp, f, v), through_generator(g, derive.of(v)));
      continue;
    }
    const Element vh = breaking_element(gp, f, cf.H, v);
    MembershipWitness w;
    w.combination.push_back({Scalar::one(f), Monomial::vertex(v), 0, Monomial::vertex(v)});
    if (y_at.count(v)) w = times_left(g, vh, w);
    record(label, vh, w);
  }

  for (const CyclePolynomial& c : gens.cycle_gens) {
    const std::string label = "cycle " + g.vertex_name(c.base) + ": " + format_element(c.element(gp));
    const Element x = c.element(gp);
    if (cf.H.count(c.base)) {
      record(label, x, times_right(g, through_generator(g, derive.of(c.base)), x));
      continue;
    }
    std::optional<MembershipWitness> w;
    if (auto it = y_at.find(c.base); it != y_at.end()) {
      // p = (p / d) d, and d(g) = u a u.
      const PolyDivision qr = divide(c.poly, it->second->poly);
      if (qr.remainder.is_zero()) {
        w.emplace();
        const auto& qs = qr.quotient.coefficients();
        for (std::size_t j = 0; j < qs.size(); ++j)
          if (!qs[j].is_zero())
            w->combination.push_back({qs[j], Monomial::vertex(c.base), 0,
                                      Monomial::real(g.make_path(c.base, cycle_power(c.cycle, j).steps))});
      }
    }
    record(label, x, w);
  }
  return cert;
}

std::vector<AdmissiblePair> admissible_pairs(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices)
    throw DomainError("admissible pair enumeration limited to " + std::to_string(max_vertices) + " vertices");
  std::set<VertexSet> hs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet seed;
    for (VertexId v = 0; v < n; ++v)
      if (mask >> v & 1) seed.insert(v);
    hs.insert(hereditary_saturated_closure(g, seed));
  }
  auto set_less = [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::vector<VertexSet> ordered(hs.begin(), hs.end());
  std::sort(ordered.begin(), ordered.end(), set_less);

  std::vector<AdmissiblePair> out;
  for (const VertexSet& h : ordered) {
    const VertexSet bh = breaking_vertices(g, h);
    const std::vector<VertexId> b(bh.begin(), bh.end());
    std::vector<VertexSet> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size()); ++mask) {
      VertexSet s;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (mask >> i & 1) s.insert(b[i]);
      subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), set_less);
    for (VertexSet& s : subsets) out.push_back({h, std::move(s)});
  }
  return out;
}

}  // namespace lpa
