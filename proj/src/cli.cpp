#include "lpa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "lpa/error.hpp"
#include "lpa/expression.hpp"
#include "lpa/graph_algorithms.hpp"
#include "lpa/ideal.hpp"
#include "lpa/io.hpp"
#include "lpa/oracle.hpp"
#include "lpa/quotient.hpp"

namespace lpa {

namespace {

/// A ParseError that also knows which input it came from.
struct FileError : ParseError {
  FileError(std::string file, const ParseError& e) : ParseError(e), file(std::move(file)) {}
  std::string file;
};

struct Options {
  std::string graph;
  std::string gens;
  std::vector<std::string> seed, H, S, gen;
  std::string x, y;
  std::size_t bound = 6;
  std::string field = "q";
  bool pretty = false;
  std::string out;
};

template <class F>
auto located(const std::string& file, F&& f) {
  try {
    return f();
  } catch (const FileError&) {
    throw;
  } catch (const ParseError& e) {
    throw FileError(file, e);
  }
}

GraphPtr graph_of(const Options& o) {
  return located(o.graph, [&] { return load_graph(o.graph); });
}

Field field_of(const Options& o) {
  try {
    return Field::parse(o.field);
  } catch (const ParseError& e) {
    throw FileError("--field", e);
  } catch (const DomainError& e) {
    throw FileError("--field", ParseError("", o.field, e.what()));
  }
}

VertexSet vertex_set(const Graph& g, const std::vector<std::string>& names, const char* flag) {
  VertexSet out;
  for (const std::string& n : names) {
    auto v = g.find_vertex(n);
    if (!v) throw FileError(flag, ParseError("", n, "unknown vertex '" + n + "'"));
    out.insert(*v);
  }
  return out;
}

Element element_of(const GraphPtr& g, Field f, const std::string& text, const char* flag) {
  return located(flag, [&] { return parse_element(g, f, text); });
}

Json diagnostic(const std::string& file, const std::string& location, const std::string& token,
                const std::string& message) {
  Json d = {{"severity", "error"}, {"file", file}};
  if (!location.empty()) d["location"] = location;
  if (!token.empty()) d["token"] = token;
  d["message"] = message;
  return d;
}

using Handler = std::function<Json(const Options&)>;

Json cmd_check(const Options& o) {
  GraphPtr g = graph_of(o);
  std::size_t edges = 0;
  for (ArrowId a = 0; a < g->arrow_count(); ++a) edges += g->arrow(a).bundle ? 0 : 1;
  Json kinds = Json::object();
  for (VertexId v = 0; v < g->vertex_count(); ++v) {
    static const char* names[] = {"sink", "regular", "infinite-emitter"};
    kinds[g->vertex_name(v)] = names[static_cast<int>(g->kind(v))];
  }
  return {{"valid", true},
          {"vertices", g->vertex_count()},
          {"edges", edges},
          {"bundles", g->arrow_count() - edges},
          {"kinds", kinds},
          {"graph", graph_json(*g)}};
}

Json cmd_closure(const Options& o) {
  GraphPtr g = graph_of(o);
  return {{"H", vertex_set_json(*g, hereditary_saturated_closure(*g, vertex_set(*g, o.seed, "--seed")))}};
}

Json cmd_breaking(const Options& o) {
  GraphPtr g = graph_of(o);
  return {{"breaking", vertex_set_json(*g, breaking_vertices(*g, vertex_set(*g, o.H, "--H")))}};
}

QuotientPresentation presentation_of(const GraphPtr& g, const Options& o) {
  return quotient_graph(g, AdmissiblePair{vertex_set(*g, o.H, "--H"), vertex_set(*g, o.S, "--S")});
}

Json cmd_quotient(const Options& o) {
  GraphPtr g = graph_of(o);
  const QuotientPresentation q = presentation_of(g, o);
  Json pv = Json::object(), pe = Json::object();
  for (const auto& [v, p] : q.primed_vertices) pv[g->vertex_name(v)] = q.graph->vertex_name(p);
  for (const auto& [a, p] : q.primed_edges) pe[g->arrow(a).name] = q.graph->arrow(p).name;
  return {{"breaking", vertex_set_json(*g, q.breaking)},
          {"graph", graph_json(*q.graph)},
          {"primed_vertices", pv},
          {"primed_edges", pe}};
}

Json cmd_normal_form(const Options& o) {
  GraphPtr g = graph_of(o);
  return {{"normal_form", format_element(element_of(g, field_of(o), o.x, "--x"))}};
}

Json cmd_mul(const Options& o) {
  GraphPtr g = graph_of(o);
  const Field f = field_of(o);
  const Element x = element_of(g, f, o.x, "--x");
  const Element y = element_of(g, f, o.y, "--y");
  return {{"product", format_element(multiply(x, y))}};
}

Json cmd_phi(const Options& o) {
  GraphPtr g = graph_of(o);
  const Field f = field_of(o);
  const QuotientPresentation q = presentation_of(g, o);
  const Element x = element_of(g, f, o.x, "--x");
  const Element image = apply_phi(q, x);
  return {{"image", format_element(image)}, {"in_kernel", image.is_zero()}};
}

Json cmd_member(const Options& o) {
  GraphPtr g = graph_of(o);
  const Field f = field_of(o);
  const Element x = element_of(g, f, o.x, "--x");
  std::vector<Element> gens;
  Json listed = Json::array();
  for (const std::string& text : o.gen) {
    gens.push_back(element_of(g, f, text, "--gen"));
    listed.push_back(format_element(gens.back()));
  }
  const OracleResult r = membership_oracle(gens, x, o.bound);
  Json j = {{"x", format_element(x)}, {"generators", listed}};
  if (r.found()) {
    j["result"] = "witness";
    j["witness"] = witness_json(*g, *r.witness);
  } else {
    j["result"] = "inconclusive(" + std::to_string(o.bound) + ")";
  }
  if (!o.H.empty() || !o.S.empty()) j["graded"] = graded_membership(presentation_of(g, o), x);
  return j;
}

Json cmd_condition_l(const Options& o) {
  GraphPtr g = graph_of(o);
  const ConditionL c = condition_L(*g);
  return {{"holds", c.holds}, {"witness", c.witness ? Json(g->path_name(c.witness->path)) : Json()}};
}

Json cmd_condition_k(const Options& o) {
  GraphPtr g = graph_of(o);
  const ConditionK c = condition_K(*g);
  return {{"holds", c.holds}, {"witness", c.witness ? Json(g->vertex_name(*c.witness)) : Json()}};
}

Json cmd_admissible(const Options& o) {
  GraphPtr g = graph_of(o);
  Json pairs = Json::array();
  for (const AdmissiblePair& p : admissible_pairs(*g))
    pairs.push_back({{"H", vertex_set_json(*g, p.H)}, {"S", vertex_set_json(*g, p.S)}});
  return {{"pairs", pairs}};
}

Json cmd_principal(const Options& o) {
  GraphPtr g = graph_of(o);
  const Field f = field_of(o);
  const StructuredGeneratorSet gens = located(o.gens, [&] { return load_generators(*g, f, o.gens); });
  return certificate_json(g, principal_generator(g, gens, o.bound));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt path algebra toolkit", "lpa"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--field", o.field, "Coefficient field: q or fp:<p>");
  app.add_flag("--pretty", o.pretty, "Indented output");
  app.add_option("--out", o.out, "Write the output document to this file");

  Handler handler;
  auto verb = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--graph", o.graph, "Graph document")->required()->check(CLI::ExistingFile);
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };
  auto set_option = [&](CLI::App* sub, const char* flag, std::vector<std::string>& target, const char* help) {
    return sub->add_option(flag, target, help)->delimiter(',')->allow_extra_args(false);
  };

  verb("check", "Validate a graph document", cmd_check);
  set_option(verb("closure", "Hereditary saturated closure", cmd_closure), "--seed", o.seed, "Seed vertices");
  set_option(verb("breaking", "Breaking vertices of H", cmd_breaking), "--H", o.H, "Hereditary saturated set")
      ->required();
  for (auto [name, help, h] : {std::tuple{"quotient", "Quotient graph of an admissible pair", Handler(cmd_quotient)},
                               std::tuple{"phi", "Image under the quotient map", Handler(cmd_phi)}}) {
    CLI::App* sub = verb(name, help, h);
    set_option(sub, "--H", o.H, "Hereditary saturated set")->required();
    set_option(sub, "--S", o.S, "Breaking vertices kept in the ideal");
    if (std::string(name) == "phi") sub->add_option("--x", o.x, "Element")->required();
  }
  verb("normal-form", "Normal form of an element", cmd_normal_form)->add_option("--x", o.x, "Element")->required();
  {
    CLI::App* sub = verb("mul", "Product of two elements", cmd_mul);
    sub->add_option("--x", o.x, "Left factor")->required();
    sub->add_option("--y", o.y, "Right factor")->required();
  }
  {
    CLI::App* sub = verb("member", "Bounded two-sided ideal membership search", cmd_member);
    sub->add_option("--x", o.x, "Element")->required();
    sub->add_option("--gen", o.gen, "Generator (repeatable)")->required()->allow_extra_args(false);
    sub->add_option("--bound", o.bound, "Largest factor length")->check(CLI::Range(0, 12));
    set_option(sub, "--H", o.H, "Also decide membership in I(H,S)");
    set_option(sub, "--S", o.S, "Breaking vertices for --H");
  }
  verb("condition-l", "Condition (L)", cmd_condition_l);
  verb("condition-k", "Condition (K)", cmd_condition_k);
  verb("admissible", "Enumerate admissible pairs", cmd_admissible);
  {
    CLI::App* sub = verb("principal", "Principal generator certificate", cmd_principal);
    sub->add_option("--gens", o.gens, "Structured generator document")->required()->check(CLI::ExistingFile);
    sub->add_option("--bound", o.bound, "Oracle bound for input checks")->check(CLI::Range(0, 12));
  }

  auto report = [&](const Json& d, int code) {
    err << d.dump() << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return report(diagnostic("<command line>", "", "", e.what()), 2);
  }

  try {
    const Json result = handler(o);
    const std::string text = (o.pretty ? result.dump(2) : result.dump()) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file || !(file << text)) return report(diagnostic(o.out, "", "", "cannot write output file"), 1);
    }
    return 0;
  } catch (const FileError& e) {
    return report(diagnostic(e.file, e.location(), e.token(), e.what()), 2);
  } catch (const ParseError& e) {
    return report(diagnostic("", e.location(), e.token(), e.what()), 2);
  } catch (const DomainError& e) {
    return report(diagnostic(o.graph, "", "", e.what()), 1);
  } catch (const std::exception& e) {
    return report(diagnostic(o.graph, "", "", std::string("internal error: ") + e.what()), 1);
  }
}

}  // namespace lpa
