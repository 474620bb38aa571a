#include "lpa/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "lpa/error.hpp"
#include "lpa/expression.hpp"

namespace lpa {

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "", std::string("syntax error: ") + e.what());
  }
}

void require_object(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, j.dump(), "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(where + "/" + key, key, "unknown field '" + key + "'");
  }
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, j.dump(), "expected a string");
  return j.get<std::string>();
}

const Json& array_at(const Json& parent, const char* key, const std::string& where) {
  static const Json empty = Json::array();
  if (!parent.contains(key)) return empty;
  const Json& j = parent.at(key);
  if (!j.is_array()) throw ParseError(where + "/" + key, j.dump(), "expected an array");
  return j;
}

std::vector<std::string> names_at(const Json& parent, const char* key) {
  std::vector<std::string> out;
  const Json& arr = array_at(parent, key, "");
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(string_at(arr[i], std::string("/") + key + "/" + std::to_string(i)));
  return out;
}

VertexId vertex_at(const Graph& g, const Json& j, const std::string& where) {
  const std::string name = string_at(j, where);
  auto v = g.find_vertex(name);
  if (!v) throw ParseError(where, name, "unknown vertex '" + name + "'");
  return *v;
}

Scalar scalar_at(Field f, const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar(f, mpz_class(j.dump()), 1);
    if (j.is_string()) return parse_scalar(f, j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, j.dump(), e.what());
  } catch (const DomainError& e) {
    throw ParseError(where, j.dump(), e.what());
  }
  throw ParseError(where, j.dump(), "expected an integer or a scalar string");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "", "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphDescription parse_graph_document(const std::string& text) {
  const Json j = parse_json(text);
  require_object(j, "", {"vertices", "edges", "bundles"});
  GraphDescription d;
  d.vertices = names_at(j, "vertices");
  for (const char* key : {"edges", "bundles"}) {
    const Json& arr = array_at(j, key, "");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = std::string("/") + key + "/" + std::to_string(i);
      require_object(arr[i], where, {"name", "src", "dst"});
      GraphDescription::Arrow a;
      for (auto [field, target] : {std::pair{"name", &a.name}, std::pair{"src", &a.src}, std::pair{"dst", &a.dst}}) {
        if (!arr[i].contains(field)) throw ParseError(where, "", std::string("missing field '") + field + "'");
        *target = string_at(arr[i].at(field), where + "/" + field);
      }
      (std::string(key) == "edges" ? d.edges : d.bundles).push_back(std::move(a));
    }
  }
  return d;
}

GraphPtr parse_graph_text(const std::string& text) {
  return std::make_shared<const Graph>(Graph::validate(parse_graph_document(text)));
}

GraphPtr load_graph(const std::string& path) { return parse_graph_text(read_file(path)); }

Json graph_json(const Graph& g) {
  const GraphDescription d = g.describe();
  Json j;
  j["vertices"] = d.vertices;
  for (const char* key : {"edges", "bundles"}) {
    Json arr = Json::array();
    for (const auto& a : std::string(key) == "edges" ? d.edges : d.bundles)
      arr.push_back({{"name", a.name}, {"src", a.src}, {"dst", a.dst}});
    j[key] = std::move(arr);
  }
  return j;
}

std::string emit_graph(const Graph& g) { return graph_json(g).dump(2) + "\n"; }

EdgeRef parse_edge_ref(const Graph& g, const std::string& text) {
  static const std::regex pattern(R"(([A-Za-z_][A-Za-z0-9_']*)(?:\[([0-9]{1,18})\])?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ParseError("", text, "malformed edge reference '" + text + "'");
  auto a = g.find_arrow(m[1].str());
  if (!a) throw ParseError("", text, "unknown edge '" + m[1].str() + "'");
  const bool bundle = g.arrow(*a).bundle;
  if (bundle != m[2].matched)
    throw ParseError("", text, bundle ? "bundle '" + text + "' needs a member index" : "'" + text + "' is not a bundle");
  return EdgeRef{*a, m[2].matched ? std::stoull(m[2].str()) : 0};
}

StructuredGeneratorSet parse_generators(const Graph& g, Field f, const std::string& text) {
  const Json j = parse_json(text);
  require_object(j, "", {"vertices", "breaking", "cycle_polys"});
  StructuredGeneratorSet out{f, {}, {}, {}};
  for (const char* key : {"vertices", "breaking"}) {
    const Json& arr = array_at(j, key, "");
    for (std::size_t i = 0; i < arr.size(); ++i)
      (std::string(key) == "vertices" ? out.vertices : out.breaking)
          .insert(vertex_at(g, arr[i], std::string("/") + key + "/" + std::to_string(i)));
  }
  const Json& polys = array_at(j, "cycle_polys", "");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const std::string where = "/cycle_polys/" + std::to_string(i);
    const Json& p = polys[i];
    require_object(p, where, {"base", "cycle", "poly"});
    for (const char* field : {"base", "cycle", "poly"})
      if (!p.contains(field)) throw ParseError(where, "", std::string("missing field '") + field + "'");

    CyclePolynomial c{vertex_at(g, p.at("base"), where + "/base"), {}, FieldPolynomial(f)};
    std::vector<EdgeRef> steps;
    const Json& cyc = array_at(p, "cycle", where);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const std::string w = where + "/cycle/" + std::to_string(k);
      try {
        steps.push_back(parse_edge_ref(g, string_at(cyc[k], w)));
      } catch (const ParseError& e) {
        throw ParseError(w, e.token(), e.what());
      }
    }
    try {
      c.cycle = Cycle{g.make_path(c.base, steps)};
    } catch (const DomainError& e) {
      throw ParseError(where + "/cycle", "", e.what());
    }

    std::vector<Scalar> coeffs{Scalar::one(f)};
    const Json& terms = array_at(p, "poly", where);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string w = where + "/poly/" + std::to_string(k);
      const Json& t = terms[k];
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned())
        throw ParseError(w, t.dump(), "expected [exponent, scalar]");
      const std::uint64_t e = t[0].get<std::uint64_t>();
      if (e == 0) throw ParseError(w + "/0", t[0].dump(), "exponent 0 is implicit (constant term 1)");
      if (e > 4096) throw ParseError(w + "/0", t[0].dump(), "exponent too large");
      if (coeffs.size() <= e) coeffs.resize(e + 1, Scalar::zero(f));
      coeffs[e] += scalar_at(f, t[1], w + "/1");
    }
    c.poly = FieldPolynomial(f, std::move(coeffs));
    out.cycle_gens.push_back(std::move(c));
  }
  return out;
}

StructuredGeneratorSet load_generators(const Graph& g, Field f, const std::string& path) {
  return parse_generators(g, f, read_file(path));
}

Json vertex_set_json(const Graph& g, const VertexSet& s) {
  Json arr = Json::array();
  for (VertexId v : s) arr.push_back(g.vertex_name(v));
  return arr;
}

Json cycle_polynomial_json(const GraphPtr& g, const CyclePolynomial& c) {
  Json cycle = Json::array();
  for (const EdgeRef& e : c.cycle.path.steps) cycle.push_back(g->ref_name(e));
  Json poly = Json::array();
  const auto& cs = c.poly.coefficients();
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (!cs[i].is_zero()) poly.push_back(Json::array({i, cs[i].str()}));
  return {{"base", g->vertex_name(c.base)}, {"cycle", cycle}, {"poly", poly}, {"element", format_element(c.element(g))}};
}

Json generators_json(const GraphPtr& g, const StructuredGeneratorSet& s) {
  Json polys = Json::array();
  for (const CyclePolynomial& c : s.cycle_gens) polys.push_back(cycle_polynomial_json(g, c));
  return {{"vertices", vertex_set_json(*g, s.vertices)}, {"breaking", vertex_set_json(*g, s.breaking)},
          {"cycle_polys", polys}};
}

Json witness_json(const Graph& g, const MembershipWitness& w) {
  Json terms = Json::array();
  for (const WitnessTerm& t : w.combination)
    terms.push_back({{"coefficient", t.coefficient.str()},
                     {"left", format_monomial(g, t.left)},
                     {"generator", t.generator},
                     {"right", format_monomial(g, t.right)}});
  return {{"bound", w.bound}, {"terms", terms}};
}

Json certificate_json(const GraphPtr& g, const PrincipalCertificate& c) {
  Json ys = Json::array();
  for (const CyclePolynomial& y : c.canonical.Y) ys.push_back(cycle_polynomial_json(g, y));
  Json trace = Json::array();
  for (const TraceStep& s : c.canonical.trace)
    trace.push_back({{"step", kind_name(s.kind)}, {"vertex", g->vertex_name(s.vertex)}, {"detail", describe(*g, s)}});
  Json orth = Json::array();
  for (const OrthogonalGenerator& o : c.orthogonal) {
    static const char* names[] = {"vertex", "breaking", "cycle"};
    orth.push_back({{"vertex", g->vertex_name(o.vertex)},
                    {"source", names[static_cast<int>(o.source)]},
                    {"y", format_element(o.y)},
                    {"recovery", "verified"}});
  }
  Json inputs = Json::array();
  for (const InputCheck& in : c.input_membership) {
    std::string status;
    switch (in.status) {
      case InputCheck::Status::Algebraic: status = "algebraic"; break;
      case InputCheck::Status::Oracle: status = "oracle"; break;
      case InputCheck::Status::Unverified: status = "unverified(" + std::to_string(c.bound_used) + ")"; break;
    }
    Json entry = {{"generator", in.label}, {"element", format_element(in.element)}, {"status", status}};
    if (in.witness) entry["witness"] = witness_json(*g, *in.witness);
    inputs.push_back(std::move(entry));
  }
  return {{"field", c.input.field.name()},
          {"input", generators_json(g, c.input)},
          {"canonical",
           {{"H", vertex_set_json(*g, c.canonical.H)},
            {"V0", vertex_set_json(*g, c.canonical.V0)},
            {"S", vertex_set_json(*g, c.canonical.S)},
            {"Y", ys}}},
          {"trace", trace},
          {"orthogonal", orth},
          {"generator", format_element(c.generator)},
          {"verification",
           {{"orthogonality", "verified"}, {"recoveries", "verified"}, {"inputs", inputs}}},
          {"bound_used", c.bound_used}};
}

}  // namespace lpa
