#include "lpa/expression.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

namespace {

enum class Tok { Ident, Int, Slash, Star, Plus, Minus, Dot, LParen, RParen, LBracket, RBracket, Caret, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '/': k = Tok::Slash; break;
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '.': k = Tok::Dot; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case '^': k = Tok::Caret; break;
      default:
        throw ParseError(std::to_string(start), std::string(1, static_cast<char>(c)),
                         "unexpected character '" + std::string(1, static_cast<char>(c)) + "' at offset " +
                             std::to_string(start));
    }
    out.push_back({k, std::string(1, static_cast<char>(c)), i++});
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

/// Source and range of an edge factor, for the composability check. Vertex
/// factors are exempt, so `v.w` is simply zero.
struct Ends {
  VertexId s;
  VertexId r;
};

struct Factor {
  Element value;
  std::optional<Ends> ends;  // empty for parenthesized factors
};

class Parser {
 public:
  Parser(const GraphPtr& g, Field f, std::string_view text) : g_(g), f_(f), toks_(lex(text)) {}

  Element parse() {
    Element e = expression();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

  Scalar scalar_only() {
    Scalar s = scalar();
    if (peek().kind != Tok::End) fail(peek(), "trailing input after scalar");
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(std::to_string(t.pos), t.text, msg + " at offset " + std::to_string(t.pos));
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    return next();
  }

  Element expression() {
    Element acc(g_, f_);
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    for (;;) {
      Element t = term();
      if (negate)
        acc -= t;
      else
        acc += t;
      if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) break;
      negate = next().kind == Tok::Minus;
    }
    return acc;
  }

  Scalar scalar() {
    const Token& num = expect(Tok::Int, "integer");
    const mpz_class n(num.text);
    if (peek().kind == Tok::Slash) {
      next();
      const Token& den = expect(Tok::Int, "denominator");
      const mpz_class d(den.text);
      if (d == 0) fail(den, "zero denominator");
      try {
        return Scalar(f_, n, d);
      } catch (const DomainError& e) {
        fail(den, e.what());
      }
    }
    if (peek().kind == Tok::Ident && peek().text == "mod") {
      next();
      const Token& p = expect(Tok::Int, "modulus");
      if (f_.is_rational() || mpz_class(p.text) != f_.modulus())
        fail(p, "residue modulus " + p.text + " does not match field " + f_.name());
      return Scalar(f_, n, 1);
    }
    return Scalar(f_, n, 1);
  }

  Element term() {
    if (peek().kind == Tok::Int) {
      const Scalar k = scalar();
      if (peek().kind != Tok::Star) return Element::identity(g_, f_) * k;
      next();
      return product() * k;
    }
    return product();
  }

  Element product() {
    Factor acc = factor();
    while (peek().kind == Tok::Dot) {
      const Token& dot = next();
      Factor rhs = factor();
      if (acc.ends && rhs.ends && acc.ends->r != rhs.ends->s)
        fail(dot, "factors do not compose: range '" + g_->vertex_name(acc.ends->r) + "' meets source '" +
                      g_->vertex_name(rhs.ends->s) + "'");
      acc.value = multiply(acc.value, rhs.value);
      acc.ends = rhs.ends;
    }
    return std::move(acc.value);
  }

  Factor factor() {
    Factor f = atom();
    bool ghost = false;
    if (peek().kind == Tok::Star) {
      next();
      ghost = true;
    } else if (peek().kind == Tok::Caret) {
      next();
      expect(Tok::Star, "'*' after '^'");
      ghost = true;
    }
    if (ghost) {
      f.value = involution(f.value);
      if (f.ends) f.ends = Ends{f.ends->r, f.ends->s};
    }
    return f;
  }

  Factor atom() {
    if (peek().kind == Tok::LParen) {
      next();
      Element inner = expression();
      expect(Tok::RParen, "')'");
      return {std::move(inner), std::nullopt};
    }
    const Token& id = expect(Tok::Ident, "vertex or edge name");
    if (auto v = g_->find_vertex(id.text)) return {Element::vertex(g_, f_, *v), std::nullopt};
    auto a = g_->find_arrow(id.text);
    if (!a) fail(id, "unknown identifier '" + id.text + "'");
    const auto& arrow = g_->arrow(*a);
    std::uint64_t member = 0;
    if (arrow.bundle) {
      if (peek().kind != Tok::LBracket) fail(id, "bundle '" + id.text + "' needs a member index");
      next();
      const Token& idx = expect(Tok::Int, "member index");
      if (idx.text.size() > 18) fail(idx, "member index too large");
      member = std::stoull(idx.text);
      expect(Tok::RBracket, "']'");
    } else if (peek().kind == Tok::LBracket) {
      fail(peek(), "'" + id.text + "' is an ordinary edge, not a bundle");
    }
    const EdgeRef e{*a, member};
    return {Element::edge(g_, f_, e), Ends{arrow.src, arrow.dst}};
  }

  GraphPtr g_;
  Field f_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string coefficient_prefix(const Scalar& k) {
  if (k.field().is_rational()) {
    const std::string mag = k.magnitude_str();
    return mag == "1" ? "" : mag + "*";
  }
  return k.is_one() ? "" : k.str() + "*";
}

}  // namespace

Element parse_element(const GraphPtr& g, Field f, std::string_view text) { return Parser(g, f, text).parse(); }

Scalar parse_scalar(Field f, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  // Only the scalar grammar is consulted, so any graph will do.
  static const GraphPtr empty = std::make_shared<const Graph>(Graph::validate({}));
  Scalar s = Parser(empty, f, body).scalar_only();
  return negative ? -s : s;
}

std::string format_monomial(const Graph& g, const Monomial& m) {
  if (m.length() == 0) return g.vertex_name(m.alpha.source);
  std::string out;
  for (const EdgeRef& e : m.alpha.steps) {
    if (!out.empty()) out += '.';
    out += g.ref_name(e);
  }
  for (auto it = m.beta.steps.rbegin(); it != m.beta.steps.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += g.ref_name(*it) + "*";
  }
  return out;
}

std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [m, k] : x.terms()) {
    if (out.empty())
      out += k.is_negative() ? "-" : "";
    else
      out += k.is_negative() ? " - " : " + ";
    out += coefficient_prefix(k) + format_monomial(x.graph(), m);
  }
  return out;
}

}  // namespace lpa
