#include "mdl/parser.hpp"

#include <array>
#include <string>
#include <vector>

#include "mdl/errors.hpp"

namespace mdl {
namespace {

enum class Tok { Ident, Tilde, Amp, Bar, Arrow, LParen, RParen, Comma, Dot, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

constexpr std::array<std::string_view, 6> kKeywords = {"exists", "forall", "box", "dia", "true",
                                                       "false"};

bool isKeyword(std::string_view s) {
  for (auto k : kKeywords)
    if (k == s) return true;
  return false;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto identStart = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto identChar = [&](char c) { return identStart(c) || (c >= '0' && c <= '9'); };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (identStart(c)) {
      std::size_t j = i;
      while (j < text.size() && identChar(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '~': kind = Tok::Tilde; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case '=': kind = Tok::Eq; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::Arrow;
          len = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(text.substr(i, len)), i});
    i += len;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    next();
    return true;
  }
  bool acceptKeyword(std::string_view kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) return false;
    next();
    return true;
  }
  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind)
      throw ParseError(peek().pos, "expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }
  /// A non-keyword identifier.
  const Token& expectName(std::string_view what) {
    const Token& t = expect(Tok::Ident, what);
    if (isKeyword(t.text))
      throw ParseError(t.pos, "expected " + std::string(what) + ", found keyword '" + t.text + "'");
    return t;
  }
  void expectEnd() {
    if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected " + describe(peek()));
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class ConceptParser {
 public:
  ConceptParser(std::string_view text, const Signature& sig) : ts_(text), sig_(sig) {}

  Concept parse() {
    Concept c = parseOr();
    ts_.expectEnd();
    return c;
  }

 private:
  Concept parseOr() {
    Concept lhs = parseAnd();
    while (ts_.accept(Tok::Bar)) lhs = Concept::disj(std::move(lhs), parseAnd());
    return lhs;
  }

  Concept parseAnd() {
    Concept lhs = parseUnary();
    while (ts_.accept(Tok::Amp)) lhs = Concept::conj(std::move(lhs), parseUnary());
    return lhs;
  }

  Concept parseUnary() {
    if (ts_.accept(Tok::Tilde)) return Concept::negation(parseUnary());
    if (ts_.acceptKeyword("box")) return Concept::box(parseUnary());
    if (ts_.acceptKeyword("dia")) return Concept::diamond(parseUnary());
    if (ts_.acceptKeyword("exists")) return restriction(true);
    if (ts_.acceptKeyword("forall")) return restriction(false);
    return parseAtom();
  }

  Concept restriction(bool existential) {
    RoleExpr role;
    if (ts_.acceptKeyword("box")) role.kind = RoleKind::Boxed;
    else if (ts_.acceptKeyword("dia")) role.kind = RoleKind::Diamond;
    const Token& name = ts_.expectName("role name");
    if (!sig_.isRole(name.text)) {
      if (sig_.isConcept(name.text))
        throw SignatureError("arity misuse: concept name '" + name.text + "' used as a role");
      throw SignatureError("undeclared role name '" + name.text + "'");
    }
    role.name = name.text;
    ts_.expect(Tok::Dot, "'.'");
    Concept body = parseOr();
    return existential ? Concept::exists(std::move(role), std::move(body))
                       : Concept::forall(std::move(role), std::move(body));
  }

  Concept parseAtom() {
    if (ts_.accept(Tok::LParen)) {
      Concept c = parseOr();
      ts_.expect(Tok::RParen, "')'");
      return c;
    }
    if (ts_.acceptKeyword("true")) return Concept::top();
    if (ts_.acceptKeyword("false")) return Concept::bottom();
    const Token& name = ts_.expectName("concept");
    if (!sig_.isConcept(name.text)) {
      if (sig_.isRole(name.text))
        throw SignatureError("arity misuse: role name '" + name.text + "' used as a concept");
      throw SignatureError("undeclared concept name '" + name.text + "'");
    }
    return Concept::atom(name.text);
  }

  TokenStream ts_;
  const Signature& sig_;
};

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Signature& sig) : ts_(text), sig_(sig) {}

  Formula parse() {
    Formula f = parseImplies();
    ts_.expectEnd();
    return f;
  }

 private:
  Formula parseImplies() {
    Formula lhs = parseOr();
    if (ts_.accept(Tok::Arrow)) return Formula::implies(std::move(lhs), parseImplies());
    return lhs;
  }

  Formula parseOr() {
    Formula lhs = parseAnd();
    while (ts_.accept(Tok::Bar)) lhs = Formula::disj(std::move(lhs), parseAnd());
    return lhs;
  }

  Formula parseAnd() {
    Formula lhs = parseUnary();
    while (ts_.accept(Tok::Amp)) lhs = Formula::conj(std::move(lhs), parseUnary());
    return lhs;
  }

  Formula parseUnary() {
    if (ts_.accept(Tok::Tilde)) return Formula::negation(parseUnary());
    if (ts_.acceptKeyword("box")) return Formula::box(parseUnary());
    if (ts_.acceptKeyword("dia")) return Formula::diamond(parseUnary());
    for (bool existential : {true, false}) {
      if (ts_.acceptKeyword(existential ? "exists" : "forall")) {
        std::string var = ts_.expectName("variable").text;
        ts_.expect(Tok::Dot, "'.'");
        Formula body = parseImplies();
        return existential ? Formula::exists(std::move(var), std::move(body))
                           : Formula::forall(std::move(var), std::move(body));
      }
    }
    return parseAtom();
  }

  Formula parseAtom() {
    if (ts_.accept(Tok::LParen)) {
      Formula f = parseImplies();
      ts_.expect(Tok::RParen, "')'");
      return f;
    }
    const Token head = ts_.expectName("predicate or variable");
    if (ts_.accept(Tok::Eq)) return Formula::equal(head.text, ts_.expectName("variable").text);
    if (!ts_.accept(Tok::LParen))
      throw ParseError(ts_.peek().pos, "expected '(' or '=' after '" + head.text + "', found " +
                                           describe(ts_.peek()));
    std::vector<std::string> args;
    args.push_back(ts_.expectName("variable").text);
    while (ts_.accept(Tok::Comma)) args.push_back(ts_.expectName("variable").text);
    ts_.expect(Tok::RParen, "')'");
    std::size_t arity;
    if (sig_.isConcept(head.text)) arity = 1;
    else if (sig_.isRole(head.text)) arity = 2;
    else throw SignatureError("undeclared predicate '" + head.text + "'");
    if (args.size() != arity)
      throw SignatureError("arity misuse: '" + head.text + "' takes " + std::to_string(arity) +
                           " argument(s), given " + std::to_string(args.size()));
    return Formula::pred(head.text, std::move(args));
  }

  TokenStream ts_;
  const Signature& sig_;
};

}  // namespace

Concept parseConcept(std::string_view text, const Signature& sig) {
  return ConceptParser(text, sig).parse();
}

Formula parseFormula(std::string_view text, const Signature& sig) {
  return FormulaParser(text, sig).parse();
}

}  // namespace mdl
