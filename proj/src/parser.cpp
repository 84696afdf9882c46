#include "hyperluk/parser.hpp"

#include <cctype>
#include <vector>

#include "hyperluk/error.hpp"

namespace hyperluk {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Dot, Arrow, Turnstile, Bar, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident:
    case Tok::Number:
      return "'" + t.text + "'";
    case Tok::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    char c = text[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && is_ident(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        throw ParseError("decimal literals are not allowed; write a fraction n/d", col);
      }
      if (j < text.size() && text[j] == '/') {
        std::size_t k = j + 1;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == j + 1) throw ParseError("expected denominator after '/'", j + 2);
        j = k;
      }
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (text.substr(i, 2) == "->") {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
      continue;
    }
    if (text.substr(i, 2) == "=>") {
      out.push_back({Tok::Turnstile, "=>", col});
      i += 2;
      continue;
    }
    switch (c) {
      case '(':
        out.push_back({Tok::LParen, "(", col});
        break;
      case ')':
        out.push_back({Tok::RParen, ")", col});
        break;
      case ',':
        out.push_back({Tok::Comma, ",", col});
        break;
      case '.':
        out.push_back({Tok::Dot, ".", col});
        break;
      case '|':
        out.push_back({Tok::Bar, "|", col});
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
    ++i;
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

bool is_keyword(const std::string& s) { return s == "forall" || s == "exists"; }
bool is_upper(const std::string& s) { return std::isupper(static_cast<unsigned char>(s[0])); }

class Parser {
 public:
  Parser(std::string_view text, Signature& sig, SymbolMode mode) : tokens_(lex(text)), sig_(sig), mode_(mode) {}

  Hypersequent hypersequent() {
    Hypersequent h;
    h.components.push_back(sequent());
    while (peek().kind == Tok::Bar) {
      advance();
      h.components.push_back(sequent());
    }
    finish();
    return h;
  }

  Sequent sequent_only() {
    Sequent s = sequent();
    finish();
    return s;
  }

  Formula formula_only() {
    Formula f = formula();
    finish();
    return f;
  }

  Term term_only() {
    Term t = term();
    finish();
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message + ", found " + describe(at), at.column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek());
    advance();
  }

  void finish() {
    if (peek().kind != Tok::End) fail("unexpected trailing input", peek());
  }

  bool starts_formula(const Token& t) const {
    return t.kind == Tok::Ident || t.kind == Tok::Number || t.kind == Tok::LParen;
  }

  std::vector<Formula> members() {
    std::vector<Formula> out;
    if (!starts_formula(peek())) return out;
    out.push_back(formula());
    while (peek().kind == Tok::Comma) {
      advance();
      out.push_back(formula());
    }
    return out;
  }

  Sequent sequent() {
    Sequent s;
    s.antecedent = members();
    expect(Tok::Turnstile, "'=>'");
    s.succedent = members();
    return s;
  }

  Formula formula() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && is_keyword(t.text)) return quantified();
    Formula lhs = atomic_formula();
    if (peek().kind == Tok::Arrow) {
      advance();
      return Formula::implies(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula quantified() {
    bool universal = advance().text == "forall";
    const Token& v = peek();
    if (v.kind != Tok::Ident || is_upper(v.text) || is_keyword(v.text)) fail("expected variable", v);
    if (is_reserved_name(v.text)) fail("reserved name cannot be bound", v);
    std::string var = advance().text;
    expect(Tok::Dot, "'.'");
    bound_.push_back(var);
    Formula body = formula();
    bound_.pop_back();
    return universal ? Formula::forall(var, std::move(body)) : Formula::exists(var, std::move(body));
  }

  Formula atomic_formula() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      advance();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Number) {
      Token num = advance();
      Rational value = Rational::parse(num.text);
      if (value > Rational(1)) throw ParseError("truth constant " + num.text + " outside [0,1]", num.column);
      return Formula::constant(value);
    }
    if (t.kind != Tok::Ident) fail("expected formula", t);
    if (is_keyword(t.text)) return quantified();
    if (!is_upper(t.text)) {
      auto kind = reserved_kind(t.text);
      if (kind == FreshKind::SemiPropType0 || kind == FreshKind::SemiPropType1) {
        Token name = advance();
        return Formula::semiprop(name.text, sort_of(*kind));
      }
      fail("expected formula (lowercase identifiers denote terms)", t);
    }
    Token name = advance();
    std::vector<Term> args;
    if (peek().kind == Tok::LParen) {
      advance();
      args.push_back(term());
      while (peek().kind == Tok::Comma) {
        advance();
        args.push_back(term());
      }
      expect(Tok::RParen, "')'");
    }
    check_predicate(name, args.size());
    return Formula::predicate(name.text, std::move(args));
  }

  bool is_bound(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == name) return true;
    }
    return false;
  }

  Term term() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || is_keyword(t.text)) fail("expected term", t);
    if (is_upper(t.text)) fail("expected term (uppercase identifiers denote predicates)", t);
    Token name = advance();
    auto kind = reserved_kind(name.text);
    if (peek().kind == Tok::LParen) {
      if (kind) throw ParseError("reserved name " + name.text + " cannot take arguments", name.column);
      if (is_bound(name.text)) throw ParseError("variable " + name.text + " applied to arguments", name.column);
      advance();
      std::vector<Term> args;
      args.push_back(term());
      while (peek().kind == Tok::Comma) {
        advance();
        args.push_back(term());
      }
      expect(Tok::RParen, "')'");
      check_function(name, args.size());
      return Term::apply(name.text, std::move(args));
    }
    if (is_bound(name.text)) return Term::variable(name.text);
    if (kind == FreshKind::Parameter) return Term::apply(name.text);
    if (kind) throw ParseError("semipropositional variable " + name.text + " in term position", name.column);
    check_function(name, 0);
    return Term::apply(name.text);
  }

  void check_predicate(const Token& name, std::size_t arity) {
    auto known = sig_.predicate_arity(name.text);
    if (!known) {
      if (mode_ == SymbolMode::Strict) throw ParseError("unknown predicate " + name.text, name.column);
      sig_.declare_predicate(name.text, arity);
      return;
    }
    if (*known != arity) {
      throw ParseError("arity mismatch for predicate " + name.text + ": expected " + std::to_string(*known) +
                           ", got " + std::to_string(arity),
                       name.column);
    }
  }

  void check_function(const Token& name, std::size_t arity) {
    auto known = sig_.function_arity(name.text);
    if (!known) {
      if (mode_ == SymbolMode::Strict) throw ParseError("unknown function symbol " + name.text, name.column);
      sig_.declare_function(name.text, arity);
      return;
    }
    if (*known != arity) {
      throw ParseError("arity mismatch for function " + name.text + ": expected " + std::to_string(*known) +
                           ", got " + std::to_string(arity),
                       name.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Signature& sig_;
  SymbolMode mode_;
  std::vector<std::string> bound_;
};

}  // namespace

Hypersequent parse_hypersequent(std::string_view text, Signature& sig, SymbolMode mode) {
  return Parser(text, sig, mode).hypersequent();
}

Sequent parse_sequent(std::string_view text, Signature& sig, SymbolMode mode) {
  return Parser(text, sig, mode).sequent_only();
}

Formula parse_formula(std::string_view text, Signature& sig, SymbolMode mode) {
  return Parser(text, sig, mode).formula_only();
}

Term parse_term(std::string_view text, Signature& sig, SymbolMode mode) {
  return Parser(text, sig, mode).term_only();
}

Hypersequent parse_hypersequent(std::string_view text) {
  Signature sig;
  return parse_hypersequent(text, sig);
}

Sequent parse_sequent(std::string_view text) {
  Signature sig;
  return parse_sequent(text, sig);
}

Formula parse_formula(std::string_view text) {
  Signature sig;
  return parse_formula(text, sig);
}

Term parse_term(std::string_view text) {
  Signature sig;
  return parse_term(text, sig);
}

}  // namespace hyperluk
