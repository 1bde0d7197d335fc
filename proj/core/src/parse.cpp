#include "gnc/parse.hpp"

#include <cctype>
#include <optional>

namespace gnc {

namespace {

enum class Tok {
  LIdent, UIdent, Number, Meta,
  Not, And, Or, Imp, Iff,
  LParen, RParen, LBrace, RBrace,
  Comma, Dot, Plus, Star,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;
  std::vector<Token> toks;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }

  void push(Tok k, std::string text, int l, int c) {
    toks.push_back(Token{k, std::move(text), l, c});
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      int l = line, co = col;
      if (c == '\n') {
        ++pos;
        ++line;
        col = 1;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
        ++col;
        continue;
      }
      auto take = [&](std::size_t n) {
        pos += n;
        col += static_cast<int>(n);
      };
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = pos;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        push(Tok::Number, src.substr(pos, j - pos), l, co);
        take(j - pos);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = pos;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
          ++j;
        std::string word = src.substr(pos, j - pos);
        push(std::isupper(static_cast<unsigned char>(c)) ? Tok::UIdent : Tok::LIdent,
             std::move(word), l, co);
        take(j - pos);
        continue;
      }
      if (c == '?') {
        std::size_t j = pos + 1;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
          ++j;
        if (j == pos + 1) fail("expected a metavariable name after '?'");
        push(Tok::Meta, src.substr(pos + 1, j - pos - 1), l, co);
        take(j - pos);
        continue;
      }
      switch (c) {
        case '~': push(Tok::Not, "~", l, co); take(1); break;
        case '&': push(Tok::And, "&", l, co); take(1); break;
        case '|': push(Tok::Or, "|", l, co); take(1); break;
        case '(': push(Tok::LParen, "(", l, co); take(1); break;
        case ')': push(Tok::RParen, ")", l, co); take(1); break;
        case '{': push(Tok::LBrace, "{", l, co); take(1); break;
        case '}': push(Tok::RBrace, "}", l, co); take(1); break;
        case ',': push(Tok::Comma, ",", l, co); take(1); break;
        case '.': push(Tok::Dot, ".", l, co); take(1); break;
        case '+': push(Tok::Plus, "+", l, co); take(1); break;
        case '*': push(Tok::Star, "*", l, co); take(1); break;
        case '-':
          if (pos + 1 < src.size() && src[pos + 1] == '>') {
            push(Tok::Imp, "->", l, co);
            take(2);
          } else {
            fail("stray '-', expected '->'");
          }
          break;
        case '<':
          if (pos + 2 < src.size() && src[pos + 1] == '-' && src[pos + 2] == '>') {
            push(Tok::Iff, "<->", l, co);
            take(3);
          } else {
            fail("stray '<', expected '<->'");
          }
          break;
        default:
          fail(std::string("unexpected character '") + c + "'");
      }
    }
    push(Tok::End, "", line, col);
  }
};

bool is_reserved_lower(const std::string& s) {
  return s == "forall" || s == "exists" || s == "pair" || s == "quote";
}

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }

  Token next() { return toks[at++]; }

  bool accept(Tok k) {
    if (toks[at].kind == k) {
      ++at;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) {
    const Token& t = peek();
    throw ParseError(msg + " at '" + (t.kind == Tok::End ? "<end>" : t.text) + "'",
                     t.line, t.col, std::move(expected));
  }

  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what, {what});
  }

  // --- terms ---

  TermPtr term() {
    TermPtr t = term_factor();
    while (peek().kind == Tok::Plus) {
      next();
      t = mk_plus(t, term_factor());
    }
    return t;
  }

  TermPtr term_factor() {
    TermPtr t = term_atom();
    while (peek().kind == Tok::Star) {
      next();
      t = mk_times(t, term_atom());
    }
    return t;
  }

  TermPtr term_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        if (t.text == "0") return mk_zero();
        return mk_numeral(Nat(t.text));
      }
      case Tok::LParen: {
        next();
        TermPtr inner = term();
        expect(Tok::RParen, ")");
        return inner;
      }
      case Tok::UIdent:
        if (t.text == "S") {
          next();
          expect(Tok::LParen, "(");
          TermPtr inner = term();
          expect(Tok::RParen, ")");
          return mk_succ(inner);
        }
        fail("expected a term");
      case Tok::LIdent: {
        if (t.text == "pair") {
          next();
          expect(Tok::LParen, "(");
          TermPtr a = term();
          expect(Tok::Comma, ",");
          TermPtr b = term();
          expect(Tok::RParen, ")");
          return mk_pair_term(a, b);
        }
        if (t.text == "quote") {
          next();
          expect(Tok::LBrace, "{");
          FormulaPtr f = iff_level();
          expect(Tok::RBrace, "}");
          return mk_quote(f);
        }
        if (is_reserved_lower(t.text)) fail("reserved word in term position");
        next();
        return mk_var(t.text);
      }
      default:
        fail("expected a term");
    }
  }

  // --- formulas, precedence-climbing ---

  FormulaPtr iff_level() {
    FormulaPtr lhs = imp_level();
    if (accept(Tok::Iff)) return mk_iff(lhs, iff_level());
    return lhs;
  }

  FormulaPtr imp_level() {
    FormulaPtr lhs = or_level();
    if (accept(Tok::Imp)) return mk_imp(lhs, imp_level());
    return lhs;
  }

  FormulaPtr or_level() {
    FormulaPtr f = and_level();
    while (accept(Tok::Or)) f = mk_or(f, and_level());
    return f;
  }

  FormulaPtr and_level() {
    FormulaPtr f = unary_level();
    while (accept(Tok::And)) f = mk_and(f, unary_level());
    return f;
  }

  FormulaPtr unary_level() {
    if (accept(Tok::Not)) return mk_not(unary_level());
    return atom_level();
  }

  static std::optional<int> sugar_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 'T') return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return std::stoi(name.substr(1));
  }

  FormulaPtr atom_level() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Meta:
        return mk_meta(next().text);
      case Tok::LParen: {
        next();
        FormulaPtr f = iff_level();
        expect(Tok::RParen, ")");
        return f;
      }
      case Tok::LIdent: {
        if (t.text == "forall" || t.text == "exists") {
          bool uni = t.text == "forall";
          next();
          const Token& v = peek();
          if (v.kind != Tok::LIdent || is_reserved_lower(v.text))
            fail("expected a variable name");
          std::string var = next().text;
          expect(Tok::Dot, ".");
          FormulaPtr body = iff_level();
          return uni ? mk_forall(var, body) : mk_exists(var, body);
        }
        if (is_reserved_lower(t.text)) fail("reserved word in formula position");
        next();
        return mk_atom(t.text);
      }
      case Tok::UIdent:
        return upper_application();
      default:
        fail("expected a formula");
    }
  }

  FormulaPtr upper_application() {
    Token head = next();
    if (head.text == "Bot") return mk_bot();
    if (head.text == "Psi") return mk_atom("Psi");  // the independent sentence
    if (auto i = sugar_index(head.text)) {
      if (*i < 1) fail("T-sugar index must be at least 1");
      FormulaPtr f = mk_atom("p1");
      for (int k = 2; k <= *i; ++k)
        f = mk_or(f, mk_atom("p" + std::to_string(k)));
      return f;
    }
    if (head.text == "S") fail("'S' is reserved for the successor term");
    if (peek().kind == Tok::LBrace) {
      next();
      FormulaPtr inner = iff_level();
      expect(Tok::RBrace, "}");
      return mk_predapp(head.text, {mk_quote(inner)});
    }
    expect(Tok::LParen, "(");
    // Try the operator reading first: a single formula argument. A comma or
    // a failed formula parse flips us to the predicate-over-terms reading.
    std::size_t save = at;
    try {
      FormulaPtr arg = iff_level();
      if (peek().kind == Tok::RParen) {
        next();
        if (head.text == "Dia") return mk_dia("Box", arg);
        return mk_modapp(head.text, arg);
      }
    } catch (const ParseError&) {
    }
    at = save;
    std::vector<TermPtr> args;
    args.push_back(term());
    while (accept(Tok::Comma)) args.push_back(term());
    expect(Tok::RParen, ")");
    if (head.text == "Dia") fail("'Dia' applies to a formula");
    return mk_predapp(head.text, std::move(args));
  }
};

Parser make_parser(const std::string& text) {
  Lexer lex(text);
  Parser p;
  p.toks = std::move(lex.toks);
  return p;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p = make_parser(text);
  FormulaPtr f = p.iff_level();
  if (p.peek().kind != Tok::End) p.fail("trailing input after formula");
  return f;
}

TermPtr parse_term_text(const std::string& text) {
  Parser p = make_parser(text);
  TermPtr t = p.term();
  if (p.peek().kind != Tok::End) p.fail("trailing input after term");
  return t;
}

}  // namespace gnc
