#include <cctype>
#include <string>
#include <type_traits>
#include <vector>

#include "betlogic/error.hpp"
#include "betlogic/syntax.hpp"

namespace betlogic {

namespace {

enum class Tok {
  LParen, RParen, Not, And, Or, Implies, Iff, Know, Believe, PossK, PossB,
  Prob, True, False, Atom, Number, Star, Plus, Ge, Le, Gt, Lt, Eq, End,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  auto isdigit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, at, std::string(s.substr(at, len))});
      i += len;
    };
    if (starts("<->")) push(Tok::Iff, 3);
    else if (starts("<K>")) push(Tok::PossK, 3);
    else if (starts("<B>")) push(Tok::PossB, 3);
    else if (starts("<=")) push(Tok::Le, 2);
    else if (starts(">=")) push(Tok::Ge, 2);
    else if (starts("->")) push(Tok::Implies, 2);
    else if (c == '<') push(Tok::Lt, 1);
    else if (c == '>') push(Tok::Gt, 1);
    else if (c == '=') push(Tok::Eq, 1);
    else if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else if (c == '~') push(Tok::Not, 1);
    else if (c == '&') push(Tok::And, 1);
    else if (c == '|') push(Tok::Or, 1);
    else if (c == '*') push(Tok::Star, 1);
    else if (c == '+') push(Tok::Plus, 1);
    else if (c == 'K') push(Tok::Know, 1);
    else if (c == 'B') push(Tok::Believe, 1);
    else if (c == 'P') push(Tok::Prob, 1);
    else if (isdigit(c) || (c == '-' && i + 1 < s.size() && isdigit(s[i + 1]))) {
      std::size_t j = i + 1;
      while (j < s.size() && isdigit(s[j])) ++j;
      if (j + 1 < s.size() && s[j] == '/' && isdigit(s[j + 1])) {
        j += 2;
        while (j < s.size() && isdigit(s[j])) ++j;
      }
      push(Tok::Number, j - i);
    } else if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      const std::string_view word = s.substr(i, j - i);
      push(word == "true" ? Tok::True : (word == "false" ? Tok::False : Tok::Atom), j - i);
    } else {
      throw SyntaxError(at, {"token"}, std::string(s));
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

template <typename F>
class Parser {
  static constexpr bool kModal = std::is_same_v<F, FormulaKB>;

 public:
  Parser(std::string_view text) : text_(text), toks_(lex(text)) {}

  F parse_all() {
    F f = formula();
    if (peek().kind != Tok::End) fail({"end of input", "'&'", "'|'", "'->'", "'<->'"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(peek().offset, std::move(expected), std::string(text_));
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail({what});
  }

  static F mk_not(const F& a) {
    if constexpr (kModal) return neg(a); else return lang::neg(a);
  }
  static F mk_and(const F& a, const F& b) {
    if constexpr (kModal) return conj(a, b); else return lang::conj(a, b);
  }
  static F mk_or(const F& a, const F& b) {
    if constexpr (kModal) return disj(a, b); else return lang::disj(a, b);
  }
  static F mk_implies(const F& a, const F& b) {
    if constexpr (kModal) return implies(a, b); else return lang::implies(a, b);
  }
  static F mk_iff(const F& a, const F& b) {
    if constexpr (kModal) return iff(a, b); else return lang::iff(a, b);
  }

  F formula() {
    F left = disjunction();
    if (accept(Tok::Implies)) return mk_implies(left, formula());
    if (accept(Tok::Iff)) return mk_iff(left, formula());
    return left;
  }

  F disjunction() {
    F f = conjunction();
    while (accept(Tok::Or)) f = mk_or(f, conjunction());
    return f;
  }

  F conjunction() {
    F f = unary();
    while (accept(Tok::And)) f = mk_and(f, unary());
    return f;
  }

  std::vector<std::string> operand_tokens() const {
    if constexpr (kModal)
      return {"'~'", "'K'", "'B'", "'<K>'", "'<B>'", "'true'", "'false'", "atom", "'('"};
    else
      return {"'~'", "'true'", "'false'", "atom", "'('", "rational", "'P'"};
  }

  F unary() {
    const Tok k = peek().kind;
    if (k == Tok::Not) {
      next();
      return mk_not(unary());
    }
    if constexpr (kModal) {
      switch (k) {
        case Tok::Know: next(); return know(unary());
        case Tok::Believe: next(); return believe(unary());
        case Tok::PossK: next(); return possible(unary());
        case Tok::PossB: next(); return plausible(unary());
        default: break;
      }
    }
    return primary();
  }

  F primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: next(); return F::top();
      case Tok::False: next(); return mk_not(F::top());
      case Tok::Atom: next(); return F::atom(t.text);
      case Tok::LParen: {
        next();
        F f = formula();
        if (!accept(Tok::RParen)) fail({"')'", "'&'", "'|'", "'->'", "'<->'"});
        return f;
      }
      default: break;
    }
    if constexpr (!kModal) {
      if (t.kind == Tok::Number || t.kind == Tok::Prob) return comparison();
    }
    fail(operand_tokens());
  }

  FormulaL comparison() {
    Term lhs = term();
    const Tok rel = peek().kind;
    if (rel != Tok::Ge && rel != Tok::Le && rel != Tok::Gt && rel != Tok::Lt && rel != Tok::Eq)
      fail({"'+'", "'>='", "'<='", "'>'", "'<'", "'='"});
    next();
    Term rhs = term();
    switch (rel) {
      case Tok::Ge: return lang::geq(lhs, rhs);
      case Tok::Le: return lang::leq(lhs, rhs);
      case Tok::Gt: return lang::gt(lhs, rhs);
      case Tok::Lt: return lang::lt(lhs, rhs);
      default: return lang::eq(lhs, rhs);
    }
  }

  Term term() {
    Term t = summand();
    while (accept(Tok::Plus)) t = Term::sum(t, summand());
    return t;
  }

  Term summand() {
    if (peek().kind == Tok::Prob) return probability(Rational(1));
    if (peek().kind != Tok::Number) fail({"rational", "'P'"});
    const Token& num = next();
    Rational q = Rational::parse(num.text);
    if (accept(Tok::Star)) {
      if (peek().kind != Tok::Prob) fail({"'P'"});
      return probability(q);
    }
    return Term::constant(q);
  }

  Term probability(const Rational& q) {
    expect(Tok::Prob, "'P'");
    expect(Tok::LParen, "'('");
    FormulaL f = formula();
    if (!accept(Tok::RParen)) fail({"')'", "'&'", "'|'", "'->'", "'<->'"});
    return Term::scaled(q, f);
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaKB parse_kb(std::string_view text) { return Parser<FormulaKB>(text).parse_all(); }
FormulaL parse_l(std::string_view text) { return Parser<FormulaL>(text).parse_all(); }

}  // namespace betlogic
