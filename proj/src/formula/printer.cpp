#include <string>

#include "betlogic/syntax.hpp"

namespace betlogic {

namespace {

// Binding levels: 0 for '->' and '<->', 1 for '|', 2 for '&', 3 for unary.
std::string wrap(const std::string& s, int own, int ctx) { return own < ctx ? "(" + s + ")" : s; }

bool match_iff(const FormulaKB& f, FormulaKB* a, FormulaKB* b) {
  if (f.kind() != KBKind::And) return false;
  FormulaKB a1, b1, a2, b2;
  if (!match_implies(f.child(), &a1, &b1) || !match_implies(f.right(), &a2, &b2)) return false;
  if (a1 != b2 || b1 != a2) return false;
  *a = a1;
  *b = b1;
  return true;
}

std::string print(const FormulaKB& f, int ctx) {
  FormulaKB a, b;
  switch (f.kind()) {
    case KBKind::Top: return "true";
    case KBKind::Atom: return f.name();
    case KBKind::Know: return "K " + print(f.child(), 3);
    case KBKind::Believe: return "B " + print(f.child(), 3);
    case KBKind::And:
      if (match_iff(f, &a, &b)) return wrap(print(a, 1) + " <-> " + print(b, 0), 0, ctx);
      return wrap(print(f.child(), 2) + " & " + print(f.right(), 3), 2, ctx);
    case KBKind::Not: {
      if (match_implies(f, &a, &b)) return wrap(print(a, 1) + " -> " + print(b, 0), 0, ctx);
      if (match_disj(f, &a, &b)) return wrap(print(a, 1) + " | " + print(b, 2), 1, ctx);
      const FormulaKB& c = f.child();
      if (c.kind() == KBKind::Top) return "false";
      if (c.kind() == KBKind::Know && c.child().kind() == KBKind::Not)
        return "<K> " + print(c.child().child(), 3);
      if (c.kind() == KBKind::Believe && c.child().kind() == KBKind::Not)
        return "<B> " + print(c.child().child(), 3);
      return "~" + print(c, 3);
    }
  }
  return "";
}

bool l_match_disj(const FormulaL& f, FormulaL* a, FormulaL* b) {
  if (f.kind() != LKind::Not || f.child().kind() != LKind::And) return false;
  const FormulaL& l = f.child().child();
  const FormulaL& r = f.child().right();
  if (l.kind() != LKind::Not || r.kind() != LKind::Not) return false;
  *a = l.child();
  *b = r.child();
  return true;
}

bool l_match_implies(const FormulaL& f, FormulaL* a, FormulaL* b) {
  FormulaL l, r;
  if (!l_match_disj(f, &l, &r) || l.kind() != LKind::Not) return false;
  *a = l.child();
  *b = r;
  return true;
}

bool l_match_iff(const FormulaL& f, FormulaL* a, FormulaL* b) {
  if (f.kind() != LKind::And) return false;
  FormulaL a1, b1, a2, b2;
  if (!l_match_implies(f.child(), &a1, &b1) || !l_match_implies(f.right(), &a2, &b2)) return false;
  if (a1 != b2 || b1 != a2) return false;
  *a = a1;
  *b = b1;
  return true;
}

// c + -1*P(phi)
bool match_const_minus_prob(const Term& t, Rational* c, FormulaL* phi) {
  if (t.kind() != TermKind::Sum) return false;
  const Term& l = t.left();
  const Term& r = t.right();
  if (l.kind() != TermKind::Const || r.kind() != TermKind::Scaled || r.coefficient() != Rational(-1))
    return false;
  *c = l.coefficient();
  *phi = r.formula();
  return true;
}

// P(phi) + -c
bool match_prob_minus_const(const Term& t, Rational* c, FormulaL* phi) {
  if (t.kind() != TermKind::Sum) return false;
  const Term& l = t.left();
  const Term& r = t.right();
  if (l.kind() != TermKind::Scaled || l.coefficient() != Rational(1) || r.kind() != TermKind::Const)
    return false;
  *c = -r.coefficient();
  *phi = l.formula();
  return true;
}

std::string print(const FormulaL& f, int ctx);

std::string print_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Const: return t.coefficient().str();
    case TermKind::Scaled: {
      const std::string p = "P(" + print(t.formula(), 0) + ")";
      return t.coefficient() == Rational(1) ? p : t.coefficient().str() + "*" + p;
    }
    case TermKind::Sum: return print_term(t.left()) + " + " + print_term(t.right());
  }
  return "";
}

std::string print(const FormulaL& f, int ctx) {
  FormulaL a, b;
  Rational c1, c2;
  FormulaL p1, p2;
  switch (f.kind()) {
    case LKind::Top: return "true";
    case LKind::Atom: return f.name();
    case LKind::GeqZero: return print_term(f.term()) + " >= 0";
    case LKind::And:
      if (l_match_iff(f, &a, &b)) return wrap(print(a, 1) + " <-> " + print(b, 0), 0, ctx);
      if (f.child().kind() == LKind::GeqZero && f.right().kind() == LKind::GeqZero &&
          match_prob_minus_const(f.child().term(), &c1, &p1) &&
          match_const_minus_prob(f.right().term(), &c2, &p2) && c1 == c2 && !c1.is_zero() &&
          p1 == p2)
        return "P(" + print(p1, 0) + ") = " + c1.str();
      return wrap(print(f.child(), 2) + " & " + print(f.right(), 3), 2, ctx);
    case LKind::Not: {
      if (l_match_implies(f, &a, &b)) return wrap(print(a, 1) + " -> " + print(b, 0), 0, ctx);
      if (l_match_disj(f, &a, &b)) return wrap(print(a, 1) + " | " + print(b, 2), 1, ctx);
      const FormulaL& c = f.child();
      if (c.kind() == LKind::Top) return "false";
      if (c.kind() == LKind::GeqZero && match_const_minus_prob(c.term(), &c1, &p1))
        return "P(" + print(p1, 0) + ") > " + c1.str();
      return "~" + print(c, 3);
    }
  }
  return "";
}

}  // namespace

std::string to_string(const FormulaKB& f) { return print(f, 0); }
std::string to_string(const FormulaL& f) { return print(f, 0); }
std::string to_string(const Term& t) { return print_term(t); }

}  // namespace betlogic
