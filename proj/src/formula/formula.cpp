#include "betlogic/formula.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace betlogic {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const Rational& q) {
  return mix(std::hash<std::string>{}(q.numerator()), std::hash<std::string>{}(q.denominator()));
}

FormulaKB make_kb(KBKind kind, std::string name, FormulaKB a, FormulaKB b) {
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(kind));
  int size = 1;
  int depth = 0;
  if (kind == KBKind::Atom) h = mix(h, std::hash<std::string>{}(name));
  if (a.node() != nullptr) {
    h = mix(h, a.hash());
    size += a.size();
    depth = a.modal_depth();
  }
  if (b.node() != nullptr) {
    h = mix(h, b.hash());
    size += b.size();
    depth = std::max(depth, b.modal_depth());
  }
  if (kind == KBKind::Know || kind == KBKind::Believe) ++depth;
  return FormulaKB(std::make_shared<const KBNode>(
      KBNode{kind, std::move(name), std::move(a), std::move(b), h, size, depth}));
}

const FormulaKB& null_kb() {
  static const FormulaKB n{std::shared_ptr<const KBNode>()};
  return n;
}

const FormulaKB& shared_top() {
  static const FormulaKB t = make_kb(KBKind::Top, "", null_kb(), null_kb());
  return t;
}

const FormulaL& null_l() {
  static const FormulaL n{std::shared_ptr<const LNode>()};
  return n;
}

const Term& null_term() {
  static const Term n{std::shared_ptr<const TermNode>()};
  return n;
}

}  // namespace

FormulaKB::FormulaKB() : node_(shared_top().node_) {}

FormulaKB FormulaKB::top() { return shared_top(); }
FormulaKB FormulaKB::atom(std::string name) {
  return make_kb(KBKind::Atom, std::move(name), null_kb(), null_kb());
}
FormulaKB FormulaKB::negation(const FormulaKB& a) { return make_kb(KBKind::Not, "", a, null_kb()); }
FormulaKB FormulaKB::conjunction(const FormulaKB& a, const FormulaKB& b) {
  return make_kb(KBKind::And, "", a, b);
}
FormulaKB FormulaKB::know(const FormulaKB& a) { return make_kb(KBKind::Know, "", a, null_kb()); }
FormulaKB FormulaKB::believe(const FormulaKB& a) {
  return make_kb(KBKind::Believe, "", a, null_kb());
}

KBKind FormulaKB::kind() const { return node_->kind; }
const std::string& FormulaKB::name() const { return node_->name; }
const FormulaKB& FormulaKB::child() const { return node_->a; }
const FormulaKB& FormulaKB::right() const { return node_->b; }
std::size_t FormulaKB::hash() const { return node_->hash; }
int FormulaKB::size() const { return node_->size; }
int FormulaKB::modal_depth() const { return node_->depth; }

std::set<std::string> FormulaKB::atoms() const {
  std::set<std::string> out;
  std::function<void(const FormulaKB&)> walk = [&](const FormulaKB& f) {
    switch (f.kind()) {
      case KBKind::Top: break;
      case KBKind::Atom: out.insert(f.name()); break;
      case KBKind::And: walk(f.child()); walk(f.right()); break;
      default: walk(f.child());
    }
  };
  walk(*this);
  return out;
}

bool FormulaKB::operator==(const FormulaKB& other) const {
  if (node_ == other.node_) return true;
  if (node_ == nullptr || other.node_ == nullptr) return false;
  if (node_->hash != other.node_->hash || node_->size != other.node_->size ||
      node_->kind != other.node_->kind)
    return false;
  switch (node_->kind) {
    case KBKind::Top: return true;
    case KBKind::Atom: return node_->name == other.node_->name;
    case KBKind::And: return node_->a == other.node_->a && node_->b == other.node_->b;
    default: return node_->a == other.node_->a;
  }
}

FormulaKB top() { return FormulaKB::top(); }
FormulaKB bottom() { return neg(top()); }
FormulaKB atom(std::string name) { return FormulaKB::atom(std::move(name)); }
FormulaKB neg(const FormulaKB& a) { return FormulaKB::negation(a); }
FormulaKB conj(const FormulaKB& a, const FormulaKB& b) { return FormulaKB::conjunction(a, b); }
FormulaKB disj(const FormulaKB& a, const FormulaKB& b) { return neg(conj(neg(a), neg(b))); }
FormulaKB implies(const FormulaKB& a, const FormulaKB& b) { return disj(neg(a), b); }
FormulaKB iff(const FormulaKB& a, const FormulaKB& b) { return conj(implies(a, b), implies(b, a)); }
FormulaKB know(const FormulaKB& a) { return FormulaKB::know(a); }
FormulaKB believe(const FormulaKB& a) { return FormulaKB::believe(a); }
FormulaKB possible(const FormulaKB& a) { return neg(know(neg(a))); }
FormulaKB plausible(const FormulaKB& a) { return neg(believe(neg(a))); }

FormulaKB conj_all(const std::vector<FormulaKB>& parts) {
  if (parts.empty()) return top();
  FormulaKB out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
  return out;
}

FormulaKB disj_all(const std::vector<FormulaKB>& parts) {
  if (parts.empty()) return bottom();
  FormulaKB out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = disj(out, parts[i]);
  return out;
}

bool match_disj(const FormulaKB& f, FormulaKB* a, FormulaKB* b) {
  if (f.kind() != KBKind::Not || f.child().kind() != KBKind::And) return false;
  const FormulaKB& l = f.child().child();
  const FormulaKB& r = f.child().right();
  if (l.kind() != KBKind::Not || r.kind() != KBKind::Not) return false;
  if (a) *a = l.child();
  if (b) *b = r.child();
  return true;
}

bool match_implies(const FormulaKB& f, FormulaKB* a, FormulaKB* b) {
  FormulaKB l, r;
  if (!match_disj(f, &l, &r) || l.kind() != KBKind::Not) return false;
  if (a) *a = l.child();
  if (b) *b = r;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

FormulaL make_l(LKind kind, std::string name, FormulaL a, FormulaL b, Term t) {
  std::size_t h = mix(0x7a11, static_cast<std::size_t>(kind));
  int size = 1;
  if (kind == LKind::Atom) h = mix(h, std::hash<std::string>{}(name));
  if (a.node() != nullptr) {
    h = mix(h, a.hash());
    size += a.size();
  }
  if (b.node() != nullptr) {
    h = mix(h, b.hash());
    size += b.size();
  }
  if (kind == LKind::GeqZero) {
    h = mix(h, t.hash());
    size += t.size();
  }
  return FormulaL(std::make_shared<const LNode>(
      LNode{kind, std::move(name), std::move(a), std::move(b), std::move(t), h, size}));
}

const FormulaL& shared_l_top() {
  static const FormulaL t = make_l(LKind::Top, "", null_l(), null_l(), null_term());
  return t;
}

Term make_term(TermKind kind, Rational q, FormulaL f, Term l, Term r) {
  std::size_t h = mix(0x7e53, static_cast<std::size_t>(kind));
  int size = 1;
  if (kind != TermKind::Sum) h = mix(h, hash_rational(q));
  if (kind == TermKind::Scaled) {
    h = mix(h, f.hash());
    size += f.size();
  }
  if (kind == TermKind::Sum) {
    h = mix(mix(h, l.hash()), r.hash());
    size += l.size() + r.size();
  }
  return Term(std::make_shared<const TermNode>(
      TermNode{kind, std::move(q), std::move(f), std::move(l), std::move(r), h, size}));
}

}  // namespace

FormulaL::FormulaL() : node_(shared_l_top().node_) {}
FormulaL FormulaL::top() { return shared_l_top(); }
FormulaL FormulaL::atom(std::string name) {
  return make_l(LKind::Atom, std::move(name), null_l(), null_l(), null_term());
}
FormulaL FormulaL::negation(const FormulaL& a) {
  return make_l(LKind::Not, "", a, null_l(), null_term());
}
FormulaL FormulaL::conjunction(const FormulaL& a, const FormulaL& b) {
  return make_l(LKind::And, "", a, b, null_term());
}
FormulaL FormulaL::geq_zero(const Term& t) {
  return make_l(LKind::GeqZero, "", null_l(), null_l(), t);
}

LKind FormulaL::kind() const { return node_->kind; }
const std::string& FormulaL::name() const { return node_->name; }
const FormulaL& FormulaL::child() const { return node_->a; }
const FormulaL& FormulaL::right() const { return node_->b; }
const Term& FormulaL::term() const { return node_->t; }
std::size_t FormulaL::hash() const { return node_->hash; }
int FormulaL::size() const { return node_->size; }

bool FormulaL::operator==(const FormulaL& other) const {
  if (node_ == other.node_) return true;
  if (node_ == nullptr || other.node_ == nullptr) return false;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case LKind::Top: return true;
    case LKind::Atom: return node_->name == other.node_->name;
    case LKind::Not: return node_->a == other.node_->a;
    case LKind::And: return node_->a == other.node_->a && node_->b == other.node_->b;
    case LKind::GeqZero: return node_->t == other.node_->t;
  }
  return false;
}

Term::Term() : Term(constant(Rational(0))) {}
Term Term::constant(Rational q) {
  return make_term(TermKind::Const, std::move(q), null_l(), null_term(), null_term());
}
Term Term::scaled(Rational q, const FormulaL& f) {
  return make_term(TermKind::Scaled, std::move(q), f, null_term(), null_term());
}
Term Term::sum(const Term& a, const Term& b) {
  if (b.kind() == TermKind::Sum) return sum(sum(a, b.left()), b.right());
  return make_term(TermKind::Sum, Rational(0), null_l(), a, b);
}

TermKind Term::kind() const { return node_->kind; }
const Rational& Term::coefficient() const { return node_->q; }
const FormulaL& Term::formula() const { return node_->f; }
const Term& Term::left() const { return node_->l; }
const Term& Term::right() const { return node_->r; }
std::size_t Term::hash() const { return node_->hash; }
int Term::size() const { return node_->size; }

Term Term::negated() const {
  switch (kind()) {
    case TermKind::Const: return constant(-coefficient());
    case TermKind::Scaled: return scaled(-coefficient(), formula());
    case TermKind::Sum: return sum(left().negated(), right().negated());
  }
  return *this;
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (node_ == nullptr || other.node_ == nullptr) return false;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case TermKind::Const: return node_->q == other.node_->q;
    case TermKind::Scaled: return node_->q == other.node_->q && node_->f == other.node_->f;
    case TermKind::Sum: return node_->l == other.node_->l && node_->r == other.node_->r;
  }
  return false;
}

namespace lang {

FormulaL top() { return FormulaL::top(); }
FormulaL bottom() { return neg(top()); }
FormulaL atom(std::string name) { return FormulaL::atom(std::move(name)); }
FormulaL neg(const FormulaL& a) { return FormulaL::negation(a); }
FormulaL conj(const FormulaL& a, const FormulaL& b) { return FormulaL::conjunction(a, b); }
FormulaL disj(const FormulaL& a, const FormulaL& b) { return neg(conj(neg(a), neg(b))); }
FormulaL implies(const FormulaL& a, const FormulaL& b) { return disj(neg(a), b); }
FormulaL iff(const FormulaL& a, const FormulaL& b) { return conj(implies(a, b), implies(b, a)); }

Term constant(Rational q) { return Term::constant(std::move(q)); }
Term prob(const FormulaL& f, Rational q) { return Term::scaled(std::move(q), f); }
Term plus(const Term& a, const Term& b) { return Term::sum(a, b); }

FormulaL geq(const Term& t, const Term& s) {
  if (s.kind() == TermKind::Const && s.coefficient().is_zero()) return FormulaL::geq_zero(t);
  return FormulaL::geq_zero(Term::sum(t, s.negated()));
}
FormulaL leq(const Term& t, const Term& s) { return geq(s, t); }
FormulaL gt(const Term& t, const Term& s) { return neg(geq(s, t)); }
FormulaL lt(const Term& t, const Term& s) { return neg(geq(t, s)); }
FormulaL eq(const Term& t, const Term& s) { return conj(geq(t, s), geq(s, t)); }

}  // namespace lang

}  // namespace betlogic
