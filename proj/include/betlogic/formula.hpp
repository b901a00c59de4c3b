#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "betlogic/rational.hpp"

namespace betlogic {

enum class KBKind { Top, Atom, Not, And, Know, Believe };

struct KBNode;

/// Formula of the knowledge/belief language. Only the six primitive node
/// kinds are stored; the sugar constructors below expand on construction.
class FormulaKB {
 public:
  FormulaKB();  // ⊤

  static FormulaKB top();
  static FormulaKB atom(std::string name);
  static FormulaKB negation(const FormulaKB& a);
  static FormulaKB conjunction(const FormulaKB& a, const FormulaKB& b);
  static FormulaKB know(const FormulaKB& a);
  static FormulaKB believe(const FormulaKB& a);

  KBKind kind() const;
  const std::string& name() const;   // Atom only
  const FormulaKB& child() const;    // Not, Know, Believe; left operand of And
  const FormulaKB& right() const;    // And only
  std::size_t hash() const;
  int size() const;                  // node count
  int modal_depth() const;

  std::set<std::string> atoms() const;

  bool operator==(const FormulaKB& other) const;
  bool operator!=(const FormulaKB& other) const { return !(*this == other); }

  const KBNode* node() const { return node_.get(); }

  /// Wraps an existing node; a null node is only valid as an unused child slot.
  explicit FormulaKB(std::shared_ptr<const KBNode> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const KBNode> node_;
};

struct KBNode {
  KBKind kind;
  std::string name;
  FormulaKB a;
  FormulaKB b;
  std::size_t hash;
  int size;
  int depth;
};

FormulaKB top();
FormulaKB bottom();  // ¬⊤
FormulaKB atom(std::string name);
FormulaKB neg(const FormulaKB& a);
FormulaKB conj(const FormulaKB& a, const FormulaKB& b);
FormulaKB disj(const FormulaKB& a, const FormulaKB& b);        // ¬(¬a ∧ ¬b)
FormulaKB implies(const FormulaKB& a, const FormulaKB& b);     // ¬a ∨ b
FormulaKB iff(const FormulaKB& a, const FormulaKB& b);         // (a→b) ∧ (b→a)
FormulaKB know(const FormulaKB& a);
FormulaKB believe(const FormulaKB& a);
FormulaKB possible(const FormulaKB& a);    // ¬K¬a
FormulaKB plausible(const FormulaKB& a);   // ¬B¬a
/// Left-nested conjunction; ⊤ for an empty list.
FormulaKB conj_all(const std::vector<FormulaKB>& parts);
/// Left-nested disjunction; ⊥ for an empty list.
FormulaKB disj_all(const std::vector<FormulaKB>& parts);

/// Recognizers for the sugar patterns.
bool match_implies(const FormulaKB& f, FormulaKB* a, FormulaKB* b);
bool match_disj(const FormulaKB& f, FormulaKB* a, FormulaKB* b);

// ---------------------------------------------------------------------------
// The probability language: Boolean structure over atoms and linear
// inequalities t >= 0 between weighted probability terms.

enum class LKind { Top, Atom, Not, And, GeqZero };
enum class TermKind { Const, Scaled, Sum };

struct LNode;
struct TermNode;
class Term;

class FormulaL {
 public:
  FormulaL();  // ⊤

  static FormulaL top();
  static FormulaL atom(std::string name);
  static FormulaL negation(const FormulaL& a);
  static FormulaL conjunction(const FormulaL& a, const FormulaL& b);
  static FormulaL geq_zero(const Term& t);

  LKind kind() const;
  const std::string& name() const;
  const FormulaL& child() const;
  const FormulaL& right() const;
  const Term& term() const;  // GeqZero only
  std::size_t hash() const;
  int size() const;

  bool operator==(const FormulaL& other) const;
  bool operator!=(const FormulaL& other) const { return !(*this == other); }

  const LNode* node() const { return node_.get(); }

  /// Wraps an existing node; a null node is only valid as an unused child slot.
  explicit FormulaL(std::shared_ptr<const LNode> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const LNode> node_;
};

class Term {
 public:
  Term();  // Const(0)

  static Term constant(Rational q);
  static Term scaled(Rational q, const FormulaL& f);
  /// Sums are kept left-nested: Sum(a, Sum(b, c)) becomes Sum(Sum(a, b), c).
  static Term sum(const Term& a, const Term& b);

  TermKind kind() const;
  const Rational& coefficient() const;  // Const and Scaled
  const FormulaL& formula() const;      // Scaled
  const Term& left() const;             // Sum
  const Term& right() const;            // Sum
  std::size_t hash() const;
  int size() const;

  /// Every summand negated.
  Term negated() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

  const TermNode* node() const { return node_.get(); }

  /// Wraps an existing node; a null node is only valid as an unused child slot.
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const TermNode> node_;
};

struct LNode {
  LKind kind;
  std::string name;
  FormulaL a;
  FormulaL b;
  Term t;
  std::size_t hash;
  int size;
};

struct TermNode {
  TermKind kind;
  Rational q;
  FormulaL f;
  Term l;
  Term r;
  std::size_t hash;
  int size;
};

namespace lang {

FormulaL top();
FormulaL bottom();
FormulaL atom(std::string name);
FormulaL neg(const FormulaL& a);
FormulaL conj(const FormulaL& a, const FormulaL& b);
FormulaL disj(const FormulaL& a, const FormulaL& b);
FormulaL implies(const FormulaL& a, const FormulaL& b);
FormulaL iff(const FormulaL& a, const FormulaL& b);

Term constant(Rational q);
Term prob(const FormulaL& f, Rational q = Rational(1));
Term plus(const Term& a, const Term& b);

/// t >= s: GeqZero(t) when s is the constant 0, else GeqZero(t + (-s)).
FormulaL geq(const Term& t, const Term& s);
FormulaL leq(const Term& t, const Term& s);  // s >= t
FormulaL gt(const Term& t, const Term& s);   // ¬(s >= t)
FormulaL lt(const Term& t, const Term& s);   // ¬(t >= s)
FormulaL eq(const Term& t, const Term& s);   // (t >= s) ∧ (s >= t)

}  // namespace lang

}  // namespace betlogic

template <>
struct std::hash<betlogic::FormulaKB> {
  std::size_t operator()(const betlogic::FormulaKB& f) const noexcept { return f.hash(); }
};
