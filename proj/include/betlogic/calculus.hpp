#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betlogic/formula.hpp"

namespace betlogic {

enum class SchemeKind { CL, KS5_K, KS5_T, KS5_4, KS5_5, BF, N, Ap, An, KBM, D, SC, Scott };

/// Axiom scheme. For CL, `param` selects the basis member (1..7, 0 = any);
/// for Scott it is the arity m >= 1.
struct SchemeId {
  SchemeKind kind = SchemeKind::CL;
  int param = 0;

  friend bool operator==(const SchemeId&, const SchemeId&) = default;
};

// Classical basis (metavariables phi, psi, chi):
//   A1  phi -> (psi -> phi)
//   A2  (phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))
//   A3  (~phi -> ~psi) -> (psi -> phi)
//   A4  phi & psi -> phi
//   A5  phi & psi -> psi
//   A6  phi -> (psi -> phi & psi)
//   TOP true
// S5 basis for K: K (phi -> psi) -> (K phi -> K psi), K phi -> phi,
// K phi -> K K phi, ~K phi -> K ~K phi.

/// Scheme name as written in proof files: A1..A6, TOP, K, T, 4, 5, BF, N,
/// Ap, An, KBM, D, SC, Scott<m>.
std::string scheme_name(const SchemeId& s);
/// Accepts the names above and "CL". Throws SyntaxError.
SchemeId parse_scheme_name(std::string_view name);

/// Template over metavariable atoms; Scott(m) uses phi1..phim, psi1..psim.
/// Throws ExpansionTooLarge for Scott arity above the expansion guard.
FormulaKB scheme_template(const SchemeId& s);

using Substitution = std::map<std::string, FormulaKB>;

FormulaKB substitute(const FormulaKB& f, const Substitution& s);

/// Most general match of φ against the scheme (for CL with param 0, the
/// first basis member that matches). Applying the result to the template
/// reproduces φ.
std::optional<Substitution> match_axiom(const FormulaKB& f, const SchemeId& s);

enum class Theory { KB, KBHalf, KBHalfMinus };

std::string theory_name(Theory t);
/// "kb", "kb-half", "kb-half-minus". Throws SyntaxError.
Theory parse_theory(std::string_view name);
bool scheme_in_theory(const SchemeId& s, Theory t);

struct Justification {
  enum class Kind { Axiom, MP, MN, Taut } kind = Kind::Axiom;
  SchemeId scheme;
  Substitution subst;  // may be partial or empty; missing entries are matched
  int i = 0;           // MP minor premise / MN premise (1-based)
  int j = 0;           // MP major premise (1-based)
};

struct DerivationLine {
  FormulaKB formula;
  Justification just;
};

struct Derivation {
  std::vector<DerivationLine> lines;
};

struct CheckOptions {
  /// Accept TAUT lines via a truth-table test over the line's
  /// non-Boolean leaves.
  bool allow_tautology = false;
  int tautology_leaf_budget = 12;
};

struct CheckResult {
  bool accepted = false;
  int line = 0;  // 1-based; 0 when accepted
  std::string reason;
};

CheckResult check_derivation(const Derivation& d, Theory theory, const CheckOptions& options = {});

/// Truth-table test treating atoms, K- and B-subformulas as propositional
/// leaves. Throws BoundTooLarge above `leaf_budget` leaves.
bool is_tautology(const FormulaKB& f, int leaf_budget = 12);

/// Proof file text: `n. <formula> ; AX <scheme> {phi:=..., ...}`,
/// `n. <formula> ; MP i j`, `n. <formula> ; MN i`, `n. <formula> ; TAUT`.
/// '#' starts a comment line. Throws SyntaxError with a line-qualified
/// message.
Derivation parse_derivation(std::string_view text);
std::string format_derivation(const Derivation& d);

/// Builds derivations line by line. Proven formulas are cached, so asking
/// for the same formula twice reuses the earlier line.
class ProofBuilder {
 public:
  const Derivation& derivation() const { return d_; }

  int axiom(const SchemeId& s, const Substitution& subst);
  /// Premise `minor` (φ) and `major` (φ → ψ); adds ψ.
  int mp(int minor, int major);
  int mn(int premise);

  const FormulaKB& formula(int line) const { return d_.lines.at(line - 1).formula; }
  std::optional<int> find(const FormulaKB& f) const;

  // Classical macros; every one expands to primitive lines.
  int identity(const FormulaKB& a);                    // a -> a
  int lift(int line, const FormulaKB& a);              // b  gives  a -> b
  int mp_under(int abc, int ab);                       // a->(b->c), a->b  gives  a->c
  int chain(int ab, int bc);                           // a->b, b->c  gives  a->c
  int combine(int ab, int ac);                         // a->b, a->c  gives  a->(b & c)
  int dne(const FormulaKB& a);                         // ~~a -> a
  int dni(const FormulaKB& a);                         // a -> ~~a
  int contrapose(int ab);                              // a->b  gives  ~b -> ~a
  int curry(int abc);                                  // (a & b)->c  gives  a->(b->c)
  int uncurry(int abc);                                // a->(b->c)  gives  (a & b)->c
  int exfalso(const FormulaKB& a, const FormulaKB& b); // ~a -> (a -> b)
  int cases(int px, int npx);                          // p->X, ~p->X  gives  X
  int conjoin(int a, int b);                           // a, b  gives  a & b
  /// Any tautology (leaves as in is_tautology), by truth-table cases.
  int tautology(const FormulaKB& f);

 private:
  int add(const FormulaKB& f, Justification j);
  int prove_under(const FormulaKB& context, int depth, unsigned long long valuation, const FormulaKB& f);
  int project(const FormulaKB& context, int depth, int leaf);
  int top_line();

  Derivation d_;
  std::map<std::size_t, std::vector<int>> by_hash_;
  std::vector<FormulaKB> leaves_;
  std::vector<FormulaKB> literals_;
};

struct CorpusProof {
  std::string name;
  Theory theory;
  FormulaKB goal;
  Derivation derivation;
};

/// Derivations of the standard KB facts (belief from knowledge,
/// distribution over conjunction, the RM/RE/RN rules at fixed instances,
/// ...) and of BF and KBM inside KB-half-minus.
std::vector<CorpusProof> corpus_proofs();

}  // namespace betlogic
