#include "betlogic/builders.hpp"
#include "betlogic/calculus.hpp"

namespace betlogic {

namespace {

constexpr SchemeId kA4{SchemeKind::CL, 4}, kA5{SchemeKind::CL, 5}, kA6{SchemeKind::CL, 6},
    kA1{SchemeKind::CL, 1}, kK{SchemeKind::KS5_K, 0}, kKBM{SchemeKind::KBM, 0}, kN{SchemeKind::N, 0},
    kBF{SchemeKind::BF, 0}, kD{SchemeKind::D, 0};

Substitution sub(const FormulaKB& phi, const FormulaKB& psi) { return {{"phi", phi}, {"psi", psi}}; }

// Kφ → Bφ
int know_to_believe(ProofBuilder& b, const FormulaKB& phi) {
  const int l1 = b.axiom(kA1, sub(phi, top()));
  const int l2 = b.mp(b.mn(l1), b.axiom(kK, sub(phi, implies(top(), phi))));
  const int l3 = b.chain(l2, b.axiom(kKBM, sub(top(), phi)));
  return b.mp_under(l3, b.lift(b.axiom(kN, {}), know(phi)));
}

// From a line ⊢ φ→ψ, derive Bφ → Bψ.
int monotone(ProofBuilder& b, int line) {
  FormulaKB phi, psi;
  match_implies(b.formula(line), &phi, &psi);
  return b.mp(b.mn(line), b.axiom(kKBM, sub(phi, psi)));
}

CorpusProof finish(std::string name, Theory t, const ProofBuilder& b, int last) {
  Derivation d = b.derivation();
  d.lines.resize(static_cast<std::size_t>(last));
  return {std::move(name), t, d.lines.back().formula, std::move(d)};
}

}  // namespace

std::vector<CorpusProof> corpus_proofs() {
  const FormulaKB p = atom("p"), q = atom("q");
  std::vector<CorpusProof> out;
  {
    ProofBuilder b;
    out.push_back(finish("know-implies-believe", Theory::KB, b, know_to_believe(b, p)));
  }
  {
    ProofBuilder b;
    const int l = monotone(b, b.axiom(kA4, sub(p, q)));
    const int r = monotone(b, b.axiom(kA5, sub(p, q)));
    out.push_back(finish("believe-conjunction-split", Theory::KB, b, b.combine(l, r)));
  }
  {
    ProofBuilder b;
    const FormulaKB pq = conj(p, q);
    const int l1 = b.mn(b.axiom(kA6, sub(p, q)));
    const int l2 = b.mp(l1, b.axiom(kK, sub(p, implies(q, pq))));
    const int l3 = b.chain(l2, b.axiom(kKBM, sub(q, pq)));
    out.push_back(finish("know-and-believe", Theory::KB, b, b.uncurry(l3)));
  }
  {
    ProofBuilder b;
    const FormulaKB pp = implies(p, p);
    const int k = b.mn(b.identity(p));
    out.push_back(finish("belief-necessitation", Theory::KB, b, b.mp(k, know_to_believe(b, pp))));
  }
  {
    ProofBuilder b;
    out.push_back(finish("belief-monotonicity", Theory::KB, b, monotone(b, b.axiom(kA4, sub(p, q)))));
  }
  {
    ProofBuilder b;
    const int pq_qp = b.combine(b.axiom(kA5, sub(p, q)), b.axiom(kA4, sub(p, q)));
    const int qp_pq = b.combine(b.axiom(kA5, sub(q, p)), b.axiom(kA4, sub(q, p)));
    const int l = monotone(b, pq_qp);
    const int r = monotone(b, qp_pq);
    out.push_back(finish("belief-equivalence", Theory::KB, b, b.conjoin(l, r)));
  }
  {
    ProofBuilder b;
    const FormulaKB contradiction = conj(p, neg(p));
    const int taut = b.tautology(implies(contradiction, bottom()));
    const int mono = monotone(b, taut);
    const int last = b.mp(b.axiom(kBF, {}), b.contrapose(mono));
    out.push_back(finish("no-belief-in-contradiction", Theory::KB, b, last));
  }
  {
    ProofBuilder b;
    const int last = b.mp(b.axiom(kN, {}), b.axiom(kD, {{"phi", top()}}));
    out.push_back(finish("bf-from-d", Theory::KBHalfMinus, b, last));
  }
  {
    ProofBuilder b;
    const FormulaKB expansion = segerberg_expand({p}, {q}, SegerbergMode::I).child();
    const int taut = b.tautology(implies(implies(p, q), expansion));
    const int l1 = b.mp(b.mn(taut), b.axiom(kK, sub(implies(p, q), expansion)));
    const int scott = b.axiom({SchemeKind::Scott, 1}, {{"phi1", p}, {"psi1", q}});
    out.push_back(finish("kbm-from-scott", Theory::KBHalfMinus, b, b.chain(l1, b.curry(scott))));
  }
  return out;
}

}  // namespace betlogic
