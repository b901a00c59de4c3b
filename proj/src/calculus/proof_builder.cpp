#include <stdexcept>

#include "betlogic/calculus.hpp"
#include "betlogic/syntax.hpp"

namespace betlogic {

namespace {

std::pair<FormulaKB, FormulaKB> split(const FormulaKB& f) {
  FormulaKB a, b;
  if (!match_implies(f, &a, &b)) throw std::logic_error("expected an implication: " + to_string(f));
  return {a, b};
}

bool is_leaf(const FormulaKB& f) {
  return f.kind() == KBKind::Atom || f.kind() == KBKind::Know || f.kind() == KBKind::Believe;
}

void leaves_of(const FormulaKB& f, std::vector<FormulaKB>& out) {
  if (is_leaf(f)) {
    for (const auto& g : out) {
      if (g == f) return;
    }
    out.push_back(f);
    return;
  }
  if (f.kind() == KBKind::Not) leaves_of(f.child(), out);
  if (f.kind() == KBKind::And) {
    leaves_of(f.child(), out);
    leaves_of(f.right(), out);
  }
}

Substitution sub(const FormulaKB& phi, const FormulaKB& psi) { return {{"phi", phi}, {"psi", psi}}; }
Substitution sub(const FormulaKB& phi, const FormulaKB& psi, const FormulaKB& chi) {
  return {{"phi", phi}, {"psi", psi}, {"chi", chi}};
}

constexpr SchemeId A1{SchemeKind::CL, 1}, A2{SchemeKind::CL, 2}, A3{SchemeKind::CL, 3},
    A4{SchemeKind::CL, 4}, A5{SchemeKind::CL, 5}, A6{SchemeKind::CL, 6}, TOP{SchemeKind::CL, 7};

}  // namespace

std::optional<int> ProofBuilder::find(const FormulaKB& f) const {
  auto it = by_hash_.find(f.hash());
  if (it == by_hash_.end()) return std::nullopt;
  for (int line : it->second) {
    if (formula(line) == f) return line;
  }
  return std::nullopt;
}

int ProofBuilder::add(const FormulaKB& f, Justification j) {
  if (auto existing = find(f)) return *existing;
  d_.lines.push_back({f, std::move(j)});
  const int n = static_cast<int>(d_.lines.size());
  by_hash_[f.hash()].push_back(n);
  return n;
}

int ProofBuilder::axiom(const SchemeId& s, const Substitution& subst) {
  Justification j;
  j.kind = Justification::Kind::Axiom;
  j.scheme = s;
  j.subst = subst;
  return add(substitute(scheme_template(s), subst), std::move(j));
}

int ProofBuilder::mp(int minor, int major) {
  auto [a, b] = split(formula(major));
  if (a != formula(minor)) throw std::logic_error("MP premise mismatch at line " + std::to_string(major));
  Justification j;
  j.kind = Justification::Kind::MP;
  j.i = minor;
  j.j = major;
  return add(b, std::move(j));
}

int ProofBuilder::mn(int premise) {
  Justification j;
  j.kind = Justification::Kind::MN;
  j.i = premise;
  return add(know(formula(premise)), std::move(j));
}

int ProofBuilder::top_line() { return axiom(TOP, {}); }

int ProofBuilder::identity(const FormulaKB& a) {
  const FormulaKB aa = implies(a, a);
  const int l1 = axiom(A1, sub(a, aa));
  const int l2 = axiom(A2, sub(a, aa, a));
  const int l3 = mp(l1, l2);
  return mp(axiom(A1, sub(a, a)), l3);
}

int ProofBuilder::lift(int line, const FormulaKB& a) { return mp(line, axiom(A1, sub(formula(line), a))); }

int ProofBuilder::mp_under(int abc, int ab) {
  auto [a, bc] = split(formula(abc));
  auto [b, c] = split(bc);
  const int m = mp(abc, axiom(A2, sub(a, b, c)));
  return mp(ab, m);
}

int ProofBuilder::chain(int ab, int bc) {
  const FormulaKB a = split(formula(ab)).first;
  return mp_under(lift(bc, a), ab);
}

int ProofBuilder::combine(int ab, int ac) {
  const FormulaKB b = split(formula(ab)).second;
  const FormulaKB c = split(formula(ac)).second;
  return mp_under(chain(ab, axiom(A6, sub(b, c))), ac);
}

int ProofBuilder::dne(const FormulaKB& a) {
  const FormulaKB na = neg(a), nna = neg(na), nnna = neg(nna), nnnna = neg(nnna);
  const int l1 = axiom(A1, sub(nna, nnnna));
  const int l2 = axiom(A3, sub(nnna, na));
  const int l3 = axiom(A3, sub(a, nna));
  return mp_under(chain(chain(l1, l2), l3), identity(nna));
}

int ProofBuilder::dni(const FormulaKB& a) {
  return mp(dne(neg(a)), axiom(A3, sub(neg(neg(a)), a)));
}

int ProofBuilder::contrapose(int ab) {
  auto [a, b] = split(formula(ab));
  const int t = chain(chain(dne(a), ab), dni(b));
  return mp(t, axiom(A3, sub(neg(a), neg(b))));
}

int ProofBuilder::curry(int abc) {
  auto [ab, c] = split(formula(abc));
  if (ab.kind() != KBKind::And) throw std::logic_error("curry needs a conjunctive antecedent");
  const FormulaKB a = ab.child(), b = ab.right();
  const int intro = axiom(A6, sub(a, b));
  const int m = mp(lift(abc, b), axiom(A2, sub(b, ab, c)));
  return chain(intro, m);
}

int ProofBuilder::uncurry(int abc) {
  auto [a, bc] = split(formula(abc));
  const FormulaKB b = split(bc).first;
  return mp_under(chain(axiom(A4, sub(a, b)), abc), axiom(A5, sub(a, b)));
}

int ProofBuilder::exfalso(const FormulaKB& a, const FormulaKB& b) {
  return chain(axiom(A1, sub(neg(a), neg(b))), axiom(A3, sub(b, a)));
}

int ProofBuilder::cases(int px, int npx) {
  auto [p, x] = split(formula(px));
  const int u = contrapose(px);
  const int w = contrapose(npx);
  const int v = mp_under(chain(w, exfalso(neg(p), bottom())), u);
  return mp(top_line(), mp(v, axiom(A3, sub(x, top()))));
}

int ProofBuilder::conjoin(int a, int b) {
  return mp(b, mp(a, axiom(A6, sub(formula(a), formula(b)))));
}

// Context of depth i is ℓi ∧ (ℓ(i-1) ∧ ... (ℓ1 ∧ ⊤)).
int ProofBuilder::project(const FormulaKB& context, int depth, int leaf) {
  FormulaKB cur = context;
  std::optional<int> line;
  for (int j = depth; j > leaf + 1; --j) {
    const int step = axiom(A5, sub(cur.child(), cur.right()));
    line = line ? chain(*line, step) : step;
    cur = cur.right();
  }
  const int last = axiom(A4, sub(cur.child(), cur.right()));
  return line ? chain(*line, last) : last;
}

namespace {

bool value_of(const FormulaKB& f, const std::vector<FormulaKB>& leaves, unsigned long long v) {
  switch (f.kind()) {
    case KBKind::Top: return true;
    case KBKind::Not: return !value_of(f.child(), leaves, v);
    case KBKind::And: return value_of(f.child(), leaves, v) && value_of(f.right(), leaves, v);
    default:
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (leaves[i] == f) return (v >> i) & 1ULL;
      }
      throw std::logic_error("unknown leaf");
  }
}

}  // namespace

// Proves context → f when f is true under the valuation, context → ¬f otherwise.
int ProofBuilder::prove_under(const FormulaKB& context, int depth, unsigned long long valuation,
                              const FormulaKB& f) {
  switch (f.kind()) {
    case KBKind::Top: return lift(top_line(), context);
    case KBKind::Not: {
      const FormulaKB& g = f.child();
      const int inner = prove_under(context, depth, valuation, g);
      if (!value_of(g, leaves_, valuation)) return inner;
      return chain(inner, dni(g));
    }
    case KBKind::And: {
      const FormulaKB &l = f.child(), &r = f.right();
      const bool lv = value_of(l, leaves_, valuation), rv = value_of(r, leaves_, valuation);
      if (lv && rv) {
        return combine(prove_under(context, depth, valuation, l), prove_under(context, depth, valuation, r));
      }
      if (!lv) return chain(prove_under(context, depth, valuation, l), contrapose(axiom(A4, sub(l, r))));
      return chain(prove_under(context, depth, valuation, r), contrapose(axiom(A5, sub(l, r))));
    }
    default:
      for (std::size_t i = 0; i < leaves_.size(); ++i) {
        if (leaves_[i] == f) return project(context, depth, static_cast<int>(i));
      }
      throw std::logic_error("unknown leaf");
  }
}

int ProofBuilder::tautology(const FormulaKB& f) {
  if (auto existing = find(f)) return *existing;
  if (!is_tautology(f, 16)) throw std::logic_error("not a tautology: " + to_string(f));
  leaves_.clear();
  leaves_of(f, leaves_);
  const int k = static_cast<int>(leaves_.size());
  // Returns a line proving context(depth) → f, for the valuation of the
  // first `depth` leaves given in `v`.
  auto rec = [&](auto&& self, const FormulaKB& context, int depth, unsigned long long v) -> int {
    if (depth == k) return prove_under(context, depth, v, f);
    const FormulaKB& p = leaves_[depth];
    const int pos = self(self, conj(p, context), depth + 1, v | (1ULL << depth));
    const int negl = self(self, conj(neg(p), context), depth + 1, v);
    return cases(curry(pos), curry(negl));
  };
  return mp(top_line(), rec(rec, top(), 0, 0));
}

}  // namespace betlogic
