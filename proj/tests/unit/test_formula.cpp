#include <functional>

#include "betlogic/builders.hpp"
#include "betlogic/calculus.hpp"
#include "betlogic/random.hpp"
#include "betlogic/syntax.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace betlogic;

namespace {

FormulaL random_l(Rng& rng, int depth);

Term random_term(Rng& rng, int depth) {
  Term t = rng.coin() ? lang::constant(Rational(rng.range(-9, 9), rng.range(1, 7)))
                      : lang::prob(random_l(rng, depth), Rational(rng.range(-9, 9), rng.range(1, 7)));
  const int extra = rng.range(0, 2);
  for (int i = 0; i < extra; ++i) t = lang::plus(t, lang::prob(random_l(rng, depth), Rational(rng.range(1, 5), rng.range(1, 5))));
  return t;
}

FormulaL random_l(Rng& rng, int depth) {
  if (depth == 0 || rng.below(5) == 0) {
    switch (rng.below(3)) {
      case 0: return lang::top();
      default: return lang::atom(rng.coin() ? "p" : "q2");
    }
  }
  switch (rng.below(6)) {
    case 0: return lang::neg(random_l(rng, depth - 1));
    case 1: return lang::conj(random_l(rng, depth - 1), random_l(rng, depth - 1));
    case 2: return lang::disj(random_l(rng, depth - 1), random_l(rng, depth - 1));
    case 3: return lang::implies(random_l(rng, depth - 1), random_l(rng, depth - 1));
    case 4: return lang::geq(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default: return lang::eq(random_term(rng, depth - 1), lang::constant(Rational(rng.range(0, 3), 3)));
  }
}

// Number of disjuncts after flattening the sugar ∨ everywhere.
int disjunct_count(const FormulaKB& f) {
  FormulaKB a, b;
  if (match_disj(f, &a, &b)) return disjunct_count(a) + disjunct_count(b);
  return 1;
}

int binomial(int n, int k) {
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int count_plausible(const FormulaKB& f) {
  int here = (f.kind() == KBKind::Not && f.child().kind() == KBKind::Believe &&
              f.child().child().kind() == KBKind::Not)
                 ? 1
                 : 0;
  switch (f.kind()) {
    case KBKind::Top:
    case KBKind::Atom: return here;
    case KBKind::And: return here + count_plausible(f.child()) + count_plausible(f.right());
    default: return here + count_plausible(f.child());
  }
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_kb("K (p -> q)") == know(disj(neg(atom("p")), atom("q"))));
  CHECK(parse_kb("K (p -> q)") == know(implies(atom("p"), atom("q"))));
  const FormulaL l = parse_l("2/3*P(p) + -1/3 >= 0");
  REQUIRE(l.kind() == LKind::GeqZero);
  const Term& t = l.term();
  REQUIRE(t.kind() == TermKind::Sum);
  CHECK(t.left() == Term::scaled(Rational(2, 3), lang::atom("p")));
  CHECK(t.right() == Term::constant(Rational(-1, 3)));
  try {
    parse_kb("B B");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 3);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("precedence and associativity") {
  const FormulaKB p = atom("p"), q = atom("q"), r = atom("r");
  CHECK(parse_kb("p -> q -> r") == implies(p, implies(q, r)));
  CHECK(parse_kb("p <-> q <-> r") == iff(p, iff(q, r)));
  CHECK(parse_kb("p | q & r") == disj(p, conj(q, r)));
  CHECK(parse_kb("p & q | r") == disj(conj(p, q), r));
  CHECK(parse_kb("p | q | r") == disj(disj(p, q), r));
  CHECK(parse_kb("~p & K q") == conj(neg(p), know(q)));
  CHECK(parse_kb("<K> p & <B> q") == conj(possible(p), plausible(q)));
  CHECK(parse_kb("false") == neg(top()));
  CHECK(parse_kb("p & q -> r | p") == implies(conj(p, q), disj(r, p)));
  CHECK(parse_l("P(p) < 1/2") == lang::lt(lang::prob(lang::atom("p")), lang::constant(Rational(1, 2))));
  CHECK(parse_l("P(p) = 1") == lang::eq(lang::prob(lang::atom("p")), lang::constant(1)));
  CHECK(parse_l("P(p) <= P(q)") == lang::leq(lang::prob(lang::atom("p")), lang::prob(lang::atom("q"))));
}

TEST_CASE("syntax errors") {
  for (const char* bad : {"", "p &", "(p", "p q", "K", "P(p)", "p -> ", "#", "B p)"}) {
    INFO(std::string(bad));
    CHECK_THROWS_AS(parse_kb(bad), SyntaxError);
  }
  for (const char* bad : {"P(p) >=", "P(p) >= 1/0", "1/2 * p >= 0", "P(p >= 0", "2*P(p) + >= 1"}) {
    INFO(std::string(bad));
    CHECK_THROWS_AS(parse_l(bad), SyntaxError);
  }
}

TEST_CASE("single-letter operators need no space") { CHECK(parse_kb("Kp") == know(atom("p"))); }

TEST_CASE("print/parse round trip") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const FormulaKB f = random_formula_kb(rng, {"p", "q", "r_1"}, 5);
    INFO(to_string(f));
    CHECK(parse_kb(to_string(f)) == f);
    const FormulaL g = random_l(rng, 4);
    INFO(to_string(g));
    CHECK(parse_l(to_string(g)) == g);
  }
}

TEST_CASE("translation examples") {
  CHECK(to_string(translate(parse_kb("B p"), Threshold(Rational(1, 2)))) == "P(p) > 1/2");
  CHECK(to_string(translate(parse_kb("K p"), Threshold(Rational(2, 3)))) == "P(p) = 1");
  CHECK(translate(parse_kb("K p"), Threshold(Rational(1, 3))) ==
        lang::eq(lang::prob(lang::atom("p")), lang::constant(1)));
  CHECK(translate(parse_kb("~(p & B q)"), Threshold(Rational(2, 3))) ==
        lang::neg(lang::conj(lang::atom("p"), lang::gt(lang::prob(lang::atom("q")), lang::constant(Rational(2, 3))))));
  CHECK(to_string(translate(parse_kb("~(p & B q)"), Threshold(Rational(2, 3)))) == "~(p & P(q) > 2/3)");
}

TEST_CASE("translation distributes over Boolean nodes") {
  Rng rng(22);
  const Threshold c(Rational(3, 5));
  for (int i = 0; i < 300; ++i) {
    const FormulaKB a = random_formula_kb(rng, {"p", "q"}, 3), b = random_formula_kb(rng, {"p", "q"}, 3);
    CHECK(translate(neg(a), c) == lang::neg(translate(a, c)));
    CHECK(translate(conj(a, b), c) == lang::conj(translate(a, c), translate(b, c)));
    CHECK(translate(disj(a, b), c) == lang::disj(translate(a, c), translate(b, c)));
    CHECK(translate(know(a), c) == lang::eq(lang::prob(translate(a, c)), lang::constant(1)));
    CHECK(translate(believe(a), c) == lang::gt(lang::prob(translate(a, c)), lang::constant(c.value())));
  }
}

TEST_CASE("thresholds") {
  CHECK(code_of([] { Threshold(Rational(0)); }) == ErrorCode::BadThreshold);
  CHECK(code_of([] { Threshold(Rational(1)); }) == ErrorCode::BadThreshold);
  CHECK(code_of([] { Threshold(Rational(3, 2)); }) == ErrorCode::BadThreshold);
  auto r = scott_ratio(Threshold(Rational(2, 3)));
  CHECK(r.s_prime == Rational(2));
  CHECK(r.s == 2);
  CHECK(r.exact());
  r = scott_ratio(Threshold(Rational(3, 5)));
  CHECK(r.s_prime == Rational(3, 2));
  CHECK(r.s == 2);
  CHECK_FALSE(r.exact());
  r = scott_ratio(Threshold(Rational(1, 2)));
  CHECK(r.s == 1);
  CHECK(r.exact());
}

TEST_CASE("segerberg expansion shape") {
  const FormulaKB phi = atom("p"), psi = atom("q");
  const FormulaKB expected = know(disj(disj(conj(neg(phi), neg(psi)), conj(neg(phi), psi)), conj(phi, psi)));
  CHECK(segerberg_expand({phi}, {psi}, SegerbergMode::I) == expected);
  CHECK(segerberg_expand({phi}, {psi}, SegerbergMode::E) ==
        conj(segerberg_expand({phi}, {psi}, SegerbergMode::I), segerberg_expand({psi}, {phi}, SegerbergMode::I)));
  for (int m = 1; m <= 4; ++m) {
    std::vector<FormulaKB> phis, psis;
    for (int i = 0; i < m; ++i) {
      phis.push_back(atom("a" + std::to_string(i)));
      psis.push_back(atom("b" + std::to_string(i)));
    }
    // sum over i of C(m, i) d-patterns times e-patterns with at least i empties
    int total = 0;
    for (int i = 0; i <= m; ++i) {
      int e = 0;
      for (int j = i; j <= m; ++j) e += binomial(m, j);
      total += binomial(m, i) * e;
    }
    CHECK(disjunct_count(segerberg_expand(phis, psis, SegerbergMode::I).child()) == total);
  }
  CHECK(binomial(2, 1) * (binomial(2, 1) + binomial(2, 2)) == 6);
  std::vector<FormulaKB> five(5, phi);
  CHECK(code_of([&] { segerberg_expand(five, five, SegerbergMode::I); }) == ErrorCode::ExpansionTooLarge);
  CHECK(code_of([&] { segerberg_expand({phi}, {phi, psi}, SegerbergMode::I); }) == ErrorCode::InvalidModel);
  CHECK(code_of([&] { segerberg_expand({}, {}, SegerbergMode::I); }) == ErrorCode::InvalidModel);
  CHECK(segerberg_expand(five, five, SegerbergMode::I, 5).kind() == KBKind::Know);
}

TEST_CASE("scott instances") {
  const FormulaKB p = atom("p"), q = atom("q"), r = atom("r"), s = atom("s");
  const FormulaKB i1 = segerberg_expand({p}, {q}, SegerbergMode::I);
  CHECK(scott_instance({p}, {q}) == implies(conj(i1, believe(p)), believe(q)));
  CHECK(count_plausible(scott_instance({p, r}, {q, s})) == 1);
  CHECK(count_plausible(scott_instance({p, r, q}, {q, s, p})) == 2);
  CHECK(count_plausible(ws_instance({p, r}, {q, s})) == 0);
  // KBM follows propositionally from Scott(1) once K(p -> q) and p I q are equivalent.
  CHECK(is_tautology(implies(conj(iff(know(implies(p, q)), i1), scott_instance({p}, {q})), kbm_instance(p, q))));
  CHECK(d_instance(p) == implies(believe(p), plausible(p)));
  CHECK(sc_instance(p, q) == implies(conj(plausible(p), possible(conj(neg(p), q))), believe(disj(p, q))));
}

TEST_CASE("formula metrics") {
  const FormulaKB f = parse_kb("K (p & B q) | r");
  CHECK(f.modal_depth() == 2);
  CHECK(f.atoms() == std::set<std::string>{"p", "q", "r"});
  CHECK(parse_kb("true").size() == 1);
}
