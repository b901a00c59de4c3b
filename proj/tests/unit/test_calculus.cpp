#include <functional>

#include "betlogic/builders.hpp"
#include "betlogic/calculus.hpp"
#include "betlogic/enumeration.hpp"
#include "betlogic/error.hpp"
#include "betlogic/io.hpp"
#include "betlogic/random.hpp"
#include "betlogic/syntax.hpp"
#include "doctest.h"

using namespace betlogic;

namespace {

const SchemeId kTable1[] = {
    {SchemeKind::CL, 0}, {SchemeKind::KS5_K, 0}, {SchemeKind::KS5_T, 0}, {SchemeKind::KS5_4, 0},
    {SchemeKind::KS5_5, 0}, {SchemeKind::BF, 0}, {SchemeKind::N, 0}, {SchemeKind::Ap, 0},
    {SchemeKind::An, 0}, {SchemeKind::KBM, 0},
};

// Every structure on up to 4 worlds, every valuation of p and q.
bool valid_on_all(const FormulaKB& f, bool mid_only) {
  const CompiledKB code(f);
  for (int n = 1; n <= 4; ++n) {
    const bool ok = for_each_nbhd_structure(n, mid_only, 3, [&](const NbhdStructure& s) {
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      const int k = static_cast<int>(code.atoms().size());
      std::vector<std::uint64_t> ext(k);
      const std::uint64_t combos = std::uint64_t{1} << (n * k);
      for (std::uint64_t v = 0; v < combos; ++v) {
        for (int a = 0; a < k; ++a) ext[a] = (v >> (a * n)) & full;
        if (code.extension(s, ext.data()) != full) return false;
      }
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("scheme names round trip") {
  for (const auto& s : kTable1) CHECK(parse_scheme_name(scheme_name(s)) == s);
  CHECK(parse_scheme_name("Scott3") == SchemeId{SchemeKind::Scott, 3});
  CHECK(parse_scheme_name("A4") == SchemeId{SchemeKind::CL, 4});
  CHECK_THROWS_AS(parse_scheme_name("Scott0"), SyntaxError);
  CHECK_THROWS_AS(parse_scheme_name("Q"), SyntaxError);
}

TEST_CASE("match_axiom on table instances") {
  auto m = match_axiom(parse_kb("K(p -> q) -> (B p -> B q)"), {SchemeKind::KBM, 0});
  REQUIRE(m);
  CHECK(m->at("phi") == atom("p"));
  CHECK(m->at("psi") == atom("q"));
  CHECK(match_axiom(parse_kb("B p -> K B p"), {SchemeKind::Ap, 0}));
  CHECK(match_axiom(parse_kb("~B p -> K ~B p"), {SchemeKind::An, 0}));
  CHECK(match_axiom(parse_kb("~B false"), {SchemeKind::BF, 0}));
  CHECK(match_axiom(parse_kb("B true"), {SchemeKind::N, 0}));
  CHECK(match_axiom(parse_kb("B (p & q) -> <B> (p & q)"), {SchemeKind::D, 0}));
  CHECK(match_axiom(parse_kb("<B> p & <K> (~p & q) -> B (p | q)"), {SchemeKind::SC, 0}));
  const FormulaKB bbb = parse_kb("B p -> B B p");
  for (const auto& s : kTable1) CHECK_FALSE(match_axiom(bbb, s));
  CHECK_FALSE(match_axiom(parse_kb("K(p -> q) -> (B p -> B r)"), {SchemeKind::KBM, 0}));
}

TEST_CASE("match_axiom reproduces random instances") {
  Rng rng(11);
  const std::vector<SchemeId> schemes = {
      {SchemeKind::CL, 2}, {SchemeKind::CL, 3}, {SchemeKind::KS5_K, 0}, {SchemeKind::KS5_5, 0},
      {SchemeKind::KBM, 0}, {SchemeKind::SC, 0}, {SchemeKind::Scott, 2}, {SchemeKind::Scott, 3}};
  for (int trial = 0; trial < 200; ++trial) {
    const SchemeId s = schemes[rng.below(schemes.size())];
    const FormulaKB t = scheme_template(s);
    Substitution sub;
    for (const auto& v : t.atoms()) sub[v] = random_formula_kb(rng, {"p", "q", "r"}, 2);
    const FormulaKB inst = substitute(t, sub);
    auto m = match_axiom(inst, s);
    REQUIRE(m);
    CHECK(substitute(t, *m) == inst);
  }
}

TEST_CASE("Scott arity is guarded") {
  CHECK_THROWS_AS(match_axiom(top(), {SchemeKind::Scott, 5}), Error);
}

TEST_CASE("tautology test") {
  CHECK(is_tautology(parse_kb("p | ~p")));
  CHECK(is_tautology(parse_kb("K p & B q -> K p")));
  CHECK_FALSE(is_tautology(parse_kb("K p -> p")));
  std::vector<FormulaKB> many;
  for (int i = 0; i < 13; ++i) many.push_back(atom("a" + std::to_string(i)));
  CHECK_THROWS_AS(is_tautology(disj_all(many)), Error);
}

TEST_CASE("corpus proofs are accepted in their theory") {
  const auto proofs = corpus_proofs();
  CHECK(proofs.size() == 9);
  for (const auto& p : proofs) {
    INFO(p.name);
    const auto r = check_derivation(p.derivation, p.theory);
    INFO(r.reason);
    CHECK(r.accepted);
    CHECK(p.derivation.lines.back().formula == p.goal);
  }
}

TEST_CASE("corpus goals") {
  std::map<std::string, FormulaKB> goals;
  for (const auto& p : corpus_proofs()) goals.emplace(p.name, p.goal);
  CHECK(goals.at("know-implies-believe") == parse_kb("K p -> B p"));
  CHECK(goals.at("believe-conjunction-split") == parse_kb("B (p & q) -> B p & B q"));
  CHECK(goals.at("know-and-believe") == parse_kb("K p & B q -> B (p & q)"));
  CHECK(goals.at("belief-necessitation") == parse_kb("B (p -> p)"));
  CHECK(goals.at("belief-monotonicity") == parse_kb("B (p & q) -> B p"));
  CHECK(goals.at("belief-equivalence") == parse_kb("B (p & q) <-> B (q & p)"));
  CHECK(goals.at("no-belief-in-contradiction") == parse_kb("~B (p & ~p)"));
  CHECK(goals.at("bf-from-d") == parse_kb("~B false"));
  CHECK(goals.at("kbm-from-scott") == parse_kb("K (p -> q) -> (B p -> B q)"));
}

TEST_CASE("theory membership is enforced") {
  for (const auto& p : corpus_proofs()) {
    if (p.name == "no-belief-in-contradiction") {
      CHECK_FALSE(check_derivation(p.derivation, Theory::KBHalfMinus).accepted);
      CHECK(check_derivation(p.derivation, Theory::KBHalf).accepted);
    }
    if (p.name == "kbm-from-scott") CHECK_FALSE(check_derivation(p.derivation, Theory::KB).accepted);
  }
}

TEST_CASE("single-line mutants are rejected at the mutated line") {
  for (const auto& p : corpus_proofs()) {
    const int n = static_cast<int>(p.derivation.lines.size());
    for (int k = 0; k < n; ++k) {
      Derivation bad = p.derivation;
      bad.lines[k].formula = neg(bad.lines[k].formula);
      auto r = check_derivation(bad, p.theory);
      CHECK_FALSE(r.accepted);
      CHECK(r.line == k + 1);
      auto& j = p.derivation.lines[k].just;
      if (j.kind == Justification::Kind::MP) {
        Derivation idx = p.derivation;
        idx.lines[k].just.j = j.i;
        r = check_derivation(idx, p.theory);
        CHECK_FALSE(r.accepted);
        CHECK(r.line == k + 1);
      }
    }
  }
}

TEST_CASE("proof text round trip") {
  for (const auto& p : corpus_proofs()) {
    const std::string text = format_derivation(p.derivation);
    const Derivation back = parse_derivation(text);
    REQUIRE(back.lines.size() == p.derivation.lines.size());
    for (std::size_t i = 0; i < back.lines.size(); ++i) CHECK(back.lines[i].formula == p.derivation.lines[i].formula);
    CHECK(format_derivation(back) == text);
    CHECK(check_derivation(back, p.theory).accepted);
  }
}

TEST_CASE("stored proof files match the corpus") {
  for (const auto& p : corpus_proofs()) {
    INFO(p.name);
    const std::string path = std::string(BETLOGIC_DATA_DIR) + "/proofs/" + p.name + ".proof";
    const Derivation d = parse_derivation(read_file(path));
    CHECK(check_derivation(d, p.theory).accepted);
    CHECK(d.lines.back().formula == p.goal);
  }
}

TEST_CASE("proof file syntax errors") {
  CHECK_THROWS_AS(parse_derivation("1. p ; XX"), SyntaxError);
  CHECK_THROWS_AS(parse_derivation("2. true ; AX TOP"), SyntaxError);
  CHECK_THROWS_AS(parse_derivation("1. B ; AX N"), SyntaxError);
  const auto d = parse_derivation("# comment\n\n1. B true ; AX N\n2. K B true ; MN 1\n");
  CHECK(d.lines.size() == 2);
  CHECK(check_derivation(d, Theory::KB).accepted);
}

TEST_CASE("substitution given in the file must agree") {
  auto d = parse_derivation("1. p -> (q -> p) ; AX A1 {phi:=p, psi:=q}\n");
  CHECK(check_derivation(d, Theory::KB).accepted);
  d = parse_derivation("1. p -> (q -> p) ; AX A1 {phi:=q}\n");
  CHECK_FALSE(check_derivation(d, Theory::KB).accepted);
  d = parse_derivation("1. p -> (q -> p) ; AX A1 {zeta:=q}\n");
  CHECK_FALSE(check_derivation(d, Theory::KB).accepted);
}

TEST_CASE("citations must point backwards") {
  auto d = parse_derivation("1. B true ; AX N\n2. K B true ; MN 2\n");
  CHECK(check_derivation(d, Theory::KB).line == 2);
  d = parse_derivation("1. B true ; AX N\n2. q ; MP 1 1\n");
  CHECK(check_derivation(d, Theory::KB).line == 2);
}

TEST_CASE("tautology oracle is opt-in") {
  const auto d = parse_derivation("1. p | ~p ; TAUT\n");
  CHECK_FALSE(check_derivation(d, Theory::KB).accepted);
  CheckOptions opt;
  opt.allow_tautology = true;
  CHECK(check_derivation(d, Theory::KB, opt).accepted);
  CHECK_FALSE(check_derivation(parse_derivation("1. p ; TAUT\n"), Theory::KB, opt).accepted);
}

TEST_CASE("builder proves tautologies with primitive lines only") {
  const char* taut[] = {"p | ~p", "~~p -> p", "(p -> q) -> (~q -> ~p)", "p & q -> q & p",
                        "K p & ~K p -> B q", "((p -> q) -> p) -> p", "true", "~false"};
  for (const char* t : taut) {
    INFO(t);
    ProofBuilder b;
    const int line = b.tautology(parse_kb(t));
    CHECK(b.formula(line) == parse_kb(t));
    CHECK(check_derivation(b.derivation(), Theory::KB).accepted);
  }
  ProofBuilder b;
  CHECK_THROWS(b.tautology(parse_kb("p -> q")));
}

TEST_CASE("builder on random tautologies") {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const FormulaKB f = random_formula_kb(rng, {"p", "q"}, 2);
    const FormulaKB t = rng.coin() ? implies(f, f) : disj(f, neg(f));
    ProofBuilder b;
    b.tautology(t);
    CHECK(check_derivation(b.derivation(), Theory::KB).accepted);
  }
}

TEST_CASE("accepted corpus goals are valid on enumerated models") {
  for (const auto& p : corpus_proofs()) {
    INFO(p.name);
    CHECK(valid_on_all(p.goal, p.theory != Theory::KB));
  }
}
