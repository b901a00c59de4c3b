#include "betlogic/builders.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "betlogic/error.hpp"

namespace betlogic {

Threshold::Threshold(Rational value) : value_(std::move(value)) {
  if (value_.sign() <= 0 || value_ >= Rational(1))
    throw Error(ErrorCode::BadThreshold, "threshold " + value_.str() + " is not in (0, 1)");
}

FormulaL translate(const FormulaKB& f, const Threshold& c) {
  switch (f.kind()) {
    case KBKind::Top: return lang::top();
    case KBKind::Atom: return lang::atom(f.name());
    case KBKind::Not: return lang::neg(translate(f.child(), c));
    case KBKind::And: return lang::conj(translate(f.child(), c), translate(f.right(), c));
    case KBKind::Know:
      return lang::eq(lang::prob(translate(f.child(), c)), lang::constant(Rational(1)));
    case KBKind::Believe:
      return lang::gt(lang::prob(translate(f.child(), c)), lang::constant(c.value()));
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

void check_lists(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis, int guard) {
  if (phis.empty() || phis.size() != psis.size())
    throw Error(ErrorCode::InvalidModel, "counting formula needs two nonempty lists of equal length");
  if (static_cast<int>(phis.size()) > guard)
    throw Error(ErrorCode::ExpansionTooLarge,
                "expansion with m = " + std::to_string(phis.size()) + " exceeds the guard " +
                    std::to_string(guard));
}

FormulaKB expand_one(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis) {
  const int m = static_cast<int>(phis.size());
  const std::uint32_t all = (1U << m) - 1;
  std::vector<FormulaKB> disjuncts;
  for (int i = 0; i <= m; ++i) {
    for (std::uint32_t d = 0; d <= all; ++d) {
      if (std::popcount(d) != i) continue;
      for (std::uint32_t e = 0; e <= all; ++e) {
        if (std::popcount(e) < i) continue;
        std::vector<FormulaKB> lits;
        for (int k = 0; k < m; ++k) lits.push_back((d >> k) & 1U ? phis[k] : neg(phis[k]));
        for (int k = 0; k < m; ++k) lits.push_back((e >> k) & 1U ? psis[k] : neg(psis[k]));
        disjuncts.push_back(conj_all(lits));
      }
    }
  }
  return know(disj_all(disjuncts));
}

}  // namespace

FormulaKB segerberg_expand(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis,
                           SegerbergMode mode, int guard) {
  check_lists(phis, psis, guard);
  if (mode == SegerbergMode::I) return expand_one(phis, psis);
  return conj(expand_one(phis, psis), expand_one(psis, phis));
}

FormulaKB scott_instance(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis,
                         int guard) {
  check_lists(phis, psis, guard);
  std::vector<FormulaKB> antecedent{segerberg_expand(phis, psis, SegerbergMode::I, guard),
                                    believe(phis[0])};
  for (std::size_t i = 1; i < phis.size(); ++i) antecedent.push_back(plausible(phis[i]));
  std::vector<FormulaKB> consequent;
  for (const auto& psi : psis) consequent.push_back(believe(psi));
  return implies(conj_all(antecedent), disj_all(consequent));
}

FormulaKB ws_instance(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis,
                      int guard) {
  check_lists(phis, psis, guard);
  std::vector<FormulaKB> antecedent{segerberg_expand(phis, psis, SegerbergMode::I, guard)};
  for (const auto& phi : phis) antecedent.push_back(believe(phi));
  std::vector<FormulaKB> consequent;
  for (const auto& psi : psis) consequent.push_back(believe(psi));
  return implies(conj_all(antecedent), disj_all(consequent));
}

namespace {

std::vector<FormulaKB> pairwise_exclusive(const std::vector<FormulaKB>& phis, std::size_t from) {
  std::vector<FormulaKB> out;
  for (std::size_t i = from; i < phis.size(); ++i) {
    for (std::size_t j = from; j < phis.size(); ++j) {
      if (i != j) out.push_back(know(implies(phis[i], neg(phis[j]))));
    }
  }
  return out;
}

}  // namespace

FormulaKB sc0_instance(const std::vector<FormulaKB>& phis) {
  if (phis.size() < 2) throw Error(ErrorCode::InvalidModel, "sc0 needs phi0 and at least one more");
  std::vector<FormulaKB> antecedent{possible(phis[0])};
  for (std::size_t i = 1; i < phis.size(); ++i) antecedent.push_back(plausible(phis[i]));
  for (const auto& f : pairwise_exclusive(phis, 0)) antecedent.push_back(f);
  return implies(conj_all(antecedent), believe(disj_all(phis)));
}

FormulaKB sc1_instance(const std::vector<FormulaKB>& phis) {
  if (phis.empty()) throw Error(ErrorCode::InvalidModel, "sc1 needs at least one formula");
  std::vector<FormulaKB> antecedent;
  for (const auto& phi : phis) antecedent.push_back(plausible(phi));
  for (const auto& f : pairwise_exclusive(phis, 0)) antecedent.push_back(f);
  return implies(conj_all(antecedent), believe(disj_all(phis)));
}

FormulaKB d_instance(const FormulaKB& phi) { return implies(believe(phi), plausible(phi)); }

FormulaKB sc_instance(const FormulaKB& phi, const FormulaKB& psi) {
  return implies(conj(plausible(phi), possible(conj(neg(phi), psi))), believe(disj(phi, psi)));
}

FormulaKB kbm_instance(const FormulaKB& phi, const FormulaKB& psi) {
  return implies(know(implies(phi, psi)), implies(believe(phi), believe(psi)));
}

ScottRatio scott_ratio(const Threshold& c) {
  const Rational s_prime = c.value() / (Rational(1) - c.value());
  const Rational s = s_prime.ceil();
  return {s_prime, static_cast<int>(s.raw().get_num().get_si())};
}

}  // namespace betlogic
