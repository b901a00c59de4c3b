#include <stdexcept>

#include "betlogic/semantics.hpp"

namespace betlogic {

namespace {

// Worlds of every cell whose conditional mass of `x` satisfies `pred`.
template <typename Pred>
EventSet cells_where(const ProbabilityModel& m, const EventSet& x, Pred pred) {
  const Frame& f = m.frame();
  EventSet out = f.empty_set();
  for (int ci = 0; ci < f.cell_count(); ++ci) {
    const EventSet& cell = f.cells()[ci];
    if (pred(m.probability(x & cell), m.cell_mass(ci))) out = out | cell;
  }
  return out;
}

}  // namespace

Rational term_value(const ProbabilityModel& m, int world, const Term& t) {
  switch (t.kind()) {
    case TermKind::Const: return t.coefficient();
    case TermKind::Scaled:
      return t.coefficient() * m.conditional_probability(world, extension_l(m, t.formula()));
    case TermKind::Sum: return term_value(m, world, t.left()) + term_value(m, world, t.right());
  }
  throw std::logic_error("unreachable term kind");
}

namespace {

// Collects the linear form sum_k q_k * P(phi_k) + const with extensions
// resolved once, then evaluates it per cell.
void flatten(const ProbabilityModel& m, const Term& t, Rational& constant,
             std::vector<std::pair<Rational, EventSet>>& parts) {
  switch (t.kind()) {
    case TermKind::Const: constant += t.coefficient(); return;
    case TermKind::Scaled: parts.emplace_back(t.coefficient(), extension_l(m, t.formula())); return;
    case TermKind::Sum:
      flatten(m, t.left(), constant, parts);
      flatten(m, t.right(), constant, parts);
      return;
  }
}

}  // namespace

EventSet extension_l(const ProbabilityModel& m, const FormulaL& f) {
  const Frame& fr = m.frame();
  switch (f.kind()) {
    case LKind::Top: return fr.universe();
    case LKind::Atom: return fr.atom_extension(f.name());
    case LKind::Not: return extension_l(m, f.child()).complement();
    case LKind::And: return extension_l(m, f.child()) & extension_l(m, f.right());
    case LKind::GeqZero: {
      Rational constant;
      std::vector<std::pair<Rational, EventSet>> parts;
      flatten(m, f.term(), constant, parts);
      EventSet out = fr.empty_set();
      for (int ci = 0; ci < fr.cell_count(); ++ci) {
        const EventSet& cell = fr.cells()[ci];
        Rational value = constant;
        for (const auto& [q, ext] : parts) value += q * (m.probability(ext & cell) / m.cell_mass(ci));
        if (value.sign() >= 0) out = out | cell;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

EventSet extension_kb(const ProbabilityModel& m, const FormulaKB& f, const Threshold& c) {
  const Frame& fr = m.frame();
  switch (f.kind()) {
    case KBKind::Top: return fr.universe();
    case KBKind::Atom: return fr.atom_extension(f.name());
    case KBKind::Not: return extension_kb(m, f.child(), c).complement();
    case KBKind::And: return extension_kb(m, f.child(), c) & extension_kb(m, f.right(), c);
    case KBKind::Know:
      return cells_where(m, extension_kb(m, f.child(), c),
                         [](const Rational& px, const Rational& pc) { return px == pc; });
    case KBKind::Believe:
      return cells_where(m, extension_kb(m, f.child(), c), [&](const Rational& px, const Rational& pc) {
        return px > c.value() * pc;
      });
  }
  throw std::logic_error("unreachable formula kind");
}

EventSet extension_kb(const NeighborhoodModel& m, const FormulaKB& f) {
  const Frame& fr = m.frame();
  switch (f.kind()) {
    case KBKind::Top: return fr.universe();
    case KBKind::Atom: return fr.atom_extension(f.name());
    case KBKind::Not: return extension_kb(m, f.child()).complement();
    case KBKind::And: return extension_kb(m, f.child()) & extension_kb(m, f.right());
    case KBKind::Know:
    case KBKind::Believe: {
      const EventSet inner = extension_kb(m, f.child());
      EventSet out = fr.empty_set();
      for (int ci = 0; ci < fr.cell_count(); ++ci) {
        const EventSet& cell = fr.cells()[ci];
        const bool holds = f.kind() == KBKind::Know ? cell.subset_of(inner)
                                                    : m.is_neighborhood_in_cell(ci, inner & cell);
        if (holds) out = out | cell;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

bool eval_l(const ProbabilityModel& m, int world, const FormulaL& f) {
  return extension_l(m, f).contains(world);
}

bool eval_kb_prob(const ProbabilityModel& m, int world, const FormulaKB& f, const Threshold& c) {
  return extension_kb(m, f, c).contains(world);
}

bool eval_kb_nbhd(const NeighborhoodModel& m, int world, const FormulaKB& f) {
  return extension_kb(m, f).contains(world);
}

namespace {

bool counts_ok(const EventSet& cell, const std::vector<EventSet>& phis, const std::vector<EventSet>& psis,
               SegerbergMode mode) {
  bool ok = true;
  cell.for_each([&](int v) {
    int a = 0;
    int b = 0;
    for (const auto& x : phis) a += x.contains(v) ? 1 : 0;
    for (const auto& y : psis) b += y.contains(v) ? 1 : 0;
    if (mode == SegerbergMode::I ? a > b : a != b) ok = false;
  });
  return ok;
}

void check_lengths(const std::vector<FormulaKB>& phis, const std::vector<FormulaKB>& psis) {
  if (phis.size() != psis.size())
    throw std::invalid_argument("counting formula needs lists of equal length");
}

}  // namespace

bool eval_segerberg_direct(const ProbabilityModel& m, int world, const std::vector<FormulaKB>& phis,
                           const std::vector<FormulaKB>& psis, SegerbergMode mode,
                           const Threshold& c) {
  check_lengths(phis, psis);
  std::vector<EventSet> xs, ys;
  for (const auto& f : phis) xs.push_back(extension_kb(m, f, c));
  for (const auto& f : psis) ys.push_back(extension_kb(m, f, c));
  return counts_ok(m.frame().cell_of(world), xs, ys, mode);
}

bool eval_segerberg_direct(const NeighborhoodModel& m, int world, const std::vector<FormulaKB>& phis,
                           const std::vector<FormulaKB>& psis, SegerbergMode mode) {
  check_lengths(phis, psis);
  std::vector<EventSet> xs, ys;
  for (const auto& f : phis) xs.push_back(extension_kb(m, f));
  for (const auto& f : psis) ys.push_back(extension_kb(m, f));
  return counts_ok(m.frame().cell_of(world), xs, ys, mode);
}

bool valid_in_model(const ProbabilityModel& m, const FormulaKB& f, const Threshold& c) {
  return extension_kb(m, f, c) == m.frame().universe();
}

bool valid_in_model(const ProbabilityModel& m, const FormulaL& f) {
  return extension_l(m, f) == m.frame().universe();
}

bool valid_in_model(const NeighborhoodModel& m, const FormulaKB& f) {
  return extension_kb(m, f) == m.frame().universe();
}

}  // namespace betlogic
