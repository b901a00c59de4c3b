#include "betlogic/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>

#include "betlogic/enumerate.hpp"
#include "betlogic/error.hpp"
#include "betlogic/properties.hpp"

namespace betlogic {

NbhdStructure structure_of(const NeighborhoodModel& m) {
  NbhdStructure s;
  s.n = m.frame().size();
  for (int c = 0; c < m.frame().cell_count(); ++c) {
    s.cells.push_back(m.frame().cells()[c].bits());
    std::vector<std::uint64_t> g;
    for (const auto& x : m.generators(c)) g.push_back(x.bits());
    s.generators.push_back(std::move(g));
  }
  for (int w = 0; w < s.n; ++w) s.cell_of.push_back(m.frame().cell_index(w));
  return s;
}

NeighborhoodModel model_of(const NbhdStructure& s, const std::map<std::string, std::uint64_t>& atoms) {
  std::vector<std::string> names;
  for (int i = 0; i < s.n; ++i) names.push_back("w" + std::to_string(i + 1));
  std::vector<EventSet> cells;
  for (auto c : s.cells) cells.emplace_back(s.n, c);
  std::map<std::string, EventSet> ext;
  for (const auto& [a, bits] : atoms) ext.emplace(a, EventSet(s.n, bits));
  Frame frame(std::move(names), std::move(cells), std::move(ext));
  std::vector<std::vector<EventSet>> gens(frame.cell_count());
  for (std::size_t c = 0; c < s.cells.size(); ++c) {
    const int ci = frame.cell_index(std::countr_zero(s.cells[c]));
    for (auto g : s.generators[c]) gens[ci].emplace_back(s.n, g);
  }
  return NeighborhoodModel(std::move(frame), std::move(gens));
}

CompiledKB::CompiledKB(const FormulaKB& f) {
  const auto atom_set = f.atoms();
  atoms_.assign(atom_set.begin(), atom_set.end());
  std::function<int(const FormulaKB&)> emit = [&](const FormulaKB& g) -> int {
    Instr in{Op::Top, -1, -1};
    switch (g.kind()) {
      case KBKind::Top: break;
      case KBKind::Atom:
        in.op = Op::Atom;
        in.a = static_cast<int>(std::lower_bound(atoms_.begin(), atoms_.end(), g.name()) - atoms_.begin());
        break;
      case KBKind::Not: in = {Op::Not, emit(g.child()), -1}; break;
      case KBKind::And: {
        const int a = emit(g.child());
        in = {Op::And, a, emit(g.right())};
        break;
      }
      case KBKind::Know: in = {Op::Know, emit(g.child()), -1}; break;
      case KBKind::Believe: in = {Op::Believe, emit(g.child()), -1}; break;
    }
    code_.push_back(in);
    return static_cast<int>(code_.size()) - 1;
  };
  emit(f);
}

std::uint64_t CompiledKB::extension(const NbhdStructure& s, const std::uint64_t* atom_ext) const {
  const std::uint64_t all = EventSet::mask(s.n);
  std::vector<std::uint64_t> r(code_.size());
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& in = code_[i];
    switch (in.op) {
      case Op::Top: r[i] = all; break;
      case Op::Atom: r[i] = atom_ext[in.a] & all; break;
      case Op::Not: r[i] = ~r[in.a] & all; break;
      case Op::And: r[i] = r[in.a] & r[in.b]; break;
      case Op::Know:
      case Op::Believe: {
        std::uint64_t out = 0;
        const std::uint64_t x = r[in.a];
        for (std::size_t c = 0; c < s.cells.size(); ++c) {
          const std::uint64_t cell = s.cells[c];
          bool holds;
          if (in.op == Op::Know) {
            holds = (cell & ~x) == 0;
          } else {
            holds = false;
            for (auto g : s.generators[c]) {
              if ((g & ~x) == 0) {
                holds = true;
                break;
              }
            }
          }
          if (holds) out |= cell;
        }
        r[i] = out;
        break;
      }
    }
  }
  return r.back();
}

namespace {

struct CellCatalog {
  std::vector<std::vector<std::uint64_t>> antichains;  // over {0..k-1}
  std::vector<bool> mid_ok;
};

std::uint64_t deposit(std::uint64_t bits, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0 && bits != 0; m &= m - 1, bits >>= 1) {
    if (bits & 1U) out |= m & -m;
  }
  return out;
}

const CellCatalog& catalog(int k, int m_max) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, CellCatalog> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({k, m_max});
  if (it != cache.end()) return it->second;
  CellCatalog cat;
  const EventSet cell = EventSet::full(k);
  for (const auto& ac : nonempty_antichains(cell)) {
    std::vector<std::uint64_t> masks;
    for (const auto& s : ac) masks.push_back(s.bits());
    cat.antichains.push_back(masks);
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("w" + std::to_string(i + 1));
    NeighborhoodModel m(Frame(names, std::vector<EventSet>{cell}, {}), {ac});
    BruteForceBudget budget;
    budget.m_max = m_max;
    cat.mid_ok.push_back(check_mid_threshold(m, budget).all_hold());
  }
  return cache.emplace(std::make_pair(k, m_max), std::move(cat)).first->second;
}

}  // namespace

bool for_each_structure_on_partition(int n, const std::vector<EventSet>& partition, bool mid_only,
                                     int m_max,
                                     const std::function<bool(const NbhdStructure&)>& visit) {
  NbhdStructure s;
  s.n = n;
  s.cell_of.assign(n, 0);
  std::vector<const CellCatalog*> cats;
  std::vector<std::vector<int>> choices;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    s.cells.push_back(partition[c].bits());
    partition[c].for_each([&](int w) { s.cell_of[w] = static_cast<int>(c); });
    const CellCatalog& cat = catalog(partition[c].count(), m_max);
    std::vector<int> ok;
    for (std::size_t i = 0; i < cat.antichains.size(); ++i) {
      if (!mid_only || cat.mid_ok[i]) ok.push_back(static_cast<int>(i));
    }
    cats.push_back(&cat);
    choices.push_back(std::move(ok));
  }
  std::vector<int> sizes;
  for (const auto& ch : choices) sizes.push_back(static_cast<int>(ch.size()));
  s.generators.assign(partition.size(), {});
  return for_each_product(sizes, [&](const std::vector<int>& idx) {
    for (std::size_t c = 0; c < partition.size(); ++c) {
      auto& g = s.generators[c];
      g.clear();
      for (auto local : cats[c]->antichains[choices[c][idx[c]]]) g.push_back(deposit(local, s.cells[c]));
    }
    return visit(s);
  });
}

bool for_each_nbhd_structure(int n, bool mid_only, int m_max,
                             const std::function<bool(const NbhdStructure&)>& visit) {
  if (n < 1 || n > 5) throw Error(ErrorCode::BoundTooLarge, "structure enumeration supports 1 to 5 worlds");
  for (const auto& partition : set_partitions(n)) {
    if (!for_each_structure_on_partition(n, partition, mid_only, m_max, visit)) return false;
  }
  return true;
}

}  // namespace betlogic
