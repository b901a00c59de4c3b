#include "betlogic/properties.hpp"

#include <algorithm>
#include <functional>

#include "betlogic/error.hpp"

namespace betlogic {

bool PropertyReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

const Verdict* PropertyReport::find(const std::string& property) const {
  for (const auto& v : verdicts) {
    if (v.property == property) return &v;
  }
  return nullptr;
}

bool PropertyReport::holds(const std::string& property) const {
  const Verdict* v = find(property);
  return v != nullptr && v->holds;
}

namespace {

Verdict fails(const std::string& name, Witness w) { return Verdict{name, false, std::move(w)}; }

bool contains(const std::vector<EventSet>& family, const EventSet& x) {
  return std::find(family.begin(), family.end(), x) != family.end();
}

}  // namespace

// ---------------------------------------------------------------------------
// Base properties

namespace {

std::optional<Witness> find_kbc(const RawNeighborhoodSystem& raw) {
  for (int w = 0; w < raw.frame.size(); ++w) {
    for (const auto& x : raw.families[w]) {
      if (!x.subset_of(raw.frame.cell_of(w)))
        return Witness{raw.frame.cell_index(w), {x}, {}, {}, "neighborhood of " + raw.frame.world_name(w) + " leaves the cell"};
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_kbf(const RawNeighborhoodSystem& raw) {
  for (int w = 0; w < raw.frame.size(); ++w) {
    for (const auto& x : raw.families[w]) {
      if (x.is_empty())
        return Witness{raw.frame.cell_index(w), {x}, {}, {}, "empty set is a neighborhood of " + raw.frame.world_name(w)};
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_n(const RawNeighborhoodSystem& raw) {
  for (int w = 0; w < raw.frame.size(); ++w) {
    const EventSet& cell = raw.frame.cell_of(w);
    if (!contains(raw.families[w], cell))
      return Witness{raw.frame.cell_index(w), {cell}, {}, {}, "cell is not a neighborhood of " + raw.frame.world_name(w)};
  }
  return std::nullopt;
}

std::optional<Witness> find_a(const RawNeighborhoodSystem& raw) {
  for (int w = 0; w < raw.frame.size(); ++w) {
    std::vector<EventSet> fw = raw.families[w];
    std::sort(fw.begin(), fw.end(), canonical_less);
    fw.erase(std::unique(fw.begin(), fw.end()), fw.end());
    std::optional<Witness> found;
    raw.frame.cell_of(w).for_each([&](int v) {
      if (found || v == w) return;
      std::vector<EventSet> fv = raw.families[v];
      std::sort(fv.begin(), fv.end(), canonical_less);
      fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
      if (fv != fw) {
        EventSet diff;
        for (const auto& x : fw) {
          if (!contains(fv, x)) {
            diff = x;
            break;
          }
        }
        if (diff.universe_size() == 0) {
          for (const auto& x : fv) {
            if (!contains(fw, x)) {
              diff = x;
              break;
            }
          }
        }
        found = Witness{raw.frame.cell_index(w), {diff}, {}, {},
                        raw.frame.world_name(w) + " and " + raw.frame.world_name(v) + " disagree"};
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<Witness> find_kbm(const RawNeighborhoodSystem& raw) {
  for (int w = 0; w < raw.frame.size(); ++w) {
    const EventSet& cell = raw.frame.cell_of(w);
    for (const auto& x : raw.families[w]) {
      if (!x.subset_of(cell)) continue;
      const EventSet rest = cell - x;
      std::optional<Witness> found;
      rest.for_each([&](int v) {
        if (found) return;
        const EventSet y = x.with(v);
        if (!contains(raw.families[w], y))
          found = Witness{raw.frame.cell_index(w), {x, y}, {}, {}, "superset of a neighborhood is missing"};
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace

PropertyReport check_base_properties(const RawNeighborhoodSystem& raw) {
  if (static_cast<int>(raw.families.size()) != raw.frame.size())
    throw Error(ErrorCode::InvalidModel, "expected one neighborhood family per world");
  PropertyReport report;
  const std::pair<const char*, std::function<std::optional<Witness>(const RawNeighborhoodSystem&)>>
      checks[] = {{"kbc", find_kbc}, {"kbf", find_kbf}, {"n", find_n}, {"a", find_a}, {"kbm", find_kbm}};
  for (const auto& [name, fn] : checks) {
    auto w = fn(raw);
    report.verdicts.push_back(w ? fails(name, *w) : Verdict{name, true, std::nullopt});
  }
  return report;
}

PropertyReport check_base_properties(const NeighborhoodModel& m) {
  return check_base_properties(to_raw(m));
}

// ---------------------------------------------------------------------------
// Counting properties

bool counting_dominated(const EventSet& cell, const std::vector<EventSet>& xs,
                        const std::vector<EventSet>& ys) {
  bool ok = true;
  cell.for_each([&](int v) {
    if (!ok) return;
    int cx = 0;
    int cy = 0;
    for (const auto& x : xs) cx += x.contains(v) ? 1 : 0;
    for (const auto& y : ys) cy += y.contains(v) ? 1 : 0;
    if (cx > cy) ok = false;
  });
  return ok;
}

std::vector<EventSet> maximal_non_neighborhoods(const NeighborhoodModel& m, int cell) {
  const EventSet& c = m.frame().cells().at(cell);
  std::vector<EventSet> out;
  for_each_subset(c, [&](const EventSet& y) {
    if (m.is_neighborhood_in_cell(cell, y)) return;
    bool maximal = true;
    (c - y).for_each([&](int v) {
      if (maximal && !m.is_neighborhood_in_cell(cell, y.with(v))) maximal = false;
    });
    if (maximal) out.push_back(y);
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<EventSet> minimal_unrefuted(const NeighborhoodModel& m, int cell) {
  const EventSet& c = m.frame().cells().at(cell);
  std::vector<EventSet> out;
  for (const auto& y : maximal_non_neighborhoods(m, cell)) out.push_back(c - y);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_scott_violation(const NeighborhoodModel& m, int cell, const std::vector<EventSet>& xs,
                        const std::vector<EventSet>& ys) {
  const EventSet& c = m.frame().cells().at(cell);
  if (xs.empty() || xs.size() != ys.size()) return false;
  for (const auto& s : xs) if (!s.subset_of(c)) return false;
  for (const auto& s : ys) if (!s.subset_of(c)) return false;
  if (!m.is_neighborhood_in_cell(cell, xs[0])) return false;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (m.is_neighborhood_in_cell(cell, c - xs[i])) return false;
  }
  if (!counting_dominated(c, xs, ys)) return false;
  for (const auto& y : ys) {
    if (m.is_neighborhood_in_cell(cell, y)) return false;
  }
  return true;
}

bool is_ws_violation(const NeighborhoodModel& m, int cell, const std::vector<EventSet>& xs,
                     const std::vector<EventSet>& ys) {
  const EventSet& c = m.frame().cells().at(cell);
  if (xs.empty() || xs.size() != ys.size()) return false;
  for (const auto& s : xs) if (!s.subset_of(c) || !m.is_neighborhood_in_cell(cell, s)) return false;
  for (const auto& s : ys) if (!s.subset_of(c) || m.is_neighborhood_in_cell(cell, s)) return false;
  return counting_dominated(c, xs, ys);
}

namespace {

void check_cell_budget(const NeighborhoodModel& m, int cell, const BruteForceBudget& budget) {
  const int size = m.frame().cells()[cell].count();
  if (size > budget.max_cell_size)
    throw Error(ErrorCode::CellTooLargeForBruteForce,
                "cell " + m.frame().format_set(m.frame().cells()[cell]) + " has " +
                    std::to_string(size) + " worlds; brute-force limit is " +
                    std::to_string(budget.max_cell_size));
}

long long multisets(long long n, int k) {
  // C(n + k - 1, k), saturating.
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<long double>(n + k - i) / i;
  return r > 9e18L ? static_cast<long long>(9e18) : static_cast<long long>(r);
}

// Visits all nondecreasing index sequences of length k over [0, n).
bool for_each_multiset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k, 0);
  if (k == 0) return visit(idx);
  if (n == 0) return true;
  while (true) {
    if (!visit(idx)) return false;
    int p = k - 1;
    while (p >= 0 && idx[p] == n - 1) --p;
    if (p < 0) return true;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[p];
  }
}

// Searches X1 ∈ firsts, X2..Xm ∈ rests (multiset), Y1..Ym ∈ ys (multiset)
// with the counting condition. Returns the first hit in enumeration order.
std::optional<Witness> counting_search(const EventSet& cell, int cell_index, int m,
                                       const std::vector<EventSet>& firsts,
                                       const std::vector<EventSet>& rests,
                                       const std::vector<EventSet>& ys, long long max_work) {
  if (firsts.empty() || ys.empty() || (m > 1 && rests.empty())) return std::nullopt;
  const long double work = static_cast<long double>(firsts.size()) *
                           multisets(static_cast<long long>(rests.size()), m - 1) *
                           multisets(static_cast<long long>(ys.size()), m);
  if (work > static_cast<long double>(max_work))
    throw Error(ErrorCode::CellTooLargeForBruteForce,
                "counting search at m = " + std::to_string(m) + " exceeds the work budget");
  const std::vector<int> worlds = cell.members();
  std::optional<Witness> found;
  for (const auto& x1 : firsts) {
    for_each_multiset(static_cast<int>(rests.size()), m - 1, [&](const std::vector<int>& xi) {
      std::vector<int> need(worlds.size(), 0);
      for (std::size_t k = 0; k < worlds.size(); ++k) {
        need[k] += x1.contains(worlds[k]) ? 1 : 0;
        for (int i : xi) need[k] += rests[i].contains(worlds[k]) ? 1 : 0;
      }
      return for_each_multiset(static_cast<int>(ys.size()), m, [&](const std::vector<int>& yi) {
        for (std::size_t k = 0; k < worlds.size(); ++k) {
          int have = 0;
          for (int j : yi) have += ys[j].contains(worlds[k]) ? 1 : 0;
          if (have < need[k]) return true;
        }
        Witness w;
        w.cell = cell_index;
        w.xs.push_back(x1);
        for (int i : xi) w.xs.push_back(rests[i]);
        for (int j : yi) w.ys.push_back(ys[j]);
        w.note = "m = " + std::to_string(m);
        found = std::move(w);
        return false;
      });
    });
    if (found) break;
  }
  return found;
}

std::optional<Witness> find_d(const NeighborhoodModel& m, int cell) {
  const auto& gens = m.generators(cell);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i].disjoint(gens[j])) {
        const EventSet& c = m.frame().cells()[cell];
        return Witness{cell, {gens[i], c - gens[i]}, {}, {}, "a set and its complement are both neighborhoods"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_sc(const NeighborhoodModel& m, int cell) {
  const EventSet& c = m.frame().cells()[cell];
  std::optional<Witness> found;
  for_each_subset(c, [&](const EventSet& x) {
    if (found || m.is_neighborhood_in_cell(cell, c - x)) return;
    (c - x).for_each([&](int v) {
      if (found) return;
      const EventSet y = x.with(v);
      if (!m.is_neighborhood_in_cell(cell, y))
        found = Witness{cell, {x, y}, {}, {}, "complement of X is not a neighborhood but a proper superset of X is not one either"};
    });
  });
  return found;
}

}  // namespace

PropertyReport check_mid_threshold(const NeighborhoodModel& m, const BruteForceBudget& budget) {
  if (budget.m_max < 1) throw Error(ErrorCode::BoundTooLarge, "m_max must be at least 1");
  PropertyReport report;
  Verdict d{"d", true, std::nullopt};
  Verdict sc{"sc", true, std::nullopt};
  Verdict scott{"scott", true, std::nullopt};
  for (int cell = 0; cell < m.frame().cell_count(); ++cell) {
    check_cell_budget(m, cell, budget);
    if (d.holds) {
      if (auto w = find_d(m, cell)) d = fails("d", *w);
    }
    if (sc.holds) {
      if (auto w = find_sc(m, cell)) sc = fails("sc", *w);
    }
    if (scott.holds) {
      const auto gens = m.generators(cell);
      const auto rests = minimal_unrefuted(m, cell);
      const auto ys = maximal_non_neighborhoods(m, cell);
      for (int k = 1; k <= budget.m_max && scott.holds; ++k) {
        if (auto w = counting_search(m.frame().cells()[cell], cell, k, gens, rests, ys, budget.max_work))
          scott = fails("scott", *w);
      }
    }
  }
  report.verdicts = {d, sc, scott};
  return report;
}

namespace {

// Pairwise-disjoint s-element subfamilies of `family`, in index order.
std::optional<std::vector<EventSet>> find_disjoint_family(
    const std::vector<EventSet>& family, int s,
    const std::function<bool(const std::vector<EventSet>&)>& violates) {
  std::vector<EventSet> current;
  std::optional<std::vector<EventSet>> found;
  std::function<void(std::size_t, EventSet)> rec = [&](std::size_t start, EventSet used) {
    if (found) return;
    if (static_cast<int>(current.size()) == s) {
      if (violates(current)) found = current;
      return;
    }
    for (std::size_t i = start; i < family.size() && !found; ++i) {
      if (!family[i].disjoint(used)) continue;
      current.push_back(family[i]);
      rec(i + 1, used | family[i]);
      current.pop_back();
    }
  };
  if (!family.empty()) rec(0, EventSet::empty(family.front().universe_size()));
  return found;
}

}  // namespace

PropertyReport check_conjectured(const NeighborhoodModel& m, const Threshold& c,
                                 const BruteForceBudget& budget) {
  if (c.value() < Rational(1, 2))
    throw Error(ErrorCode::BadThreshold, "conjectured conditions need c >= 1/2");
  const ScottRatio ratio = scott_ratio(c);
  const std::string sc_name = std::string(ratio.exact() ? "sc0^" : "sc1^") + std::to_string(ratio.s);
  Verdict scv{sc_name, true, std::nullopt};
  Verdict ws{"ws", true, std::nullopt};
  for (int cell = 0; cell < m.frame().cell_count(); ++cell) {
    check_cell_budget(m, cell, budget);
    const EventSet& cs = m.frame().cells()[cell];
    const auto unrefuted = minimal_unrefuted(m, cell);
    if (scv.holds) {
      std::optional<EventSet> bad_y;
      auto hit = find_disjoint_family(unrefuted, ratio.s, [&](const std::vector<EventSet>& xs) {
        EventSet u = EventSet::empty(cs.universe_size());
        for (const auto& x : xs) u = u | x;
        if (!ratio.exact()) {
          if (m.is_neighborhood_in_cell(cell, u)) return false;
          bad_y = u;
          return true;
        }
        bool bad = false;
        (cs - u).for_each([&](int v) {
          if (!bad && !m.is_neighborhood_in_cell(cell, u.with(v))) {
            bad = true;
            bad_y = u.with(v);
          }
        });
        return bad;
      });
      if (hit) {
        Witness w{cell, {*bad_y}, *hit, {}, ratio.exact() ? "proper superset of the union is not a neighborhood"
                                                          : "union is not a neighborhood"};
        scv = fails(sc_name, w);
      }
    }
    if (ws.holds) {
      const auto gens = m.generators(cell);
      const auto ys = maximal_non_neighborhoods(m, cell);
      for (int k = 1; k <= budget.m_max && ws.holds; ++k) {
        if (auto w = counting_search(cs, cell, k, gens, gens, ys, budget.max_work)) ws = fails("ws", *w);
      }
    }
  }
  PropertyReport report;
  report.verdicts = {scv, ws};
  return report;
}

bool confirms_violation(const NeighborhoodModel& m, const Verdict& v) {
  if (v.holds || !v.witness) return false;
  const Witness& w = *v.witness;
  if (w.cell < 0 || w.cell >= m.frame().cell_count()) return false;
  const EventSet& c = m.frame().cells()[w.cell];
  auto in_n = [&](const EventSet& x) { return x.subset_of(c) && m.is_neighborhood_in_cell(w.cell, x); };
  const std::string& p = v.property;
  if (p == "d") return w.sets.size() == 2 && in_n(w.sets[0]) && w.sets[1] == c - w.sets[0] && in_n(w.sets[1]);
  if (p == "sc")
    return w.sets.size() == 2 && w.sets[0].proper_subset_of(w.sets[1]) && w.sets[1].subset_of(c) &&
           !in_n(c - w.sets[0]) && !in_n(w.sets[1]);
  if (p == "scott") return is_scott_violation(m, w.cell, w.xs, w.ys);
  if (p == "ws") return is_ws_violation(m, w.cell, w.xs, w.ys);
  if (p.rfind("sc0^", 0) == 0 || p.rfind("sc1^", 0) == 0) {
    EventSet u = EventSet::empty(c.universe_size());
    for (std::size_t i = 0; i < w.xs.size(); ++i) {
      if (!w.xs[i].subset_of(c) || in_n(c - w.xs[i])) return false;
      for (std::size_t j = i + 1; j < w.xs.size(); ++j)
        if (!w.xs[i].disjoint(w.xs[j])) return false;
      u = u | w.xs[i];
    }
    if (w.sets.size() != 1 || in_n(w.sets[0]) || !w.sets[0].subset_of(c)) return false;
    return p[2] == '0' ? u.proper_subset_of(w.sets[0]) : u == w.sets[0];
  }
  return confirms_violation(to_raw(m), v);
}

bool confirms_violation(const RawNeighborhoodSystem& raw, const Verdict& v) {
  if (v.holds || !v.witness) return false;
  PropertyReport again = check_base_properties(raw);
  const Verdict* r = again.find(v.property);
  return r != nullptr && !r->holds;
}

}  // namespace betlogic
