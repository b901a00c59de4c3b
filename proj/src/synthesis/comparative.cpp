#include <bit>

#include "betlogic/error.hpp"
#include "betlogic/synthesis.hpp"

namespace betlogic {

namespace {

std::map<std::string, Rational> difference(const std::vector<std::string>& worlds, const EventSet& plus,
                                           const EventSet& minus) {
  std::map<std::string, Rational> coef;
  plus.for_each([&](int v) { coef[worlds[v]] += Rational(1); });
  minus.for_each([&](int v) { coef[worlds[v]] -= Rational(1); });
  return coef;
}

}  // namespace

LPResult realize_comparative(const ComparativeRelation& rel, bool full_support) {
  std::vector<LinearConstraint> system;
  const int n = static_cast<int>(rel.worlds.size());
  std::map<std::string, Rational> all;
  for (const auto& w : rel.worlds) all[w] = Rational(1);
  system.push_back(LinearConstraint::eq(all, Rational(1)));
  if (full_support) {
    for (const auto& w : rel.worlds) system.push_back(LinearConstraint::gt({{w, Rational(1)}}, Rational(0)));
  }
  for (const auto& s : rel.statements) {
    if (s.x.universe_size() != n || s.y.universe_size() != n)
      throw Error(ErrorCode::InvalidModel, "comparative statement over the wrong universe");
    auto coef = difference(rel.worlds, s.y, s.x);  // P(Y) - P(X)
    switch (s.rel) {
      case Comparison::Less: system.push_back(LinearConstraint::gt(coef, Rational(0))); break;
      case Comparison::LessEq: system.push_back(LinearConstraint::geq(coef, Rational(0))); break;
      case Comparison::Equiv: system.push_back(LinearConstraint::eq(coef, Rational(0))); break;
    }
  }
  return lp_feasible(system, rel.worlds);
}

ComparisonTable::ComparisonTable(int n) : n_(n) {
  if (n < 0 || n > 5) throw Error(ErrorCode::UniverseTooLarge, "comparison tables support at most 5 worlds");
  table_.assign(std::size_t{1} << (2 * n), 0);
}

ComparisonTable induced_table(const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  ComparisonTable t(n);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<Rational> mass(subsets);
  for (std::uint64_t x = 0; x < subsets; ++x) {
    for (int i = 0; i < n; ++i) {
      if ((x >> i) & 1U) mass[x] += weights[i];
    }
  }
  for (std::uint64_t x = 0; x < subsets; ++x) {
    for (std::uint64_t y = 0; y < subsets; ++y) t.set_leq(x, y, mass[x] <= mass[y]);
  }
  return t;
}

PropertyReport check_definetti(const ComparisonTable& t) {
  const int n = t.size();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const std::uint64_t full = subsets - 1;
  auto set = [&](std::uint64_t b) { return EventSet(n, b); };
  PropertyReport report;

  Verdict nontrivial{"nontrivial", true, std::nullopt};
  if (t.leq(full, 0)) nontrivial = Verdict{"nontrivial", false, Witness{-1, {set(full), set(0)}, {}, {}, "W is below the empty set"}};

  Verdict nonneg{"nonnegative", true, std::nullopt};
  for (std::uint64_t x = 0; x < subsets && nonneg.holds; ++x) {
    if (!t.leq(0, x)) nonneg = Verdict{"nonnegative", false, Witness{-1, {set(x)}, {}, {}, "empty set not below X"}};
  }

  Verdict total{"total", true, std::nullopt};
  for (std::uint64_t x = 0; x < subsets && total.holds; ++x) {
    for (std::uint64_t y = 0; y < subsets && total.holds; ++y) {
      if (!t.leq(x, y) && !t.leq(y, x))
        total = Verdict{"total", false, Witness{-1, {set(x), set(y)}, {}, {}, "incomparable pair"}};
    }
  }

  Verdict transitive{"transitive", true, std::nullopt};
  for (std::uint64_t x = 0; x < subsets && transitive.holds; ++x) {
    for (std::uint64_t y = 0; y < subsets && transitive.holds; ++y) {
      if (!t.leq(x, y)) continue;
      for (std::uint64_t z = 0; z < subsets; ++z) {
        if (t.leq(y, z) && !t.leq(x, z)) {
          transitive = Verdict{"transitive", false, Witness{-1, {set(x), set(y), set(z)}, {}, {}, "X ⪯ Y ⪯ Z but not X ⪯ Z"}};
          break;
        }
      }
    }
  }

  Verdict additive{"additive", true, std::nullopt};
  for (std::uint64_t x = 0; x < subsets && additive.holds; ++x) {
    for (std::uint64_t y = 0; y < subsets && additive.holds; ++y) {
      const std::uint64_t free = full & ~(x | y);
      for (std::uint64_t z = free;; z = (z - 1) & free) {
        if (t.leq(x, y) != t.leq(x | z, y | z)) {
          additive = Verdict{"additive", false, Witness{-1, {set(x), set(y), set(z)}, {}, {}, "adding a disjoint Z changes the comparison"}};
          break;
        }
        if (z == 0) break;
      }
    }
  }
  report.verdicts = {nontrivial, nonneg, total, transitive, additive};
  return report;
}

ComparativeRelation strict_part(const ComparisonTable& t, const std::vector<std::string>& worlds) {
  const int n = t.size();
  if (static_cast<int>(worlds.size()) != n) throw Error(ErrorCode::InvalidModel, "world list does not match table");
  ComparativeRelation rel{worlds, {}};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < subsets; ++x) {
    for (std::uint64_t y = 0; y < subsets; ++y) {
      if (t.leq(x, y) && !t.leq(y, x)) rel.statements.push_back({EventSet(n, x), Comparison::Less, EventSet(n, y)});
    }
  }
  return rel;
}

ComparativeRelation kps_statements() {
  const std::vector<std::string> w = {"a", "b", "c", "d", "e"};
  auto s = [](std::vector<int> idx) { return EventSet::of(5, idx); };
  return ComparativeRelation{w,
                             {{s({2}), Comparison::Less, s({0, 1})},
                              {s({1, 3}), Comparison::Less, s({0, 2})},
                              {s({0, 4}), Comparison::Less, s({1, 2})},
                              {s({0, 1, 2}), Comparison::Less, s({3, 4})}}};
}

KpsExtension kps_extension() {
  const ComparativeRelation kps = kps_statements();
  for (int a = 1; a <= 20; ++a) {
    for (int b = 1; b <= 20; ++b) {
      const std::vector<Rational> w = {Rational(a), Rational(b), Rational(a + b), Rational(2 * a), Rational(2 * b)};
      std::vector<Rational> mass(32);
      for (std::uint64_t x = 0; x < 32; ++x) {
        for (int i = 0; i < 5; ++i) {
          if ((x >> i) & 1U) mass[x] += w[i];
        }
      }
      // Disjoint nonempty ties must be exactly the designated pairs.
      bool generic = true;
      for (std::uint64_t x = 1; x < 32 && generic; ++x) {
        for (std::uint64_t y = 1; y < 32 && generic; ++y) {
          if ((x & y) != 0 || mass[x] != mass[y]) continue;
          bool designated = false;
          for (const auto& s : kps.statements) {
            if ((s.x.bits() == x && s.y.bits() == y) || (s.x.bits() == y && s.y.bits() == x)) designated = true;
          }
          if (!designated) generic = false;
        }
      }
      if (!generic) continue;
      ComparisonTable t(5);
      for (std::uint64_t x = 0; x < 32; ++x) {
        for (std::uint64_t y = 0; y < 32; ++y) {
          bool leq = mass[x] < mass[y] || x == y;
          if (!leq && mass[x] == mass[y]) {
            const std::uint64_t x0 = x & ~y;
            const std::uint64_t y0 = y & ~x;
            bool reversed = false;
            for (const auto& s : kps.statements) {
              if (s.x.bits() == y0 && s.y.bits() == x0) reversed = true;
            }
            leq = !reversed;
          }
          t.set_leq(x, y, leq);
        }
      }
      if (check_definetti(t).all_hold()) return KpsExtension{t, w};
    }
  }
  throw Error(ErrorCode::BoundTooLarge, "no tie-breaking extension found in the search range");
}

}  // namespace betlogic
