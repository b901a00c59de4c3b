#include <numeric>
#include <set>

#include "betlogic/enumerate.hpp"
#include "betlogic/io.hpp"
#include "betlogic/neighborhood_model.hpp"
#include "betlogic/probability_model.hpp"
#include "betlogic/random.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace betlogic;

TEST_CASE("rationals are canonical") {
  const Rational r(6, -8);
  CHECK(r.numerator() == "-3");
  CHECK(r.denominator() == "4");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(4, 2).fraction_str() == "2/1");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "--1", "1/-2", "a"}) {
    CHECK_THROWS_AS(Rational::parse(bad), SyntaxError);
  }
  CHECK(Rational(7, 3).ceil() == Rational(3));
  CHECK(Rational(-7, 3).ceil() == Rational(-2));
  CHECK(Rational(6, 3).ceil() == Rational(2));
}

TEST_CASE("rational arithmetic matches integer cross-multiplication") {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const long a = rng.range(-50, 50), b = rng.range(1, 40), c = rng.range(-50, 50), d = rng.range(1, 40);
    const Rational x(a, b), y(c, d);
    CHECK(x + y == Rational(a * d + c * b, b * d));
    CHECK(x * y == Rational(a * c, b * d));
    CHECK(x - y == Rational(a * d - c * b, b * d));
    CHECK((x < y) == (a * d < c * b));
    const long g = std::gcd(std::abs(a), b);
    CHECK(x.numerator() == std::to_string(a / g));
    CHECK(x.denominator() == std::to_string(b / g));
  }
}

TEST_CASE("event sets agree with std::set") {
  Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    const int n = rng.range(1, 64);
    std::set<int> a, b;
    std::vector<int> av, bv;
    for (int k = 0; k < n; ++k) {
      if (rng.coin()) a.insert(k), av.push_back(k);
      if (rng.coin()) b.insert(k), bv.push_back(k);
    }
    const EventSet x = EventSet::of(n, av), y = EventSet::of(n, bv);
    std::set<int> uni, inter, diff, comp;
    for (int k = 0; k < n; ++k) {
      if (a.count(k) || b.count(k)) uni.insert(k);
      if (a.count(k) && b.count(k)) inter.insert(k);
      if (a.count(k) && !b.count(k)) diff.insert(k);
      if (!a.count(k)) comp.insert(k);
    }
    auto as_set = [](const EventSet& e) {
      const auto m = e.members();
      return std::set<int>(m.begin(), m.end());
    };
    CHECK(as_set(x | y) == uni);
    CHECK(as_set(x & y) == inter);
    CHECK(as_set(x - y) == diff);
    CHECK(as_set(x.complement()) == comp);
    CHECK(x.count() == static_cast<int>(a.size()));
    CHECK(x.subset_of(y) == std::includes(b.begin(), b.end(), a.begin(), a.end()));
    CHECK(x.disjoint(y) == inter.empty());
  }
  CHECK(code_of([] { EventSet::empty(65); }) == ErrorCode::UniverseTooLarge);
}

TEST_CASE("frame validation") {
  const std::vector<std::string> w{"a", "b", "c"};
  CHECK(code_of([&] { Frame(w, {{"a", "b"}, {"b", "c"}}, {}); }) == ErrorCode::BadPartition);
  CHECK(code_of([&] { Frame(w, {{"a", "b"}}, {}); }) == ErrorCode::BadPartition);
  CHECK(code_of([&] { Frame(w, {{"a", "b", "c"}, {}}, {}); }) == ErrorCode::BadPartition);
  CHECK(code_of([&] { Frame(w, {{"a", "b", "z"}}, {}); }) == ErrorCode::UnknownWorld);
  CHECK(code_of([&] { Frame({"a", "a"}, {{"a"}}, {}); }) == ErrorCode::InvalidModel);
  CHECK(code_of([&] { Frame(w, {{"a", "b", "c"}}, {{"z", {"p"}}}); }) == ErrorCode::UnknownWorld);
  const Frame f(w, {{"c"}, {"b", "a"}}, {{"a", {"p"}}, {"c", {"p", "q"}}});
  CHECK(f.cell_count() == 2);
  CHECK(f.format_set(f.cells()[0]) == "{a, b}");
  CHECK(f.format_set(f.cell_of(2)) == "{c}");
  CHECK(f.format_set(f.atom_extension("p")) == "{a, c}");
  CHECK(f.atom_extension("zzz").is_empty());
}

TEST_CASE("probability model construction") {
  const ProbabilityModel m = corpus::horses();
  CHECK(m.weight(0) == Rational(1, 2));
  CHECK(m.weight(1) == Rational(1, 3));
  const Frame f = m.frame();
  CHECK(code_of([&] { make_probability_model(f, {{"w1", 1}, {"w2", 0}, {"w3", 0}}); }) ==
        ErrorCode::ZeroOrNegativeWeight);
  CHECK(code_of([&] { make_probability_model(f, {{"w1", Rational(1, 2)}, {"w2", Rational(1, 2)}, {"w3", Rational(1, 2)}}); }) ==
        ErrorCode::WeightsNotNormalized);
  CHECK(code_of([&] { make_probability_model(f, {{"w1", Rational(1, 2)}, {"w2", Rational(1, 2)}}); }).has_value());
  const Frame one({"w"}, {{"w"}}, {});
  CHECK(make_probability_model(one, {{"w", 1}}).weight(0) == Rational(1));
}

TEST_CASE("conditional probability on the horse examples") {
  CHECK(conditional_probability(corpus::horses(), "w1", {"w1", "w3"}) == Rational(2, 3));
  CHECK(conditional_probability(corpus::horses_split(), "w1", {"w3"}) == Rational(0));
  CHECK(conditional_probability(corpus::horses_split(), "w1", {"w1"}) == Rational(3, 5));
  const ProbabilityModel m = corpus::horses_split();
  for (int w = 0; w < 3; ++w) CHECK(m.conditional_probability(w, m.frame().cell_of(w)) == Rational(1));
}

TEST_CASE("conditional probability invariants on random models") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const ProbabilityModel m = random_probability_model(rng);
    const int n = m.frame().size();
    for (int t = 0; t < 10; ++t) {
      const EventSet x(n, rng.below(1ULL << n)), y(n, rng.below(1ULL << n));
      const EventSet y_only = y - x;
      for (int w = 0; w < n; ++w) {
        const Rational px = m.conditional_probability(w, x);
        CHECK(px >= Rational(0));
        CHECK(px <= Rational(1));
        CHECK(m.conditional_probability(w, x | y_only) == px + m.conditional_probability(w, y_only));
        // oracle: recompute from raw weights
        Rational num, den;
        for (int v = 0; v < n; ++v) {
          if (m.frame().cell_index(v) != m.frame().cell_index(w)) continue;
          den += m.weight(v);
          if (x.contains(v)) num += m.weight(v);
        }
        CHECK(px == num / den);
        for (int v = 0; v < n; ++v) {
          if (m.frame().cell_index(v) == m.frame().cell_index(w)) CHECK(m.conditional_probability(v, x) == px);
        }
      }
    }
  }
}

TEST_CASE("bayesian update") {
  const ProbabilityModel m = corpus::horses();
  const ProbabilityModel u = bayesian_update(m, m.frame().set_of({"w1", "w2"}));
  CHECK(u.frame().worlds() == std::vector<std::string>{"w1", "w2"});
  CHECK(u.weight(0) == Rational(3, 5));
  CHECK(u.weight(1) == Rational(2, 5));
  CHECK(bayesian_update(m, m.frame().universe()) == m);
  CHECK(code_of([&] { bayesian_update(m, m.frame().empty_set()); }) == ErrorCode::EmptyUpdate);

  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const ProbabilityModel p = random_probability_model(rng);
    const int n = p.frame().size();
    const EventSet x(n, rng.below(1ULL << n));
    if (x.is_empty()) continue;
    const ProbabilityModel q = bayesian_update(p, x);
    const auto members = x.members();
    CHECK(q.frame().size() == x.count());
    const Rational px = p.probability(x);
    for (int k = 0; k < q.frame().size(); ++k) CHECK(q.weight(k) == p.weight(members[k]) / px);
    for (const auto& [name, ext] : q.frame().atoms()) {
      for (int k = 0; k < q.frame().size(); ++k) CHECK(ext.contains(k) == p.frame().atom_extension(name).contains(members[k]));
    }
  }
}

TEST_CASE("neighborhood model validation and closure") {
  const Frame f({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"d"}}, {});
  const EventSet ab = f.set_of({"a", "b"}), a = f.set_of({"a"}), d = f.set_of({"d"});
  CHECK(code_of([&] { NeighborhoodModel(f, {{ab}}); }) == ErrorCode::InvalidModel);
  CHECK(code_of([&] { NeighborhoodModel(f, {{ab}, {}}); }) == ErrorCode::InvalidModel);
  CHECK(code_of([&] { NeighborhoodModel(f, {{ab}, {f.empty_set()}}); }) == ErrorCode::InvalidModel);
  CHECK(code_of([&] { NeighborhoodModel(f, {{ab | d}, {d}}); }) == ErrorCode::InvalidModel);
  const NeighborhoodModel m(f, {{ab, a}, {d}});
  CHECK(m.generators(0) == std::vector<EventSet>{a});
  CHECK(m.is_neighborhood(1, f.set_of({"a", "c"})));
  CHECK_FALSE(m.is_neighborhood(1, f.set_of({"b", "c"})));
  CHECK_FALSE(m.is_neighborhood(1, f.set_of({"a", "d"})));
}

TEST_CASE("upward closure agrees with explicit closure") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.range(1, 12);
    std::vector<std::string> worlds;
    for (int i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i));
    const Frame f(worlds, {worlds}, {});
    std::vector<EventSet> gens;
    const int k = rng.range(1, 4);
    for (int i = 0; i < k; ++i) {
      EventSet g(n, rng.below(1ULL << n));
      if (g.is_empty()) g = f.universe();
      gens.push_back(g);
    }
    const NeighborhoodModel m(f, {gens});
    // closure by repeatedly adding one world to known members
    std::vector<char> in(1ULL << n, 0);
    std::vector<std::uint64_t> frontier;
    for (const auto& g : gens) {
      if (!in[g.bits()]) in[g.bits()] = 1, frontier.push_back(g.bits());
    }
    while (!frontier.empty()) {
      const std::uint64_t x = frontier.back();
      frontier.pop_back();
      for (int v = 0; v < n; ++v) {
        const std::uint64_t y = x | (1ULL << v);
        if (!in[y]) in[y] = 1, frontier.push_back(y);
      }
    }
    std::size_t total = 0;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
      CHECK(m.is_neighborhood_in_cell(0, EventSet(n, x)) == static_cast<bool>(in[x]));
      total += in[x];
    }
    CHECK(m.closure(0).size() == total);
  }
}

TEST_CASE("enumeration counts") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) CHECK(set_partitions(n).size() == bell[n]);
  // Dedekind numbers minus the two antichains that are empty or contain ∅.
  const std::size_t dedekind[] = {2, 3, 6, 20, 168};
  for (int n = 1; n <= 4; ++n) {
    CHECK(nonempty_antichains(EventSet::full(n)).size() == dedekind[n] - 2);
  }
  int visits = 0;
  CHECK(for_each_product({2, 3}, [&](const std::vector<int>&) { return ++visits < 4; }) == false);
  CHECK(visits == 4);
}

TEST_CASE("seeded generators are reproducible") {
  Rng a(99), b(99);
  for (int i = 0; i < 20; ++i) CHECK(random_probability_model(a) == random_probability_model(b));
  Rng c(7);
  for (int i = 0; i < 200; ++i) {
    const ProbabilityModel m = random_probability_model(c);
    CHECK(m.frame().size() >= 1);
    CHECK(m.frame().size() <= 6);
    for (const auto& w : m.weights()) CHECK(Rational::parse(w.denominator()) <= Rational(64));
  }
}
