#include "betlogic/io.hpp"

namespace betlogic::corpus {

namespace {

Frame horse_frame(const std::vector<std::vector<std::string>>& cells) {
  return Frame({"w1", "w2", "w3"}, cells, {{"w1", {"h1"}}, {"w2", {"h2"}}, {"w3", {"h3"}}});
}

const std::vector<std::vector<std::string>> kOneCell{{"w1", "w2", "w3"}};

}  // namespace

ProbabilityModel horses() {
  return make_probability_model(horse_frame(kOneCell), {{"w1", Rational(3, 6)}, {"w2", Rational(2, 6)}, {"w3", Rational(1, 6)}});
}

ProbabilityModel horses_split() {
  return make_probability_model(horse_frame({{"w1", "w2"}, {"w3"}}),
                                {{"w1", Rational(3, 6)}, {"w2", Rational(2, 6)}, {"w3", Rational(1, 6)}});
}

ProbabilityModel horses_uniform() {
  return make_probability_model(horse_frame(kOneCell), {{"w1", Rational(1, 3)}, {"w2", Rational(1, 3)}, {"w3", Rational(1, 3)}});
}

ProbabilityModel non_closure_model(long p, long q) {
  const Rational side = Rational(q - p, 2 * q);
  return make_probability_model(horse_frame(kOneCell), {{"w1", side}, {"w2", Rational(p, q)}, {"w3", side}});
}

std::vector<std::string> walley_fine_x() { return {"efg", "abg", "adf", "bde", "ace", "cdg", "bcf"}; }

std::vector<std::string> walley_fine_y() { return {"abcd", "cdef", "bceg", "acfg", "bdfg", "abef", "adeg"}; }

NeighborhoodModel walley_fine() {
  std::vector<std::string> worlds;
  std::map<std::string, std::set<std::string>> valuation;
  for (char ch = 'a'; ch <= 'g'; ++ch) {
    worlds.emplace_back(1, ch);
    valuation[worlds.back()] = {worlds.back()};
  }
  Frame frame(worlds, {worlds}, valuation);
  std::vector<EventSet> gens;
  for (const auto& x : walley_fine_x()) {
    std::vector<std::string> members;
    for (char ch : x) members.emplace_back(1, ch);
    gens.push_back(frame.set_of(members));
  }
  return NeighborhoodModel(frame, {gens});
}

}  // namespace betlogic::corpus
