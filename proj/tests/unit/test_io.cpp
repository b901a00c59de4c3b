#include <string>

#include "betlogic/io.hpp"
#include "betlogic/random.hpp"
#include "betlogic/semantics.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace betlogic;

namespace {

std::string what_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

const char* kGood = R"({"kind": "probability", "worlds": ["a", "b"], "partition": [["a", "b"]],
  "valuation": {"a": ["p"]}, "weights": {"a": "1/4", "b": "3/4"}})";

}  // namespace

TEST_CASE("probability model round trip") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const ProbabilityModel p = random_probability_model(rng);
    const std::string text = save_model(p);
    const AnyModel back = load_model(text);
    REQUIRE(std::holds_alternative<ProbabilityModel>(back));
    CHECK(std::get<ProbabilityModel>(back) == p);
    CHECK(save_model(std::get<ProbabilityModel>(back)) == text);
  }
}

TEST_CASE("neighborhood model round trip") {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const ProbabilityModel p = random_probability_model(rng);
    const NeighborhoodModel m = derive_neighborhoods(p, Threshold(Rational(rng.range(1, 9), 10)));
    const std::string text = save_model(m);
    const NeighborhoodModel back = load_neighborhood_model(text);
    CHECK(back == m);
    CHECK(save_model(back) == text);
  }
  const NeighborhoodModel wf = corpus::walley_fine();
  CHECK(load_neighborhood_model(save_model(wf)) == wf);
}

TEST_CASE("stored models match the builtin corpus") {
  const std::string dir = BETLOGIC_DATA_DIR "/models/";
  CHECK(load_probability_model(read_file(dir + "horses1.json")) == corpus::horses());
  CHECK(load_probability_model(read_file(dir + "horses2.json")) == corpus::horses_split());
  CHECK(load_probability_model(read_file(dir + "horses3.json")) == corpus::horses_uniform());
  CHECK(load_neighborhood_model(read_file(dir + "walley-fine.json")) == corpus::walley_fine());
}

TEST_CASE("model loading errors") {
  const ProbabilityModel good = load_probability_model(kGood);
  CHECK(good.weight(1) == Rational(3, 4));

  auto load = [](std::string text) { return [text] { load_model(text, "m.json"); }; };
  CHECK(code_of(load("{")) == ErrorCode::Io);
  CHECK(code_of(load("[]")) == ErrorCode::Io);
  CHECK(code_of(load(R"({"kind": "other"})")) == ErrorCode::Io);
  std::string zero = kGood;
  zero.replace(zero.find("\"1/4\""), 5, "\"0\"");
  CHECK(code_of(load(zero)) == ErrorCode::ZeroOrNegativeWeight);
  std::string unnormalized = kGood;
  unnormalized.replace(unnormalized.find("\"1/4\""), 5, "\"1/2\"");
  CHECK(code_of(load(unnormalized)) == ErrorCode::WeightsNotNormalized);
  std::string bad_partition = kGood;
  bad_partition.replace(bad_partition.find("[[\"a\", \"b\"]]"), 12, "[[\"a\"]]");
  CHECK(code_of(load(bad_partition)) == ErrorCode::BadPartition);
  std::string bad_weight = kGood;
  bad_weight.replace(bad_weight.find("\"1/4\""), 5, "\"x\"");
  CHECK(code_of(load(bad_weight)) != std::nullopt);
  const std::string msg = what_of(load(bad_weight));
  CHECK(msg.find("m.json") != std::string::npos);
  CHECK(msg.find("/weights/a") != std::string::npos);

  const std::string nb = R"({"kind": "neighborhood", "worlds": ["a", "b"], "partition": [["a"], ["b"]],
    "valuation": {}, "generators": [["a", "b"]]})";
  CHECK(code_of([&] { load_model(nb); }) != std::nullopt);
  CHECK(code_of([&] { load_probability_model(R"({"kind": "neighborhood"})"); }) == ErrorCode::Io);
  CHECK(code_of([] { read_file("/nonexistent/model.json"); }) == ErrorCode::Io);
  CHECK(code_of([] { load_model_file("/nonexistent/model.json"); }) == ErrorCode::Io);
}

TEST_CASE("comparative statements") {
  const std::vector<std::string> worlds{"a", "b", "c", "d", "e"};
  const ComparativeRelation rel = parse_comparative("# kps\nc < a b\nb d<a c\n{} <= e\na = b\n", worlds);
  REQUIRE(rel.statements.size() == 4);
  CHECK(rel.worlds == worlds);
  CHECK(rel.statements[0].x == EventSet::of(5, {2}));
  CHECK(rel.statements[0].rel == Comparison::Less);
  CHECK(rel.statements[0].y == EventSet::of(5, {0, 1}));
  CHECK(rel.statements[1].x == EventSet::of(5, {1, 3}));
  CHECK(rel.statements[2].x == EventSet::empty(5));
  CHECK(rel.statements[2].rel == Comparison::LessEq);
  CHECK(rel.statements[3].rel == Comparison::Equiv);

  const std::string kps = read_file(BETLOGIC_DATA_DIR "/comparative/kps.txt");
  const ComparativeRelation stored = parse_comparative(kps, worlds);
  const ComparativeRelation builtin = kps_statements();
  REQUIRE(stored.statements.size() == builtin.statements.size());
  for (std::size_t i = 0; i < stored.statements.size(); ++i) {
    CHECK(stored.statements[i].x == builtin.statements[i].x);
    CHECK(stored.statements[i].y == builtin.statements[i].y);
    CHECK(stored.statements[i].rel == builtin.statements[i].rel);
  }

  CHECK(code_of([&] { parse_comparative("a < z", worlds); }) == ErrorCode::UnknownWorld);
  CHECK(code_of([&] { parse_comparative("a b", worlds); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_comparative("a < b < c", worlds); }) == ErrorCode::SyntaxError);
}
