#include "betlogic/probability_model.hpp"

#include <utility>

#include "betlogic/error.hpp"

namespace betlogic {

ProbabilityModel::ProbabilityModel(Frame frame, std::vector<Rational> weights)
    : frame_(std::move(frame)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.size()) != frame_.size())
    throw Error(ErrorCode::InvalidModel, "expected one weight per world");
  Rational total;
  for (int w = 0; w < frame_.size(); ++w) {
    if (weights_[w].sign() <= 0)
      throw Error(ErrorCode::ZeroOrNegativeWeight, "world '" + frame_.world_name(w) +
                                                       "' has non-positive weight " +
                                                       weights_[w].str());
    total += weights_[w];
  }
  if (total != Rational(1))
    throw Error(ErrorCode::WeightsNotNormalized, "weights sum to " + total.str() + ", not 1");
  for (const auto& cell : frame_.cells()) cell_mass_.push_back(probability(cell));
}

Rational ProbabilityModel::probability(const EventSet& x) const {
  Rational sum;
  x.for_each([&](int w) { sum += weights_[w]; });
  return sum;
}

Rational ProbabilityModel::conditional_probability(int world, const EventSet& x) const {
  const int c = frame_.cell_index(world);
  return probability(x & frame_.cells()[c]) / cell_mass_[c];
}

ProbabilityModel make_probability_model(Frame frame, const std::map<std::string, Rational>& weights) {
  std::vector<Rational> by_index(frame.size());
  std::vector<bool> seen(frame.size(), false);
  for (const auto& [name, value] : weights) {
    const int w = frame.world_index(name);
    by_index[w] = value;
    seen[w] = true;
  }
  for (int w = 0; w < frame.size(); ++w) {
    if (!seen[w])
      throw Error(ErrorCode::InvalidModel, "no weight given for world '" + frame.world_name(w) + "'");
  }
  return ProbabilityModel(std::move(frame), std::move(by_index));
}

Rational conditional_probability(const ProbabilityModel& m, int world, const EventSet& x) {
  return m.conditional_probability(world, x);
}

Rational conditional_probability(const ProbabilityModel& m, const std::string& world,
                                 const std::vector<std::string>& x) {
  return m.conditional_probability(m.frame().world_index(world), m.frame().set_of(x));
}

ProbabilityModel bayesian_update(const ProbabilityModel& m, const EventSet& x) {
  const Frame& f = m.frame();
  if ((x & f.universe()).is_empty())
    throw Error(ErrorCode::EmptyUpdate, "update by the empty event");
  const std::vector<int> kept = x.members();
  const int n = static_cast<int>(kept.size());
  std::vector<int> new_index(f.size(), -1);
  for (int i = 0; i < n; ++i) new_index[kept[i]] = i;

  auto restrict = [&](const EventSet& s) {
    std::uint64_t bits = 0;
    (s & x).for_each([&](int w) { bits |= std::uint64_t{1} << new_index[w]; });
    return EventSet(n, bits);
  };

  std::vector<std::string> worlds;
  for (int w : kept) worlds.push_back(f.world_name(w));
  std::vector<EventSet> cells;
  for (const auto& cell : f.cells()) {
    EventSet r = restrict(cell);
    if (!r.is_empty()) cells.push_back(r);
  }
  std::map<std::string, EventSet> atoms;
  for (const auto& [name, ext] : f.atoms()) atoms.emplace(name, restrict(ext));

  const Rational mass = m.probability(x);
  std::vector<Rational> weights;
  for (int w : kept) weights.push_back(m.weight(w) / mass);
  return ProbabilityModel(Frame(std::move(worlds), std::move(cells), std::move(atoms)),
                          std::move(weights));
}

}  // namespace betlogic
