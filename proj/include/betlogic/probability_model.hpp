#pragma once

#include <map>
#include <string>
#include <vector>

#include "betlogic/frame.hpp"
#include "betlogic/rational.hpp"

namespace betlogic {

/// Frame plus a full-support probability measure on its worlds.
class ProbabilityModel {
 public:
  /// Weights are indexed by world. Throws ZeroOrNegativeWeight or
  /// WeightsNotNormalized.
  ProbabilityModel(Frame frame, std::vector<Rational> weights);

  const Frame& frame() const { return frame_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int world) const { return weights_.at(world); }

  Rational probability(const EventSet& x) const;
  /// P(X ∩ [w]) / P([w]).
  Rational conditional_probability(int world, const EventSet& x) const;
  Rational cell_mass(int cell) const { return cell_mass_.at(cell); }

  friend bool operator==(const ProbabilityModel& a, const ProbabilityModel& b) {
    return a.frame_ == b.frame_ && a.weights_ == b.weights_;
  }

 private:
  Frame frame_;
  std::vector<Rational> weights_;
  std::vector<Rational> cell_mass_;
};

/// Weights keyed by world name; must cover exactly the frame's worlds.
ProbabilityModel make_probability_model(Frame frame, const std::map<std::string, Rational>& weights);

Rational conditional_probability(const ProbabilityModel& m, int world, const EventSet& x);
Rational conditional_probability(const ProbabilityModel& m, const std::string& world,
                                 const std::vector<std::string>& x);

/// Restricts to the worlds of X and renormalizes. Throws EmptyUpdate.
ProbabilityModel bayesian_update(const ProbabilityModel& m, const EventSet& x);

}  // namespace betlogic
