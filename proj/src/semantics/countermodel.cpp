#include <bit>

#include "betlogic/enumerate.hpp"
#include "betlogic/enumeration.hpp"
#include "betlogic/error.hpp"
#include "betlogic/random.hpp"
#include "betlogic/semantics.hpp"

namespace betlogic {

CountermodelResult find_nbhd_countermodel(const FormulaKB& f, int max_worlds,
                                          bool require_mid_threshold, int scott_m_max) {
  if (max_worlds < 1 || max_worlds > 5)
    throw Error(ErrorCode::BoundTooLarge, "countermodel search supports 1 to 5 worlds");
  const CompiledKB code(f);
  const int k = static_cast<int>(code.atoms().size());
  if (k > 3) throw Error(ErrorCode::BoundTooLarge, "countermodel search supports at most 3 atoms");

  CountermodelResult result;
  std::vector<std::uint64_t> ext(k, 0);
  for (int n = 1; n <= max_worlds; ++n) {
    const std::uint64_t all = EventSet::mask(n);
    const std::uint64_t valuations = std::uint64_t{1} << (n * k);
    for (const auto& partition : set_partitions(n)) {
      for (std::uint64_t val = 0; val < valuations; ++val) {
        for (int j = 0; j < k; ++j) ext[j] = (val >> (j * n)) & all;
        const bool exhausted = for_each_structure_on_partition(
            n, partition, require_mid_threshold, scott_m_max, [&](const NbhdStructure& s) {
              ++result.models_checked;
              const std::uint64_t truth = code.extension(s, ext.data());
              if (truth == all) return true;
              std::map<std::string, std::uint64_t> atoms;
              for (int j = 0; j < k; ++j) atoms[code.atoms()[j]] = ext[j];
              result.found = true;
              result.nbhd_model = model_of(s, atoms);
              result.world = std::countr_zero(~truth & all);
              return false;
            });
        if (!exhausted) return result;
      }
    }
  }
  result.bound = "all " + std::string(require_mid_threshold ? "mid-threshold " : "") +
                 "epistemic neighborhood models with at most " + std::to_string(max_worlds) +
                 " worlds";
  return result;
}

CountermodelResult sample_prob_countermodel(const FormulaKB& f, const Threshold& c, int trials,
                                            int max_worlds, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::BoundTooLarge, "at least one trial is required");
  if (max_worlds < 1 || max_worlds > 64)
    throw Error(ErrorCode::BoundTooLarge, "sampled models need 1 to 64 worlds");
  Rng rng(seed);
  RandomModelSpec spec;
  spec.max_worlds = max_worlds;
  const auto atoms = f.atoms();
  spec.atoms.assign(atoms.begin(), atoms.end());
  CountermodelResult result;
  for (int t = 0; t < trials; ++t) {
    ProbabilityModel m = random_probability_model(rng, spec);
    ++result.models_checked;
    const EventSet truth = extension_kb(m, f, c);
    if (truth != m.frame().universe()) {
      result.found = true;
      result.world = (truth.complement()).members().front();
      result.prob_model = std::move(m);
      return result;
    }
  }
  result.bound = std::to_string(trials) + " sampled probability models with at most " +
                 std::to_string(max_worlds) + " worlds (seed " + std::to_string(seed) + ")";
  return result;
}

}  // namespace betlogic
