#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "betlogic/formula.hpp"
#include "betlogic/neighborhood_model.hpp"

namespace betlogic {

/// Bare neighborhood structure over worlds 0..n-1: cells and per-cell
/// minimal generators as bit masks. Used by the exhaustive searches.
struct NbhdStructure {
  int n = 0;
  std::vector<std::uint64_t> cells;
  std::vector<std::vector<std::uint64_t>> generators;
  std::vector<int> cell_of;  // world -> cell
};

NbhdStructure structure_of(const NeighborhoodModel& m);

/// Model with worlds w1..wn and the given atom extensions (bit masks).
NeighborhoodModel model_of(const NbhdStructure& s, const std::map<std::string, std::uint64_t>& atoms);

/// Knowledge/belief formula compiled to straight-line bitset code.
class CompiledKB {
 public:
  explicit CompiledKB(const FormulaKB& f);

  /// Atom names in sorted order; `atom_ext[i]` gives the extension of atoms()[i].
  const std::vector<std::string>& atoms() const { return atoms_; }
  std::uint64_t extension(const NbhdStructure& s, const std::uint64_t* atom_ext) const;

 private:
  enum class Op : std::uint8_t { Top, Atom, Not, And, Know, Believe };
  struct Instr {
    Op op;
    int a;
    int b;
  };
  std::vector<Instr> code_;
  std::vector<std::string> atoms_;
};

/// Every epistemic neighborhood structure on exactly n worlds (n <= 5), in
/// canonical order: partitions by restricted growth string, then per-cell
/// antichains. With `mid_only`, structures failing (d), (sc), or (scott)
/// up to m_max are skipped. Returning false from `visit` stops the walk;
/// the function then returns false.
bool for_each_nbhd_structure(int n, bool mid_only, int m_max,
                             const std::function<bool(const NbhdStructure&)>& visit);

/// Same walk restricted to one partition of {0..n-1}.
bool for_each_structure_on_partition(int n, const std::vector<EventSet>& partition, bool mid_only,
                                     int m_max,
                                     const std::function<bool(const NbhdStructure&)>& visit);

}  // namespace betlogic
