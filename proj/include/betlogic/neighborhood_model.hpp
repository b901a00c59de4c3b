#pragma once

#include <vector>

#include "betlogic/frame.hpp"

namespace betlogic {

/// Frame plus, for each cell, the minimal sets whose upward closure within
/// the cell is the neighborhood system shared by every world of the cell.
class NeighborhoodModel {
 public:
  /// `generators[c]` belongs to cell c. Each generator must be a nonempty
  /// subset of its cell and each cell needs at least one. Non-minimal
  /// generators are dropped; the rest are sorted canonically.
  NeighborhoodModel(Frame frame, std::vector<std::vector<EventSet>> generators);

  const Frame& frame() const { return frame_; }
  const std::vector<std::vector<EventSet>>& generators() const { return generators_; }
  const std::vector<EventSet>& generators(int cell) const { return generators_.at(cell); }

  /// Is X (already intersected with the cell) a neighborhood of the cell?
  bool is_neighborhood_in_cell(int cell, const EventSet& x) const;
  /// X ∈ N(w); X is not intersected with [w] first.
  bool is_neighborhood(int world, const EventSet& x) const;

  /// Every neighborhood of the cell, canonical order.
  std::vector<EventSet> closure(int cell) const;

  friend bool operator==(const NeighborhoodModel& a, const NeighborhoodModel& b) {
    return a.frame_ == b.frame_ && a.generators_ == b.generators_;
  }

 private:
  Frame frame_;
  std::vector<std::vector<EventSet>> generators_;
};

/// Minimal elements of a family of sets, canonical order, duplicates removed.
std::vector<EventSet> minimal_elements(std::vector<EventSet> family);
/// Maximal elements of a family of sets, canonical order, duplicates removed.
std::vector<EventSet> maximal_elements(std::vector<EventSet> family);

/// An unvalidated per-world neighborhood function, used to exercise the
/// property checker on systems that violate the model conditions.
struct RawNeighborhoodSystem {
  Frame frame;
  std::vector<std::vector<EventSet>> families;  // indexed by world
};

RawNeighborhoodSystem to_raw(const NeighborhoodModel& m);

}  // namespace betlogic
