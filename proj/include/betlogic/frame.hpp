#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "betlogic/event_set.hpp"

namespace betlogic {

/// Worlds, their partition into information cells, and the valuation.
/// World order is declaration order; every printout follows it.
class Frame {
 public:
  Frame() = default;

  /// `cells` list world names; `valuation` maps world name to the atoms true there.
  /// Worlds missing from `valuation` make no atom true.
  Frame(std::vector<std::string> worlds, const std::vector<std::vector<std::string>>& cells,
        const std::map<std::string, std::set<std::string>>& valuation);

  /// Index-level constructor. `atoms` maps atom name to its extension.
  Frame(std::vector<std::string> worlds, std::vector<EventSet> cells,
        std::map<std::string, EventSet> atoms);

  int size() const { return static_cast<int>(worlds_.size()); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& world_name(int index) const { return worlds_.at(index); }
  /// Throws UnknownWorld.
  int world_index(const std::string& name) const;
  bool has_world(const std::string& name) const;

  const std::vector<EventSet>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  int cell_index(int world) const { return cell_of_.at(world); }
  const EventSet& cell_of(int world) const { return cells_[cell_of_.at(world)]; }

  EventSet universe() const { return EventSet::full(size()); }
  EventSet empty_set() const { return EventSet::empty(size()); }

  /// Extension of an atom; unknown atoms have the empty extension.
  EventSet atom_extension(const std::string& atom) const;
  /// Atoms with nonempty extension, keyed by name.
  const std::map<std::string, EventSet>& atoms() const { return atoms_; }
  std::set<std::string> atoms_at(int world) const;

  /// "{w1, w3}" using declaration order.
  std::string format_set(const EventSet& set) const;
  std::vector<std::string> names_of(const EventSet& set) const;
  /// Throws UnknownWorld for an undeclared name.
  EventSet set_of(const std::vector<std::string>& names) const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.worlds_ == b.worlds_ && a.cells_ == b.cells_ && a.atoms_ == b.atoms_;
  }

 private:
  void validate();

  std::vector<std::string> worlds_;
  std::vector<EventSet> cells_;
  std::vector<int> cell_of_;
  std::map<std::string, EventSet> atoms_;
};

}  // namespace betlogic
