#include "betlogic/frame.hpp"

#include <algorithm>
#include <utility>

#include "betlogic/error.hpp"

namespace betlogic {

namespace {

std::map<std::string, int> index_worlds(const std::vector<std::string>& worlds) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (!index.emplace(worlds[i], static_cast<int>(i)).second)
      throw Error(ErrorCode::InvalidModel, "duplicate world '" + worlds[i] + "'");
  }
  return index;
}

int lookup(const std::map<std::string, int>& index, const std::string& name) {
  auto it = index.find(name);
  if (it == index.end()) throw Error(ErrorCode::UnknownWorld, "unknown world '" + name + "'");
  return it->second;
}

}  // namespace

Frame::Frame(std::vector<std::string> worlds, const std::vector<std::vector<std::string>>& cells,
             const std::map<std::string, std::set<std::string>>& valuation)
    : worlds_(std::move(worlds)) {
  if (worlds_.size() > static_cast<std::size_t>(kMaxWorlds))
    throw Error(ErrorCode::UniverseTooLarge, "at most 64 worlds are supported");
  const auto index = index_worlds(worlds_);
  const int n = size();
  for (const auto& cell : cells) {
    std::uint64_t bits = 0;
    for (const auto& name : cell) {
      const std::uint64_t bit = std::uint64_t{1} << lookup(index, name);
      if (bits & bit)
        throw Error(ErrorCode::BadPartition, "world '" + name + "' listed twice in a cell");
      bits |= bit;
    }
    cells_.emplace_back(n, bits);
  }
  for (const auto& [world, atoms] : valuation) {
    const int w = lookup(index, world);
    for (const auto& atom : atoms) {
      auto [it, inserted] = atoms_.try_emplace(atom, EventSet::empty(n));
      it->second = it->second.with(w);
    }
  }
  validate();
}

Frame::Frame(std::vector<std::string> worlds, std::vector<EventSet> cells,
             std::map<std::string, EventSet> atoms)
    : worlds_(std::move(worlds)), cells_(std::move(cells)), atoms_(std::move(atoms)) {
  if (worlds_.size() > static_cast<std::size_t>(kMaxWorlds))
    throw Error(ErrorCode::UniverseTooLarge, "at most 64 worlds are supported");
  index_worlds(worlds_);
  for (const auto& [name, ext] : atoms_) {
    if (ext.universe_size() != size())
      throw Error(ErrorCode::InvalidModel, "extension of atom '" + name + "' has wrong universe");
  }
  validate();
}

void Frame::validate() {
  const int n = size();
  if (n == 0) throw Error(ErrorCode::InvalidModel, "a model needs at least one world");
  for (const auto& cell : cells_) {
    if (cell.universe_size() != n)
      throw Error(ErrorCode::BadPartition, "cell has wrong universe size");
    if (cell.is_empty()) throw Error(ErrorCode::BadPartition, "partition cell is empty");
  }
  // Cells ordered by their first world.
  std::sort(cells_.begin(), cells_.end(), [](const EventSet& a, const EventSet& b) {
    return (a.bits() & -a.bits()) < (b.bits() & -b.bits());
  });
  cell_of_.assign(n, -1);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const EventSet& cell = cells_[c];
    cell.for_each([&](int w) {
      if (cell_of_[w] != -1)
        throw Error(ErrorCode::BadPartition,
                    "world '" + worlds_[w] + "' lies in more than one cell");
      cell_of_[w] = static_cast<int>(c);
    });
  }
  for (int w = 0; w < n; ++w) {
    if (cell_of_[w] == -1)
      throw Error(ErrorCode::BadPartition, "world '" + worlds_[w] + "' lies in no cell");
  }
  for (auto it = atoms_.begin(); it != atoms_.end();) {
    if (it->second.is_empty()) {
      it = atoms_.erase(it);
    } else {
      ++it;
    }
  }
}

int Frame::world_index(const std::string& name) const {
  auto it = std::find(worlds_.begin(), worlds_.end(), name);
  if (it == worlds_.end()) throw Error(ErrorCode::UnknownWorld, "unknown world '" + name + "'");
  return static_cast<int>(it - worlds_.begin());
}

bool Frame::has_world(const std::string& name) const {
  return std::find(worlds_.begin(), worlds_.end(), name) != worlds_.end();
}

EventSet Frame::atom_extension(const std::string& atom) const {
  auto it = atoms_.find(atom);
  return it == atoms_.end() ? empty_set() : it->second;
}

std::set<std::string> Frame::atoms_at(int world) const {
  std::set<std::string> out;
  for (const auto& [name, ext] : atoms_) {
    if (ext.contains(world)) out.insert(name);
  }
  return out;
}

std::vector<std::string> Frame::names_of(const EventSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](int w) { out.push_back(worlds_[w]); });
  return out;
}

std::string Frame::format_set(const EventSet& set) const {
  std::string out = "{";
  bool first = true;
  set.for_each([&](int w) {
    if (!first) out += ", ";
    out += worlds_[w];
    first = false;
  });
  return out + "}";
}

EventSet Frame::set_of(const std::vector<std::string>& names) const {
  EventSet out = empty_set();
  for (const auto& name : names) out = out.with(world_index(name));
  return out;
}

}  // namespace betlogic
