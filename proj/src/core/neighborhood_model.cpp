#include "betlogic/neighborhood_model.hpp"

#include <algorithm>
#include <utility>

#include "betlogic/error.hpp"

namespace betlogic {

namespace {

void sort_unique(std::vector<EventSet>& family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace

std::vector<EventSet> minimal_elements(std::vector<EventSet> family) {
  sort_unique(family);
  std::vector<EventSet> out;
  for (const auto& x : family) {
    bool minimal = true;
    for (const auto& y : out) {
      if (y.subset_of(x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<EventSet> maximal_elements(std::vector<EventSet> family) {
  sort_unique(family);
  std::vector<EventSet> out;
  for (auto it = family.rbegin(); it != family.rend(); ++it) {
    bool maximal = true;
    for (const auto& y : out) {
      if (it->subset_of(y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(*it);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

NeighborhoodModel::NeighborhoodModel(Frame frame, std::vector<std::vector<EventSet>> generators)
    : frame_(std::move(frame)), generators_(std::move(generators)) {
  if (static_cast<int>(generators_.size()) != frame_.cell_count())
    throw Error(ErrorCode::InvalidModel, "expected one generator list per cell");
  for (int c = 0; c < frame_.cell_count(); ++c) {
    const EventSet& cell = frame_.cells()[c];
    if (generators_[c].empty())
      throw Error(ErrorCode::InvalidModel,
                  "cell " + frame_.format_set(cell) + " has no neighborhood generators");
    for (const auto& g : generators_[c]) {
      if (g.universe_size() != frame_.size())
        throw Error(ErrorCode::InvalidModel, "generator has wrong universe size");
      if (g.is_empty())
        throw Error(ErrorCode::InvalidModel, "empty generator in cell " + frame_.format_set(cell));
      if (!g.subset_of(cell))
        throw Error(ErrorCode::InvalidModel, "generator " + frame_.format_set(g) +
                                                 " is not inside cell " + frame_.format_set(cell));
    }
    generators_[c] = minimal_elements(std::move(generators_[c]));
  }
}

bool NeighborhoodModel::is_neighborhood_in_cell(int cell, const EventSet& x) const {
  for (const auto& g : generators_[cell]) {
    if (g.subset_of(x)) return true;
  }
  return false;
}

bool NeighborhoodModel::is_neighborhood(int world, const EventSet& x) const {
  const int c = frame_.cell_index(world);
  if (!x.subset_of(frame_.cells()[c])) return false;
  return is_neighborhood_in_cell(c, x);
}

std::vector<EventSet> NeighborhoodModel::closure(int cell) const {
  std::vector<EventSet> out;
  for_each_subset(frame_.cells().at(cell), [&](const EventSet& x) {
    if (is_neighborhood_in_cell(cell, x)) out.push_back(x);
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

RawNeighborhoodSystem to_raw(const NeighborhoodModel& m) {
  RawNeighborhoodSystem raw{m.frame(), {}};
  for (int w = 0; w < m.frame().size(); ++w) raw.families.push_back(m.closure(m.frame().cell_index(w)));
  return raw;
}

}  // namespace betlogic
