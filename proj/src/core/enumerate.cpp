#include "betlogic/enumerate.hpp"

namespace betlogic {

std::vector<std::vector<EventSet>> set_partitions(int n) {
  std::vector<std::vector<EventSet>> out;
  if (n <= 0) return out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<std::uint64_t> bits(blocks, 0);
      for (int k = 0; k < n; ++k) bits[rgs[k]] |= std::uint64_t{1} << k;
      std::vector<EventSet> cells;
      for (auto b : bits) cells.emplace_back(n, b);
      out.push_back(std::move(cells));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rgs[0] = 0;
  rec(1, 1);
  return out;
}

std::vector<std::vector<EventSet>> nonempty_antichains(const EventSet& cell) {
  std::vector<EventSet> subsets;
  for_each_subset(cell, [&](const EventSet& s) {
    if (!s.is_empty()) subsets.push_back(s);
  });
  std::vector<std::vector<EventSet>> out;
  std::vector<EventSet> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = start; i < subsets.size(); ++i) {
      const EventSet& s = subsets[i];
      bool ok = true;
      for (const auto& t : current) {
        if (s.subset_of(t) || t.subset_of(s)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(s);
      out.push_back(current);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

bool for_each_product(const std::vector<int>& sizes,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  for (int s : sizes) {
    if (s <= 0) return true;
  }
  std::vector<int> idx(sizes.size(), 0);
  while (true) {
    if (!visit(idx)) return false;
    int k = static_cast<int>(sizes.size()) - 1;
    while (k >= 0 && ++idx[k] == sizes[k]) {
      idx[k] = 0;
      --k;
    }
    if (k < 0) return true;
  }
}

}  // namespace betlogic
