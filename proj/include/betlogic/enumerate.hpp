#pragma once

#include <functional>
#include <vector>

#include "betlogic/event_set.hpp"

namespace betlogic {

/// All set partitions of {0..n-1}, in restricted-growth-string order.
/// Cells within a partition are ordered by their first element.
std::vector<std::vector<EventSet>> set_partitions(int n);

/// All nonempty antichains of nonempty subsets of `cell`. Each antichain is
/// listed in increasing bit order; antichains are produced in DFS order over
/// subsets of increasing bit pattern.
std::vector<std::vector<EventSet>> nonempty_antichains(const EventSet& cell);

/// Visits every index tuple with idx[k] < sizes[k], in
/// lexicographic order; returning false from `visit` stops the walk.
/// Returns false iff stopped early.
bool for_each_product(const std::vector<int>& sizes,
                      const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace betlogic
