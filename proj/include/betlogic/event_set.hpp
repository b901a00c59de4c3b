#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "betlogic/error.hpp"

namespace betlogic {

/// Upper bound on the number of worlds in any model.
inline constexpr int kMaxWorlds = 64;

/// A set of world indices drawn from a universe {0, ..., universe_size-1}.
class EventSet {
 public:
  EventSet() = default;
  EventSet(int universe_size, std::uint64_t bits) : bits_(bits & mask(universe_size)), size_(universe_size) {
    check_universe(universe_size);
  }

  static EventSet empty(int universe_size) { return EventSet(universe_size, 0); }
  static EventSet full(int universe_size) { return EventSet(universe_size, ~std::uint64_t{0}); }
  static EventSet singleton(int universe_size, int index) {
    return EventSet(universe_size, std::uint64_t{1} << index);
  }
  static EventSet of(int universe_size, const std::vector<int>& indices) {
    std::uint64_t bits = 0;
    for (int i : indices) bits |= std::uint64_t{1} << i;
    return EventSet(universe_size, bits);
  }

  std::uint64_t bits() const { return bits_; }
  int universe_size() const { return size_; }

  bool contains(int index) const { return (bits_ >> index) & 1U; }
  bool is_empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }

  EventSet operator|(const EventSet& o) const { return EventSet(size_, bits_ | o.bits_, Raw{}); }
  EventSet operator&(const EventSet& o) const { return EventSet(size_, bits_ & o.bits_, Raw{}); }
  EventSet operator-(const EventSet& o) const { return EventSet(size_, bits_ & ~o.bits_, Raw{}); }
  EventSet complement() const { return EventSet(size_, ~bits_ & mask(size_), Raw{}); }
  EventSet with(int index) const { return EventSet(size_, bits_ | (std::uint64_t{1} << index), Raw{}); }
  EventSet without(int index) const { return EventSet(size_, bits_ & ~(std::uint64_t{1} << index), Raw{}); }

  bool subset_of(const EventSet& o) const { return (bits_ & ~o.bits_) == 0; }
  bool proper_subset_of(const EventSet& o) const { return subset_of(o) && bits_ != o.bits_; }
  bool disjoint(const EventSet& o) const { return (bits_ & o.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend bool operator==(const EventSet& a, const EventSet& b) {
    return a.bits_ == b.bits_ && a.size_ == b.size_;
  }

  static std::uint64_t mask(int universe_size) {
    return universe_size >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe_size) - 1);
  }

 private:
  struct Raw {};
  EventSet(int universe_size, std::uint64_t bits, Raw) : bits_(bits), size_(universe_size) {}

  static void check_universe(int universe_size) {
    if (universe_size < 0 || universe_size > kMaxWorlds)
      throw Error(ErrorCode::UniverseTooLarge,
                  "universe of " + std::to_string(universe_size) + " worlds exceeds " +
                      std::to_string(kMaxWorlds));
  }

  std::uint64_t bits_ = 0;
  int size_ = 0;
};

/// Canonical ordering: by cardinality, then by bit pattern.
inline bool canonical_less(const EventSet& a, const EventSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits() < b.bits();
}

/// Calls f(sub) for every subset of `set` (including the empty set and
/// `set` itself) in increasing bit-pattern order.
template <typename F>
void for_each_subset(const EventSet& set, F&& f) {
  const std::uint64_t s = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(EventSet(set.universe_size(), sub));
    if (sub == s) break;
    sub = (sub - s) & s;
  }
}

}  // namespace betlogic

template <>
struct std::hash<betlogic::EventSet> {
  std::size_t operator()(const betlogic::EventSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits()) ^ (static_cast<std::size_t>(s.universe_size()) << 1);
  }
};
