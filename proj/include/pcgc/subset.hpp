#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace pcgc {

// Extensional subset of an indexed carrier (bit i set <=> element i present).
using Subset = boost::dynamic_bitset<>;

inline Subset make_subset(std::size_t universe, std::initializer_list<std::size_t> members) {
  Subset s(universe);
  for (auto m : members) s.set(m);
  return s;
}

inline Subset full_subset(std::size_t universe) {
  Subset s(universe);
  s.set();
  return s;
}

inline Subset singleton(std::size_t universe, std::size_t member) {
  Subset s(universe);
  s.set(member);
  return s;
}

inline std::vector<std::size_t> members(const Subset& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

template <typename Fn>
void for_each_member(const Subset& s, Fn&& fn) {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) fn(i);
}

// Subsets of a universe of at most 63 elements, addressed by bitmask.
inline Subset subset_from_mask(std::size_t universe, unsigned long long mask) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe; ++i)
    if (mask >> i & 1ULL) s.set(i);
  return s;
}

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(s.size());
    for_each_member(s, [&](std::size_t i) { h ^= i + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); });
    return h;
  }
};

}  // namespace pcgc
