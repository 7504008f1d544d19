#pragma once

#include <utility>
#include <vector>

#include "setfam/universe.hpp"

namespace setfam {

// All subsets of the n-element universe, ascending by bit pattern.
std::vector<SubsetMask> all_masks(int n);

// Visits every submask of s (including the empty set and s itself),
// ascending by bit pattern.
template <typename Fn>
void for_each_submask(SubsetMask s, Fn&& fn) {
  std::uint32_t sub = 0;
  while (true) {
    fn(SubsetMask{sub, s.size});
    if (sub == s.bits) break;
    sub = (sub - s.bits) & s.bits;  // next submask in ascending order
  }
}

// Ordered pairs (a, b) with a | b = s and both strictly below s.
// The enumeration backend for the outer-core recursion.
std::vector<std::pair<SubsetMask, SubsetMask>> cover_decompositions(SubsetMask s);

// Ordered pairs (a, b) with a and b nonempty, disjoint, a | b = s.
// Exactly 2^|s| - 2 pairs for nonempty s.
std::vector<std::pair<SubsetMask, SubsetMask>> disjoint_decompositions(SubsetMask s);

// Partitions of s into nonempty disjoint parts, enumerated by restricted
// growth strings over the elements of s. max_parts < 0 means no limit.
// The empty set has exactly one partition: the empty list of parts.
std::vector<std::vector<SubsetMask>> set_partitions(SubsetMask s, int max_parts = -1);

}  // namespace setfam
