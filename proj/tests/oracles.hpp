// Test-only oracles, kept independent of the library's DP and
// canonical-form code paths: direct enumeration over collections of subsets
// and windowed simulation of the naturals.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "setfam/extnat.hpp"
#include "setfam/multifamily.hpp"
#include "setfam/universe.hpp"

namespace setfam::oracles {

// min over all covers of s (collections with union s) of the value sum.
// Repeating a part only raises the sum, so distinct parts suffice.
ExtNat out_oracle(const MultiFamily& m, SubsetMask s);

// sup over all disjoint decompositions of s. Repeated empty parts push the
// sup to infinity whenever the empty set has positive value; otherwise
// distinct nonempty parts suffice.
ExtNat inn_oracle(const MultiFamily& m, SubsetMask s);

// Direct finite-collection checks of the outer/inner inequalities over all
// collections of distinct subsets of the universe.
bool outer_direct(const MultiFamily& m);
bool inner_direct(const MultiFamily& m);

// Windowed simulation over the first max(1000, p + 20q) naturals, with
// membership captured as a plain bit vector.
class EpBits {
 public:
  template <typename Contains>
  EpBits(std::size_t prefix_len, std::size_t period, Contains&& contains)
      : prefix_len_(prefix_len), period_(period) {
    std::size_t window = std::max<std::size_t>(1000, prefix_len + 20 * period);
    bits_.resize(window);
    for (std::size_t i = 0; i < window; ++i) bits_[i] = contains(i);
  }
  const std::vector<bool>& bits() const { return bits_; }
  std::size_t prefix_len() const { return prefix_len_; }
  std::size_t period() const { return period_; }

 private:
  std::vector<bool> bits_;
  std::size_t prefix_len_;
  std::size_t period_;
};

// Largest gap value occurring at least twice with left endpoint at or past
// the prefix, or inf when fewer than two elements show up there (the set is
// then finite).
ExtNat windowed_gap(const EpBits& w);

// Largest run length occurring at least twice with start at or past the
// prefix; 0 when none recurs.
ExtNat windowed_run(const EpBits& w);

}  // namespace setfam::oracles
