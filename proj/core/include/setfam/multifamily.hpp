#pragma once

#include <vector>

#include "setfam/extnat.hpp"
#include "setfam/family.hpp"
#include "setfam/universe.hpp"

namespace setfam {

// Total {0,1,...,inf}-valued function on the powerset, stored densely by
// mask bits (2^n entries).
class MultiFamily {
 public:
  explicit MultiFamily(Universe u);  // all zero
  MultiFamily(Universe u, std::vector<ExtNat> values);

  static MultiFamily constant(Universe u, ExtNat v);

  const Universe& universe() const { return universe_; }
  ExtNat value(SubsetMask s) const;
  ExtNat operator()(SubsetMask s) const { return value(s); }
  const std::vector<ExtNat>& values() const { return values_; }

  MultiFamily with_value(SubsetMask s, ExtNat v) const;

  friend bool operator==(const MultiFamily& a, const MultiFamily& b) {
    return a.universe_ == b.universe_ && a.values_ == b.values_;
  }

 private:
  Universe universe_;
  std::vector<ExtNat> values_;
};

// Total {0,1,...,inf}-valued function on the elements.
class MultiSet {
 public:
  explicit MultiSet(Universe u);
  MultiSet(Universe u, std::vector<ExtNat> mult);

  const Universe& universe() const { return universe_; }
  ExtNat multiplicity(int element) const { return mult_.at(static_cast<std::size_t>(element)); }
  const std::vector<ExtNat>& multiplicities() const { return mult_; }
  // Elements with nonzero multiplicity.
  SubsetMask support() const;

  friend bool operator==(const MultiSet& a, const MultiSet& b) {
    return a.universe_ == b.universe_ && a.mult_ == b.mult_;
  }

 private:
  Universe universe_;
  std::vector<ExtNat> mult_;
};

// Monotone under inclusion, checked on covering pairs.
bool is_increasing(const MultiFamily& m);
bool is_decreasing(const MultiFamily& m);

MultiFamily indicator_of_family(const Family& f);
// Inverse of indicator_of_family; throws if any value is not 0 or 1.
Family family_of_indicator(const MultiFamily& m);

// (co M)(S) = M(S^c). An involution swapping increasing and decreasing.
MultiFamily co_multifamily(const MultiFamily& m);

// Biggest outer multi-family below m: pointwise min over finite covers of
// the sum of part values. Requires m increasing (throws otherwise), which
// lets the DP work over binary disjoint splits.
MultiFamily out_core(const MultiFamily& m);

// Smallest inner multi-family above m: pointwise max over finite disjoint
// decompositions. Requires m increasing. A strictly positive value on the
// empty set makes the hull infinite everywhere (repeat the empty part).
MultiFamily inn_hull(const MultiFamily& m);

// Fixed-point characterizations; both require m increasing.
bool is_outer(const MultiFamily& m);
bool is_inner(const MultiFamily& m);

// Push(f,M)(S) = M(f^{-1}(S)). Preserves increasing, outer and inner.
MultiFamily push_multifamily(const TotalMap& map, const MultiFamily& m);

// Star(M)(x) = M({x}).
MultiSet star_multiset(const MultiFamily& m);

// multi-f(L)(y) = sum of L over the fiber of y, saturating.
MultiSet multi_image(const TotalMap& map, const MultiSet& l);

// { S : M(S) >= threshold + 1 }. Requires m increasing and a finite
// threshold; the result is eventual.
Family upper_level_family(const MultiFamily& m, ExtNat threshold);

}  // namespace setfam
