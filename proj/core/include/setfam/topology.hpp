#pragma once

#include <optional>
#include <vector>

#include "setfam/family.hpp"
#include "setfam/multifamily.hpp"
#include "setfam/universe.hpp"

namespace setfam {

// Topology on a finite universe: the empty set and the whole space are open
// and opens are closed under pairwise union and intersection (which is all
// a finite space needs). Validity is checked once at construction.
class FiniteTopology {
 public:
  FiniteTopology(Universe u, const std::vector<SubsetMask>& opens);

  static FiniteTopology discrete(Universe u);
  static FiniteTopology indiscrete(Universe u);
  // {∅, {a}, {a,b}} on the two-point universe {a, b}.
  static FiniteTopology sierpinski();

  const Universe& universe() const { return universe_; }
  bool valid() const { return valid_; }
  bool is_open(SubsetMask s) const;
  std::vector<SubsetMask> opens() const;

 private:
  Universe universe_;
  std::vector<bool> open_;  // indexed by mask bits
  bool valid_ = false;
};

bool validate_topology(const FiniteTopology& t);
// Pairwise separation by disjoint opens. On finite spaces this forces the
// discrete topology.
bool is_hausdorff(const FiniteTopology& t);

// cl F = { S : every open U >= S is in F }.
Family closure_family(const Family& f, const FiniteTopology& t);

// { x : every open U containing x is in F } = Star(cl F). Always closed.
SubsetMask limit_set(const Family& f, const FiniteTopology& t);

// cl M(S) = min over open U >= S of M(U). Requires m increasing.
MultiFamily closure_multifamily(const MultiFamily& m, const FiniteTopology& t);

// Star of the closure: multiplicity at x is the min of M over open
// neighborhoods of x. Requires m increasing.
MultiSet multiset_limit(const MultiFamily& m, const FiniteTopology& t);

// For an inner eventual family in a Hausdorff space the limit point is
// unique; returns it, or nothing when the limit set is empty. Throws
// std::logic_error if two limit points show up (the theorem would be false).
std::optional<int> unique_limit_inner(const Family& f, const FiniteTopology& t);

// Preimages of opens are open.
bool is_continuous(const TotalMap& map, const FiniteTopology& domain,
                   const FiniteTopology& codomain);

// All topologies on u; universe size capped at 4.
std::vector<FiniteTopology> enumerate_topologies(const Universe& u);

}  // namespace setfam
