#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "setfam/extnat.hpp"
#include "setfam/multifamily.hpp"
#include "setfam/topology.hpp"
#include "setfam/universe.hpp"

namespace setfam {

// Eventually periodic subset of N: membership(n) = prefix[n] for n < p, else
// pattern[(n - p) mod q]. Stored in canonical form: the pattern is primitive
// (not a repetition of a shorter word) and the prefix is shortest (its last
// bit never matches the pattern's continuation). Equality is structural on
// the canonical form.
class EpSet {
 public:
  EpSet();  // the empty set
  EpSet(std::vector<bool> prefix, std::vector<bool> pattern);
  // Characters '0'/'1', as in the JSON encoding.
  EpSet(const std::string& prefix, const std::string& pattern);

  static EpSet naturals();
  static EpSet evens();
  static EpSet odds();
  static EpSet finite_set(const std::vector<std::uint64_t>& elements);
  // { n : n >= start }.
  static EpSet from_threshold(std::uint64_t start);

  bool contains(std::uint64_t n) const;
  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& pattern() const { return pattern_; }
  std::size_t prefix_length() const { return prefix_.size(); }
  std::size_t period() const { return pattern_.size(); }
  std::string prefix_string() const;
  std::string pattern_string() const;

  friend bool operator==(const EpSet& a, const EpSet& b) {
    return a.prefix_ == b.prefix_ && a.pattern_ == b.pattern_;
  }

 private:
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> pattern_;  // length >= 1
};

// Exact Boolean algebra on ep sets (pattern alignment on the lcm of periods).
EpSet ep_complement(const EpSet& s);
EpSet ep_union(const EpSet& a, const EpSet& b);
EpSet ep_intersect(const EpSet& a, const EpSet& b);
EpSet ep_minus(const EpSet& a, const EpSet& b);
EpSet ep_toggle(const EpSet& s, std::uint64_t n);

bool ep_is_empty(const EpSet& s);
bool ep_is_finite(const EpSet& s);    // canonical pattern all zero
bool ep_is_cofinite(const EpSet& s);  // canonical pattern all one
bool ep_subset_of(const EpSet& a, const EpSet& b);

// Gap(S) = limsup over consecutive elements of (next - cur - 1); inf for
// finite S. A finite limsup is attained infinitely often, so it is the max
// gap whose left endpoint lies in one period of the periodic region.
ExtNat gap(const EpSet& s);

// coGap = Gap of the complement = limsup of run lengths of S. Zero exactly
// on finite sets.
ExtNat cogap(const EpSet& s);

// The coarser bound c_S: the maximum (not limsup) number of integers
// strictly between consecutive elements of S, 0 when |S| <= 1. The two
// notions disagree on sets with one early large gap, hence the diagnostic.
ExtNat prose_gap_bound(const EpSet& s);

struct CogapDiagnostic {
  ExtNat cogap_value;
  ExtNat prose_c_s;
  bool agree;
};
CogapDiagnostic cogap_diagnostic(const EpSet& s);

// Membership in the family of infinite sets (G) / cofinite sets (H).
bool in_G(const EpSet& s);
bool in_H(const EpSet& s);

// True iff value_fn(S) is unchanged by toggling the listed elements.
bool finitely_insensitive_probe(const std::function<ExtNat(const EpSet&)>& value_fn,
                                const EpSet& s, const std::vector<std::uint64_t>& toggles);

// (S /\ evens, S /\ odds): disjoint, union S, each free of 2-runs.
std::pair<EpSet, EpSet> even_odd_split(const EpSet& s);

// Out coGap(S) = min(2, coGap(S)).
ExtNat out_cogap(const EpSet& s);

// Exhaustive check that no cover of S by at most `max_parts` ep parts with
// period <= period_bound undercuts out_cogap(S). Returns true if such a
// cover exists (it never should).
bool out_cogap_beaten_by_bounded_cover(const EpSet& s, int max_parts, int period_bound);

// K pairwise disjoint infinite ep sets with union S, certifying
// Inn coGap(S) >= K. Throws std::invalid_argument for finite S or K < 1.
std::vector<EpSet> inn_cogap_witness(const EpSet& s, int k);

// Eventually periodic map N -> X, canonicalized like EpSet.
class EpSequence {
 public:
  EpSequence(Universe u, std::vector<int> prefix, std::vector<int> pattern);
  static EpSequence from_labels(Universe u, const std::vector<std::string>& prefix,
                                const std::vector<std::string>& pattern);
  static EpSequence constant(Universe u, int value);

  const Universe& universe() const { return universe_; }
  int value_at(std::uint64_t n) const;
  const std::vector<int>& prefix() const { return prefix_; }
  const std::vector<int>& pattern() const { return pattern_; }

  // Compose with a map on the codomain, giving the sequence f(x_n).
  EpSequence mapped(const TotalMap& map) const;

  friend bool operator==(const EpSequence& a, const EpSequence& b) {
    return a.universe_ == b.universe_ && a.prefix_ == b.prefix_ && a.pattern_ == b.pattern_;
  }

 private:
  void canonicalize();

  Universe universe_;
  std::vector<int> prefix_;
  std::vector<int> pattern_;
};

// { n : x_n in S }.
EpSet seq_preimage(const EpSequence& x, SubsetMask s);

// Named multi-families on N usable as sequence-limit weights.
enum class NatFamily { G, H, CoGap };
ExtNat nat_family_value(NatFamily f, const EpSet& s);

// Multi-set limit of the sequence with respect to the named multi-family:
// value at y is the min over open U containing y of the weight of
// { n : x_n in U }.
MultiSet seq_limit(const EpSequence& x, const FiniteTopology& t, NatFamily f);

}  // namespace setfam
