#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "setfam/universe.hpp"

namespace setfam {

// Family of subsets of a finite universe. Immutable after construction;
// membership is a dense table indexed by mask bits.
class Family {
 public:
  explicit Family(Universe u);
  Family(Universe u, const std::vector<SubsetMask>& members);

  static Family all_subsets(Universe u);
  static Family empty_family(Universe u);
  // U_x = all sets containing x: the principal ultrafilter at x.
  static Family principal(Universe u, int element);
  // Sets containing more than half the elements; |X| must be odd.
  static Family majority(Universe u);
  static Family nonempty_sets(Universe u);
  // For universes of size <= 6: bit s of `packed` is the membership of mask s.
  static Family from_packed(Universe u, std::uint64_t packed);

  const Universe& universe() const { return universe_; }
  bool contains(SubsetMask s) const;
  int member_count() const { return member_count_; }
  std::vector<SubsetMask> members() const;
  std::uint64_t packed() const;  // universe size <= 6 only

  friend bool operator==(const Family& a, const Family& b) {
    return a.universe_ == b.universe_ && a.member_ == b.member_;
  }

 private:
  Universe universe_;
  std::vector<bool> member_;  // indexed by mask bits, length 2^n
  int member_count_ = 0;
};

struct SpeciesReport {
  bool eventual = false;
  bool co_eventual = false;
  bool filter = false;
  bool ultrafilter = false;
  bool self_aso = false;
  bool condition_O = false;        // meaningful for eventual families; false otherwise
  bool condition_I = false;        // likewise
  bool finitely_additive = false;  // condition_O && condition_I
};

struct PartitionVerdict {
  std::vector<SubsetMask> parts;
  bool measured = false;
  std::optional<int> witness_part;
};

// The four conditions of the measured-partition equivalence, each computed
// independently so tests can assert they agree.
struct PropFltReport {
  bool additive = false;
  bool no_nonmeasured = false;
  bool no_nonmeasured_3 = false;
  bool filter = false;

  bool all_equal() const {
    return additive == no_nonmeasured && additive == no_nonmeasured_3 && additive == filter;
  }
};

// -- species predicates ------------------------------------------------

// Upper hereditary: S in F and S' >= S imply S' in F.
bool is_eventual(const Family& f);
// Lower hereditary.
bool is_co_eventual(const Family& f);

// All subsets NOT in f.
Family complement_family(const Family& f);
// { S^c : S in f }.
Family family_of_complements(const Family& f);

// Aso f = { S : S^c not in f }. An involution.
Family aso(const Family& f);
bool is_self_aso(const Family& f);

// Filter: eventual and closed under pairwise intersection (no properness
// requirement). Ultrafilter: filter and self-Aso.
bool is_filter(const Family& f);
bool is_ultrafilter(const Family& f);
// Properness is kept separate from the filter predicate: empty set absent
// and family nonempty.
bool is_proper(const Family& f);

// (O): the union of two non-members is a non-member.
// (I): no two disjoint members.
// Both require an eventual family and throw std::invalid_argument otherwise.
bool condition_O(const Family& f);
bool condition_I(const Family& f);

// Maximal eventual family contained in f: { S : every S' >= S is in f }.
Family eventual_core(const Family& f);

// { x : {x} in f }.
SubsetMask star(const Family& f);

// Push f along a total map: { S in Y : preimage(S) in f }.
Family push_family(const TotalMap& map, const Family& f);

SpeciesReport classify(const Family& f);

// Requires f self-Aso eventual and `parts` a partition of X (empty parts are
// dropped); throws std::invalid_argument otherwise.
PartitionVerdict partition_verdict(const Family& f, const std::vector<SubsetMask>& parts);

// Requires f self-Aso eventual.
PropFltReport prop_flt_report(const Family& f);

// Restriction of f to Q (Q must be a member; throws otherwise). The result
// lives on a universe made of Q's labels.
Family restrict_to(const Family& f, SubsetMask q);
// { S in X : S /\ Q in f_q }; f_q's universe labels must all occur in X.
Family extend_from(const Family& f_q, const Universe& x);

// -- product and majority constructions --------------------------------

// Universe of pairs "(x,y)", indexed x-major.
class ProductSpace {
 public:
  ProductSpace(Universe x, Universe y);

  const Universe& product_universe() const { return product_; }
  const Universe& x_universe() const { return x_; }
  const Universe& y_universe() const { return y_; }

  int pair_index(int ix, int iy) const { return ix * y_.size() + iy; }
  // { x : (x, iy) in s } as a subset of X.
  SubsetMask x_slice(SubsetMask s, int iy) const;

 private:
  Universe x_;
  Universe y_;
  Universe product_;
};

enum class IntegrationOrder { x_then_y, y_then_x };

// S belongs iff integrating the slices in the given order says so:
// x_then_y: { y : { x : (x,y) in S } in E } in F. The order matters.
// Requires both inputs self-Aso; the result is then self-Aso.
Family product_self_aso(const Family& e, const Family& f, IntegrationOrder order);
// Same formula without any species checks or guarantees.
Family product_raw(const Family& e, const Family& f, IntegrationOrder order);

// Universe of arity-length tuples over a base universe, labels "(a,b,a)".
class TupleSpace {
 public:
  TupleSpace(Universe base, int arity);

  const Universe& tuple_universe() const { return tuple_; }
  const Universe& base() const { return base_; }
  int arity() const { return arity_; }

  int component(int tuple_index, int pos) const;
  int tuple_index(std::span<const int> components) const;
  // { t : |{ i : t_i in s }| >= (arity+1)/2 } as a subset of the tuple universe.
  SubsetMask majority_tuples(SubsetMask s) const;

 private:
  Universe base_;
  int arity_;
  Universe tuple_;
};

// S belongs iff the set of tuples with majority inside S belongs to f.
// Arity must be odd and f self-Aso; the result is then self-Aso on the base.
Family majority_projection(const Family& f, const TupleSpace& ts);

}  // namespace setfam
