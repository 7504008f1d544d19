#include "setfam/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "setfam/enumerate.hpp"

namespace setfam {

namespace {

std::size_t table_size(const Universe& u) { return std::size_t{1} << u.size(); }

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Family::Family(Universe u) : universe_(std::move(u)), member_(table_size(universe_), false) {}

Family::Family(Universe u, const std::vector<SubsetMask>& members) : Family(std::move(u)) {
  for (SubsetMask m : members) {
    require(m.size == universe_.size(), "Family: member mask sized to wrong universe");
    if (!member_[m.bits]) {
      member_[m.bits] = true;
      ++member_count_;
    }
  }
}

Family Family::all_subsets(Universe u) {
  Family f(std::move(u));
  std::fill(f.member_.begin(), f.member_.end(), true);
  f.member_count_ = static_cast<int>(f.member_.size());
  return f;
}

Family Family::empty_family(Universe u) { return Family(std::move(u)); }

Family Family::principal(Universe u, int element) {
  require(element >= 0 && element < u.size(), "Family::principal: element out of range");
  Family f(std::move(u));
  for (std::uint32_t b = 0; b < f.member_.size(); ++b)
    if ((b >> element) & 1u) {
      f.member_[b] = true;
      ++f.member_count_;
    }
  return f;
}

Family Family::majority(Universe u) {
  require(u.size() % 2 == 1, "Family::majority: universe size must be odd");
  Family f(std::move(u));
  int need = f.universe_.size() / 2 + 1;
  for (std::uint32_t b = 0; b < f.member_.size(); ++b)
    if (std::popcount(b) >= need) {
      f.member_[b] = true;
      ++f.member_count_;
    }
  return f;
}

Family Family::nonempty_sets(Universe u) {
  Family f = all_subsets(std::move(u));
  f.member_[0] = false;
  --f.member_count_;
  return f;
}

Family Family::from_packed(Universe u, std::uint64_t packed) {
  require(u.size() <= 6, "Family::from_packed: universe size must be <= 6");
  Family f(std::move(u));
  for (std::uint32_t b = 0; b < f.member_.size(); ++b)
    if ((packed >> b) & 1u) {
      f.member_[b] = true;
      ++f.member_count_;
    }
  return f;
}

bool Family::contains(SubsetMask s) const {
  require(s.size == universe_.size(), "Family: mask sized to wrong universe");
  return member_[s.bits];
}

std::vector<SubsetMask> Family::members() const {
  std::vector<SubsetMask> out;
  out.reserve(static_cast<std::size_t>(member_count_));
  for (std::uint32_t b = 0; b < member_.size(); ++b)
    if (member_[b]) out.push_back(SubsetMask{b, universe_.size()});
  return out;
}

std::uint64_t Family::packed() const {
  require(universe_.size() <= 6, "Family::packed: universe size must be <= 6");
  std::uint64_t p = 0;
  for (std::uint32_t b = 0; b < member_.size(); ++b)
    if (member_[b]) p |= std::uint64_t{1} << b;
  return p;
}

// -- species predicates ------------------------------------------------

bool is_eventual(const Family& f) {
  int n = f.universe().size();
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    if (!f.contains({b, n})) continue;
    for (int i = 0; i < n; ++i)
      if (!((b >> i) & 1u) && !f.contains({b | (1u << i), n})) return false;
  }
  return true;
}

bool is_co_eventual(const Family& f) {
  int n = f.universe().size();
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    if (!f.contains({b, n})) continue;
    for (int i = 0; i < n; ++i)
      if ((b >> i) & 1u && !f.contains({b & ~(1u << i), n})) return false;
  }
  return true;
}

Family complement_family(const Family& f) {
  int n = f.universe().size();
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b)
    if (!f.contains({b, n})) members.push_back({b, n});
  return Family(f.universe(), members);
}

Family family_of_complements(const Family& f) {
  int n = f.universe().size();
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b)
    if (f.contains({b, n})) members.push_back(SubsetMask{b, n}.complement());
  return Family(f.universe(), members);
}

Family aso(const Family& f) {
  int n = f.universe().size();
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    SubsetMask s{b, n};
    if (!f.contains(s.complement())) members.push_back(s);
  }
  return Family(f.universe(), members);
}

bool is_self_aso(const Family& f) { return aso(f) == f; }

bool is_filter(const Family& f) {
  if (!is_eventual(f)) return false;
  auto ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!f.contains(ms[i].intersect(ms[j]))) return false;
  return true;
}

bool is_ultrafilter(const Family& f) { return is_filter(f) && is_self_aso(f); }

bool is_proper(const Family& f) {
  return f.member_count() > 0 && !f.contains(SubsetMask::empty_set(f.universe().size()));
}

bool condition_O(const Family& f) {
  require(is_eventual(f), "condition_O: family must be eventual");
  int n = f.universe().size();
  std::vector<SubsetMask> non;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b)
    if (!f.contains({b, n})) non.push_back({b, n});
  for (std::size_t i = 0; i < non.size(); ++i)
    for (std::size_t j = i; j < non.size(); ++j)
      if (f.contains(non[i].union_with(non[j]))) return false;
  return true;
}

bool condition_I(const Family& f) {
  require(is_eventual(f), "condition_I: family must be eventual");
  auto ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (ms[i].disjoint_with(ms[j])) return false;
  return true;
}

Family eventual_core(const Family& f) {
  int n = f.universe().size();
  std::size_t total = std::size_t{1} << n;
  // good[s] = every superset of s (including s) is in f; fill by descending
  // popcount so all strict supersets are already decided.
  std::vector<bool> good(total, false);
  std::vector<std::uint32_t> order;
  order.reserve(total);
  for (std::uint32_t b = 0; b < total; ++b) order.push_back(b);
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (std::uint32_t b : order) {
    bool ok = f.contains({b, n});
    for (int i = 0; ok && i < n; ++i)
      if (!((b >> i) & 1u)) ok = good[b | (1u << i)];
    good[b] = ok;
  }
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b < total; ++b)
    if (good[b]) members.push_back({b, n});
  return Family(f.universe(), members);
}

SubsetMask star(const Family& f) {
  int n = f.universe().size();
  SubsetMask out = SubsetMask::empty_set(n);
  for (int i = 0; i < n; ++i)
    if (f.contains(SubsetMask::singleton(i, n))) out.bits |= 1u << i;
  return out;
}

Family push_family(const TotalMap& map, const Family& f) {
  require(map.domain() == f.universe(), "push_family: map domain must match family universe");
  int m = map.codomain().size();
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(m); ++b) {
    SubsetMask s{b, m};
    if (f.contains(map.preimage(s))) members.push_back(s);
  }
  return Family(map.codomain(), members);
}

SpeciesReport classify(const Family& f) {
  SpeciesReport r;
  r.eventual = is_eventual(f);
  r.co_eventual = is_co_eventual(f);
  r.filter = is_filter(f);
  r.self_aso = is_self_aso(f);
  r.ultrafilter = r.filter && r.self_aso;
  if (r.eventual) {
    r.condition_O = condition_O(f);
    r.condition_I = condition_I(f);
    r.finitely_additive = r.condition_O && r.condition_I;
  }
  return r;
}

namespace {

void require_self_aso_eventual(const Family& f, const char* who) {
  if (!is_eventual(f)) throw std::invalid_argument(std::string(who) + ": family must be eventual");
  if (!is_self_aso(f)) throw std::invalid_argument(std::string(who) + ": family must be self-Aso");
}

}  // namespace

PartitionVerdict partition_verdict(const Family& f, const std::vector<SubsetMask>& parts) {
  require_self_aso_eventual(f, "partition_verdict");
  int n = f.universe().size();
  PartitionVerdict v;
  SubsetMask seen = SubsetMask::empty_set(n);
  for (SubsetMask p : parts) {
    require(p.size == n, "partition_verdict: part sized to wrong universe");
    require(p.disjoint_with(seen), "partition_verdict: parts must be disjoint");
    seen = seen.union_with(p);
    if (!p.empty()) v.parts.push_back(p);
  }
  require(seen.full(), "partition_verdict: parts must cover the universe");
  for (std::size_t i = 0; i < v.parts.size(); ++i)
    if (f.contains(v.parts[i])) {
      v.measured = true;
      v.witness_part = static_cast<int>(i);
      break;
    }
  return v;
}

PropFltReport prop_flt_report(const Family& f) {
  require_self_aso_eventual(f, "prop_flt_report");
  int n = f.universe().size();
  PropFltReport r;

  // Finite additivity of the indicator over disjoint pairs.
  r.additive = true;
  for (std::uint32_t s = 0; r.additive && s <= SubsetMask::full_bits(n); ++s) {
    SubsetMask rest = SubsetMask{s, n}.complement();
    for_each_submask(rest, [&](SubsetMask t) {
      SubsetMask sm{s, n};
      int lhs = f.contains(sm.union_with(t)) ? 1 : 0;
      int rhs = (f.contains(sm) ? 1 : 0) + (f.contains(t) ? 1 : 0);
      if (lhs != rhs) r.additive = false;
    });
  }

  auto measured = [&](const std::vector<SubsetMask>& parts) {
    for (SubsetMask p : parts)
      if (f.contains(p)) return true;
    return false;
  };

  SubsetMask whole = SubsetMask::full_set(n);
  r.no_nonmeasured = true;
  for (const auto& parts : set_partitions(whole))
    if (!measured(parts)) {
      r.no_nonmeasured = false;
      break;
    }

  // Three-part partitions; partitions into fewer nonempty parts are the
  // padded-with-empty cases and the empty set is never a member here.
  r.no_nonmeasured_3 = true;
  for (const auto& parts : set_partitions(whole, 3))
    if (!measured(parts)) {
      r.no_nonmeasured_3 = false;
      break;
    }

  r.filter = is_filter(f);
  return r;
}

Family restrict_to(const Family& f, SubsetMask q) {
  require(q.size == f.universe().size(), "restrict_to: mask sized to wrong universe");
  require(f.contains(q), "restrict_to: Q must be a member of the family");
  std::vector<std::string> labels;
  std::vector<int> elem = q.elements();
  labels.reserve(elem.size());
  for (int i : elem) labels.push_back(f.universe().label(i));
  Universe sub(labels);
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(sub.size()); ++b) {
    // Lift the sub-universe mask back into X.
    SubsetMask in_x = SubsetMask::empty_set(q.size);
    for (int j = 0; j < sub.size(); ++j)
      if ((b >> j) & 1u) in_x.bits |= 1u << elem[static_cast<std::size_t>(j)];
    if (f.contains(in_x)) members.push_back({b, sub.size()});
  }
  return Family(sub, members);
}

Family extend_from(const Family& f_q, const Universe& x) {
  const Universe& qu = f_q.universe();
  std::vector<int> position;  // index of each Q label inside X
  position.reserve(static_cast<std::size_t>(qu.size()));
  for (const auto& l : qu.labels()) position.push_back(x.index_of(l));
  int n = x.size();
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    SubsetMask in_q = SubsetMask::empty_set(qu.size());
    for (int j = 0; j < qu.size(); ++j)
      if ((b >> position[static_cast<std::size_t>(j)]) & 1u) in_q.bits |= 1u << j;
    if (f_q.contains(in_q)) members.push_back({b, n});
  }
  return Family(x, members);
}

// -- product and majority constructions --------------------------------

namespace {

Universe make_product_universe(const Universe& x, const Universe& y) {
  require(x.size() * y.size() <= max_universe_size,
          "ProductSpace: product universe exceeds size cap");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(x.size() * y.size()));
  for (int ix = 0; ix < x.size(); ++ix)
    for (int iy = 0; iy < y.size(); ++iy)
      labels.push_back("(" + x.label(ix) + "," + y.label(iy) + ")");
  return Universe(labels);
}

}  // namespace

ProductSpace::ProductSpace(Universe x, Universe y)
    : x_(std::move(x)), y_(std::move(y)), product_(make_product_universe(x_, y_)) {}

SubsetMask ProductSpace::x_slice(SubsetMask s, int iy) const {
  SubsetMask out = SubsetMask::empty_set(x_.size());
  for (int ix = 0; ix < x_.size(); ++ix)
    if (s.contains(pair_index(ix, iy))) out.bits |= 1u << ix;
  return out;
}

Family product_raw(const Family& e, const Family& f, IntegrationOrder order) {
  ProductSpace ps(e.universe(), f.universe());
  int n = ps.product_universe().size();
  int ny = f.universe().size();
  int nx = e.universe().size();
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    SubsetMask s{b, n};
    bool in;
    if (order == IntegrationOrder::x_then_y) {
      SubsetMask ys = SubsetMask::empty_set(ny);
      for (int iy = 0; iy < ny; ++iy)
        if (e.contains(ps.x_slice(s, iy))) ys.bits |= 1u << iy;
      in = f.contains(ys);
    } else {
      SubsetMask xs = SubsetMask::empty_set(nx);
      for (int ix = 0; ix < nx; ++ix) {
        SubsetMask slice = SubsetMask::empty_set(ny);
        for (int iy = 0; iy < ny; ++iy)
          if (s.contains(ps.pair_index(ix, iy))) slice.bits |= 1u << iy;
        if (f.contains(slice)) xs.bits |= 1u << ix;
      }
      in = e.contains(xs);
    }
    if (in) members.push_back(s);
  }
  return Family(ps.product_universe(), members);
}

Family product_self_aso(const Family& e, const Family& f, IntegrationOrder order) {
  require(is_self_aso(e), "product_self_aso: first factor must be self-Aso");
  require(is_self_aso(f), "product_self_aso: second factor must be self-Aso");
  return product_raw(e, f, order);
}

namespace {

Universe make_tuple_universe(const Universe& base, int arity) {
  require(arity >= 1, "TupleSpace: arity must be positive");
  std::size_t count = 1;
  for (int i = 0; i < arity; ++i) {
    count *= static_cast<std::size_t>(base.size());
    require(count <= static_cast<std::size_t>(max_universe_size),
            "TupleSpace: tuple universe exceeds size cap");
  }
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    std::string l = "(";
    std::size_t rem = t;
    std::size_t stride = count;
    for (int pos = 0; pos < arity; ++pos) {
      stride /= static_cast<std::size_t>(base.size());
      if (pos > 0) l += ",";
      l += base.label(static_cast<int>(rem / stride));
      rem %= stride;
    }
    l += ")";
    labels.push_back(l);
  }
  return Universe(labels);
}

}  // namespace

TupleSpace::TupleSpace(Universe base, int arity)
    : base_(std::move(base)), arity_(arity), tuple_(make_tuple_universe(base_, arity_)) {}

int TupleSpace::component(int tuple_index, int pos) const {
  int stride = 1;
  for (int i = pos + 1; i < arity_; ++i) stride *= base_.size();
  return (tuple_index / stride) % base_.size();
}

int TupleSpace::tuple_index(std::span<const int> components) const {
  require(static_cast<int>(components.size()) == arity_, "TupleSpace: wrong component count");
  int t = 0;
  for (int c : components) {
    require(c >= 0 && c < base_.size(), "TupleSpace: component out of range");
    t = t * base_.size() + c;
  }
  return t;
}

SubsetMask TupleSpace::majority_tuples(SubsetMask s) const {
  int need = arity_ / 2 + 1;
  SubsetMask out = SubsetMask::empty_set(tuple_.size());
  for (int t = 0; t < tuple_.size(); ++t) {
    int inside = 0;
    for (int pos = 0; pos < arity_; ++pos)
      if (s.contains(component(t, pos))) ++inside;
    if (inside >= need) out.bits |= 1u << t;
  }
  return out;
}

Family majority_projection(const Family& f, const TupleSpace& ts) {
  require(ts.arity() % 2 == 1, "majority_projection: tuple length must be odd");
  require(f.universe() == ts.tuple_universe(),
          "majority_projection: family must live on the tuple universe");
  require(is_self_aso(f), "majority_projection: family must be self-Aso");
  int n = ts.base().size();
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    SubsetMask s{b, n};
    if (f.contains(ts.majority_tuples(s))) members.push_back(s);
  }
  return Family(ts.base(), members);
}

}  // namespace setfam
