#include "setfam/multifamily.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "setfam/enumerate.hpp"

namespace setfam {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_increasing(const MultiFamily& m, const char* who) {
  if (!is_increasing(m)) throw std::invalid_argument(std::string(who) + ": multi-family must be increasing");
}

}  // namespace

MultiFamily::MultiFamily(Universe u)
    : universe_(std::move(u)), values_(std::size_t{1} << universe_.size(), ExtNat(0)) {}

MultiFamily::MultiFamily(Universe u, std::vector<ExtNat> values)
    : universe_(std::move(u)), values_(std::move(values)) {
  require(values_.size() == (std::size_t{1} << universe_.size()),
          "MultiFamily: value table must have 2^n entries");
}

MultiFamily MultiFamily::constant(Universe u, ExtNat v) {
  MultiFamily m(std::move(u));
  std::fill(m.values_.begin(), m.values_.end(), v);
  return m;
}

ExtNat MultiFamily::value(SubsetMask s) const {
  require(s.size == universe_.size(), "MultiFamily: mask sized to wrong universe");
  return values_[s.bits];
}

MultiFamily MultiFamily::with_value(SubsetMask s, ExtNat v) const {
  require(s.size == universe_.size(), "MultiFamily: mask sized to wrong universe");
  MultiFamily out = *this;
  out.values_[s.bits] = v;
  return out;
}

MultiSet::MultiSet(Universe u)
    : universe_(std::move(u)), mult_(static_cast<std::size_t>(universe_.size()), ExtNat(0)) {}

MultiSet::MultiSet(Universe u, std::vector<ExtNat> mult)
    : universe_(std::move(u)), mult_(std::move(mult)) {
  require(mult_.size() == static_cast<std::size_t>(universe_.size()),
          "MultiSet: multiplicity table must have n entries");
}

SubsetMask MultiSet::support() const {
  SubsetMask s = SubsetMask::empty_set(universe_.size());
  for (int i = 0; i < universe_.size(); ++i)
    if (mult_[static_cast<std::size_t>(i)] > ExtNat(0)) s.bits |= 1u << i;
  return s;
}

bool is_increasing(const MultiFamily& m) {
  int n = m.universe().size();
  const auto& v = m.values();
  for (std::uint32_t s = 0; s <= SubsetMask::full_bits(n); ++s)
    for (int i = 0; i < n; ++i)
      if (!((s >> i) & 1u) && v[s] > v[s | (1u << i)]) return false;
  return true;
}

bool is_decreasing(const MultiFamily& m) {
  int n = m.universe().size();
  const auto& v = m.values();
  for (std::uint32_t s = 0; s <= SubsetMask::full_bits(n); ++s)
    for (int i = 0; i < n; ++i)
      if (!((s >> i) & 1u) && v[s] < v[s | (1u << i)]) return false;
  return true;
}

MultiFamily indicator_of_family(const Family& f) {
  int n = f.universe().size();
  std::vector<ExtNat> v(std::size_t{1} << n, ExtNat(0));
  for (std::uint32_t s = 0; s <= SubsetMask::full_bits(n); ++s)
    if (f.contains({s, n})) v[s] = 1;
  return MultiFamily(f.universe(), std::move(v));
}

Family family_of_indicator(const MultiFamily& m) {
  int n = m.universe().size();
  std::vector<SubsetMask> members;
  for (std::uint32_t s = 0; s <= SubsetMask::full_bits(n); ++s) {
    ExtNat v = m.values()[s];
    require(v == ExtNat(0) || v == ExtNat(1),
            "family_of_indicator: values must be 0 or 1");
    if (v == ExtNat(1)) members.push_back({s, n});
  }
  return Family(m.universe(), members);
}

MultiFamily co_multifamily(const MultiFamily& m) {
  int n = m.universe().size();
  std::uint32_t full = SubsetMask::full_bits(n);
  std::vector<ExtNat> v(std::size_t{1} << n);
  for (std::uint32_t s = 0; s <= full; ++s) v[s] = m.values()[full & ~s];
  return MultiFamily(m.universe(), std::move(v));
}

MultiFamily out_core(const MultiFamily& m) {
  require_increasing(m, "out_core");
  int n = m.universe().size();
  std::uint32_t count = 1u << n;
  // For increasing m the min over covers is attained on disjoint covers, so
  // binary disjoint splits in popcount order reach every decomposition.
  std::vector<ExtNat> out(m.values().begin(), m.values().end());
  std::vector<std::uint32_t> order(count);
  for (std::uint32_t s = 0; s < count; ++s) order[s] = s;
  std::sort(order.begin(), order.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint32_t s : order) {
    if (std::popcount(s) < 2) continue;
    for (std::uint32_t a = (s - 1) & s; a != 0; a = (a - 1) & s) {
      ExtNat cand = out[a] + out[s & ~a];
      if (cand < out[s]) out[s] = cand;
    }
  }
  return MultiFamily(m.universe(), std::move(out));
}

MultiFamily inn_hull(const MultiFamily& m) {
  require_increasing(m, "inn_hull");
  int n = m.universe().size();
  std::uint32_t count = 1u << n;
  // Repeating the empty part pushes the sup to infinity whenever the empty
  // set has positive value.
  if (m.values()[0] > ExtNat(0)) return MultiFamily::constant(m.universe(), ExtNat::inf());
  std::vector<ExtNat> out(m.values().begin(), m.values().end());
  std::vector<std::uint32_t> order(count);
  for (std::uint32_t s = 0; s < count; ++s) order[s] = s;
  std::sort(order.begin(), order.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint32_t s : order) {
    if (std::popcount(s) < 2) continue;
    for (std::uint32_t a = (s - 1) & s; a != 0; a = (a - 1) & s) {
      ExtNat cand = out[a] + out[s & ~a];
      if (cand > out[s]) out[s] = cand;
    }
  }
  return MultiFamily(m.universe(), std::move(out));
}

bool is_outer(const MultiFamily& m) {
  require_increasing(m, "is_outer");
  return out_core(m) == m;
}

bool is_inner(const MultiFamily& m) {
  require_increasing(m, "is_inner");
  return inn_hull(m) == m;
}

MultiFamily push_multifamily(const TotalMap& map, const MultiFamily& m) {
  require(map.domain() == m.universe(), "push_multifamily: map domain must match universe");
  int ny = map.codomain().size();
  std::vector<ExtNat> v(std::size_t{1} << ny);
  for (std::uint32_t s = 0; s <= SubsetMask::full_bits(ny); ++s)
    v[s] = m.value(map.preimage({s, ny}));
  return MultiFamily(map.codomain(), std::move(v));
}

MultiSet star_multiset(const MultiFamily& m) {
  int n = m.universe().size();
  std::vector<ExtNat> mult(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    mult[static_cast<std::size_t>(i)] = m.value(SubsetMask::singleton(i, n));
  return MultiSet(m.universe(), std::move(mult));
}

MultiSet multi_image(const TotalMap& map, const MultiSet& l) {
  require(map.domain() == l.universe(), "multi_image: map domain must match universe");
  std::vector<ExtNat> mult(static_cast<std::size_t>(map.codomain().size()), ExtNat(0));
  for (int i = 0; i < map.domain().size(); ++i)
    mult[static_cast<std::size_t>(map(i))] += l.multiplicity(i);
  return MultiSet(map.codomain(), std::move(mult));
}

Family upper_level_family(const MultiFamily& m, ExtNat threshold) {
  require_increasing(m, "upper_level_family");
  require(threshold.is_finite(), "upper_level_family: threshold must be finite");
  int n = m.universe().size();
  std::vector<SubsetMask> members;
  for (std::uint32_t s = 0; s <= SubsetMask::full_bits(n); ++s)
    if (m.values()[s] > threshold) members.push_back({s, n});
  return Family(m.universe(), members);
}

}  // namespace setfam
