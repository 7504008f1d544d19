#include "setfam/topology.hpp"

#include <stdexcept>
#include <string>

namespace setfam {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_valid(const FiniteTopology& t, const char* who) {
  if (!t.valid()) throw std::invalid_argument(std::string(who) + ": invalid topology");
}

}  // namespace

FiniteTopology::FiniteTopology(Universe u, const std::vector<SubsetMask>& opens)
    : universe_(std::move(u)), open_(std::size_t{1} << universe_.size(), false) {
  for (SubsetMask s : opens) {
    require(s.size == universe_.size(), "FiniteTopology: open sized to wrong universe");
    open_[s.bits] = true;
  }
  std::uint32_t full = SubsetMask::full_bits(universe_.size());
  valid_ = open_[0] && open_[full];
  for (std::uint32_t a = 0; valid_ && a <= full; ++a) {
    if (!open_[a]) continue;
    for (std::uint32_t b = a + 1; b <= full; ++b) {
      if (!open_[b]) continue;
      if (!open_[a | b] || !open_[a & b]) {
        valid_ = false;
        break;
      }
    }
  }
}

FiniteTopology FiniteTopology::discrete(Universe u) {
  std::vector<SubsetMask> opens;
  int n = u.size();
  for (std::uint32_t s = 0; s <= SubsetMask::full_bits(n); ++s) opens.push_back({s, n});
  return FiniteTopology(std::move(u), opens);
}

FiniteTopology FiniteTopology::indiscrete(Universe u) {
  int n = u.size();
  std::vector<SubsetMask> opens{SubsetMask::empty_set(n), SubsetMask::full_set(n)};
  return FiniteTopology(std::move(u), opens);
}

FiniteTopology FiniteTopology::sierpinski() {
  Universe u({"a", "b"});
  std::vector<SubsetMask> opens{SubsetMask::empty_set(2), SubsetMask::singleton(0, 2),
                                SubsetMask::full_set(2)};
  return FiniteTopology(std::move(u), opens);
}

bool FiniteTopology::is_open(SubsetMask s) const {
  require(s.size == universe_.size(), "FiniteTopology: mask sized to wrong universe");
  return open_[s.bits];
}

std::vector<SubsetMask> FiniteTopology::opens() const {
  std::vector<SubsetMask> out;
  for (std::uint32_t s = 0; s < open_.size(); ++s)
    if (open_[s]) out.push_back({s, universe_.size()});
  return out;
}

bool validate_topology(const FiniteTopology& t) { return t.valid(); }

bool is_hausdorff(const FiniteTopology& t) {
  require_valid(t, "is_hausdorff");
  int n = t.universe().size();
  auto opens = t.opens();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool separated = false;
      for (std::size_t i = 0; !separated && i < opens.size(); ++i) {
        if (!opens[i].contains(x)) continue;
        for (std::size_t j = 0; j < opens.size(); ++j)
          if (opens[j].contains(y) && opens[i].disjoint_with(opens[j])) {
            separated = true;
            break;
          }
      }
      if (!separated) return false;
    }
  return true;
}

Family closure_family(const Family& f, const FiniteTopology& t) {
  require_valid(t, "closure_family");
  require(f.universe() == t.universe(), "closure_family: universe mismatch");
  int n = t.universe().size();
  auto opens = t.opens();
  std::vector<SubsetMask> members;
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    SubsetMask s{b, n};
    bool in = true;
    for (SubsetMask u : opens)
      if (s.subset_of(u) && !f.contains(u)) {
        in = false;
        break;
      }
    if (in) members.push_back(s);
  }
  return Family(f.universe(), members);
}

SubsetMask limit_set(const Family& f, const FiniteTopology& t) {
  return star(closure_family(f, t));
}

MultiFamily closure_multifamily(const MultiFamily& m, const FiniteTopology& t) {
  require_valid(t, "closure_multifamily");
  require(m.universe() == t.universe(), "closure_multifamily: universe mismatch");
  if (!is_increasing(m))
    throw std::invalid_argument("closure_multifamily: multi-family must be increasing");
  int n = t.universe().size();
  auto opens = t.opens();
  std::vector<ExtNat> v(std::size_t{1} << n, ExtNat::inf());
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    SubsetMask s{b, n};
    for (SubsetMask u : opens)
      if (s.subset_of(u) && m.value(u) < v[b]) v[b] = m.value(u);
  }
  return MultiFamily(m.universe(), std::move(v));
}

MultiSet multiset_limit(const MultiFamily& m, const FiniteTopology& t) {
  return star_multiset(closure_multifamily(m, t));
}

std::optional<int> unique_limit_inner(const Family& f, const FiniteTopology& t) {
  require_valid(t, "unique_limit_inner");
  require(is_hausdorff(t), "unique_limit_inner: topology must be Hausdorff");
  require(condition_I(f), "unique_limit_inner: family must be inner");  // also checks eventual
  SubsetMask lim = limit_set(f, t);
  if (lim.popcount() > 1)
    throw std::logic_error("unique_limit_inner: two limit points for an inner eventual family");
  if (lim.empty()) return std::nullopt;
  return lim.elements().front();
}

bool is_continuous(const TotalMap& map, const FiniteTopology& domain,
                   const FiniteTopology& codomain) {
  require_valid(domain, "is_continuous");
  require_valid(codomain, "is_continuous");
  require(map.domain() == domain.universe() && map.codomain() == codomain.universe(),
          "is_continuous: map does not match the spaces");
  for (SubsetMask v : codomain.opens())
    if (!domain.is_open(map.preimage(v))) return false;
  return true;
}

std::vector<FiniteTopology> enumerate_topologies(const Universe& u) {
  require(u.size() <= 4, "enumerate_topologies: universe size capped at 4");
  int n = u.size();
  std::uint32_t full = SubsetMask::full_bits(n);
  // Choose freely among the 2^n - 2 nontrivial masks, then keep the valid ones.
  std::vector<std::uint32_t> nontrivial;
  for (std::uint32_t s = 1; s < full; ++s) nontrivial.push_back(s);
  std::vector<FiniteTopology> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << nontrivial.size()); ++pick) {
    std::vector<SubsetMask> opens{SubsetMask::empty_set(n), SubsetMask::full_set(n)};
    for (std::size_t i = 0; i < nontrivial.size(); ++i)
      if ((pick >> i) & 1u) opens.push_back({nontrivial[i], n});
    FiniteTopology t(u, opens);
    if (t.valid()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace setfam
