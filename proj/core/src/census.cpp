#include <sstream>
#include <stdexcept>

#include "setfam/packed.hpp"
#include "setfam/verify.hpp"

namespace setfam {

Universe default_universe(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return Universe(std::move(labels));
}

SpeciesFilter species_filter_from_string(const std::string& name) {
  if (name == "all") return SpeciesFilter::all;
  if (name == "eventual") return SpeciesFilter::eventual;
  if (name == "self-aso") return SpeciesFilter::self_aso;
  if (name == "self-aso-eventual") return SpeciesFilter::self_aso_eventual;
  if (name == "filter") return SpeciesFilter::filter;
  if (name == "ultrafilter") return SpeciesFilter::ultrafilter;
  if (name == "inner-eventual") return SpeciesFilter::inner_eventual;
  throw std::invalid_argument("unknown species filter '" + name + "'");
}

namespace {

bool packed_matches(packed::FamilyBits f, int n, SpeciesFilter filter) {
  using namespace packed;
  switch (filter) {
    case SpeciesFilter::all:
      return true;
    case SpeciesFilter::eventual:
      return is_eventual(f, n);
    case SpeciesFilter::self_aso:
      return is_self_aso(f, n);
    case SpeciesFilter::self_aso_eventual:
      return is_self_aso(f, n) && is_eventual(f, n);
    case SpeciesFilter::filter:
      return is_filter(f, n);
    case SpeciesFilter::ultrafilter:
      return is_filter(f, n) && is_self_aso(f, n);
    case SpeciesFilter::inner_eventual:
      return is_eventual(f, n) && condition_I_eventual(f, n);
  }
  return false;
}

}  // namespace

void enumerate_families(int n, SpeciesFilter filter,
                        const std::function<void(const Family&)>& fn) {
  if (n < 1 || n > 4) throw std::invalid_argument("enumerate_families: n must be 1..4");
  Universe u = default_universe(n);
  std::uint64_t total = packed::all_families_mask(n);
  for (std::uint64_t f = 0;; ++f) {
    if (packed_matches(f, n, filter)) fn(Family::from_packed(u, f));
    if (f == total) break;
  }
}

std::vector<Family> enumerate_families_vec(int n, SpeciesFilter filter) {
  std::vector<Family> out;
  enumerate_families(n, filter, [&](const Family& f) { out.push_back(f); });
  return out;
}

std::uint64_t count_families(int n, SpeciesFilter filter) {
  if (n < 1 || n > 4) throw std::invalid_argument("count_families: n must be 1..4");
  std::uint64_t total = packed::all_families_mask(n);
  std::uint64_t count = 0;
  for (std::uint64_t f = 0;; ++f) {
    if (packed_matches(f, n, filter)) ++count;
    if (f == total) break;
  }
  return count;
}

CensusTable census(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("census: n must be 1..4");
  using namespace packed;
  CensusTable t;
  t.n = n;
  t.ultrafilters_all_principal = true;
  t.ultrafilter_iff_self_aso_filter = true;

  // Principal ultrafilters U_x as packed bitmaps.
  std::vector<FamilyBits> principal;
  for (int x = 0; x < n; ++x) {
    FamilyBits bits = 0;
    for (std::uint32_t s = 0; s < mask_count(n); ++s)
      if ((s >> x) & 1u) bits |= FamilyBits{1} << s;
    principal.push_back(bits);
  }

  std::uint64_t total = all_families_mask(n);
  for (std::uint64_t f = 0;; ++f) {
    ++t.total_families;
    bool ev = is_eventual(f, n);
    bool coev = is_co_eventual(f, n);
    bool sa = is_self_aso(f, n);
    bool flt = is_filter(f, n);
    bool uf = flt && sa;
    if (ev) ++t.counts["eventual"];
    if (coev) ++t.counts["co_eventual"];
    if (sa) ++t.counts["self_aso"];
    if (flt) ++t.counts["filter"];
    if (uf) ++t.counts["ultrafilter"];
    if (ev && sa) ++t.cross["self_aso_and_eventual"];
    if (sa && flt) ++t.cross["self_aso_and_filter"];
    if (sa && !flt) ++t.cross["self_aso_not_filter"];
    if (ev) {
      bool o = condition_O_eventual(f, n);
      bool i = condition_I_eventual(f, n);
      if (o) ++t.counts["outer_eventual"];
      if (i) ++t.counts["inner_eventual"];
      if (o && i) ++t.counts["finitely_additive"];
    }
    if (uf) {
      bool is_principal = false;
      for (FamilyBits p : principal)
        if (p == f) is_principal = true;
      if (!is_principal) t.ultrafilters_all_principal = false;
    }
    // Independent route: an ultrafilter is exactly a family through which
    // NOT, AND, OR and inclusion all pass.
    bool connectives = sa && ev && connective_and(f, n) && connective_or(f, n);
    if (connectives != uf) t.ultrafilter_iff_self_aso_filter = false;
    if (f == total) break;
  }
  return t;
}

nlohmann::json CensusTable::to_json() const {
  return nlohmann::json{{"n", n},
                        {"total_families", total_families},
                        {"counts", counts},
                        {"cross", cross},
                        {"assertions",
                         {{"ultrafilters_all_principal", ultrafilters_all_principal},
                          {"ultrafilter_iff_self_aso_filter", ultrafilter_iff_self_aso_filter}}}};
}

std::string CensusTable::to_table() const {
  std::ostringstream os;
  os << "census n=" << n << "  families=" << total_families << "\n";
  for (const auto& [k, v] : counts) os << "  " << k << ": " << v << "\n";
  for (const auto& [k, v] : cross) os << "  " << k << ": " << v << "\n";
  os << "  ultrafilters all principal: " << (ultrafilters_all_principal ? "yes" : "no") << "\n";
  os << "  ultrafilter == self-Aso filter: " << (ultrafilter_iff_self_aso_filter ? "yes" : "no")
     << "\n";
  return os.str();
}

MultiFamily sample_increasing_multifamily(const Universe& u, std::mt19937_64& rng) {
  int n = u.size();
  std::uint32_t count = 1u << n;
  static constexpr ExtNat chain[4] = {ExtNat(0), ExtNat(1), ExtNat(2), ExtNat::inf()};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<ExtNat> v(count);
  for (auto& x : v) x = chain[pick(rng)];
  // Monotone repair upward: every set gets at least the value of each
  // one-smaller subset.
  for (std::uint32_t s = 0; s < count; ++s)
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) {
        ExtNat below = v[s & ~(1u << i)];
        if (below > v[s]) v[s] = below;
      }
  return MultiFamily(u, std::move(v));
}

Family sample_self_aso_eventual_family(const Universe& u, std::mt19937_64& rng) {
  int n = u.size();
  // Weighted majority with odd total weight: self-Aso and eventual, no ties.
  std::uniform_int_distribution<int> w(1, 9);
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(n));
  std::uint64_t total;
  do {
    total = 0;
    for (auto& x : weight) {
      x = static_cast<std::uint64_t>(w(rng));
      total += x;
    }
  } while (total % 2 == 0);
  std::vector<SubsetMask> members;
  for (std::uint32_t s = 0; s <= SubsetMask::full_bits(n); ++s) {
    std::uint64_t sum = 0;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) sum += weight[static_cast<std::size_t>(i)];
    if (2 * sum > total) members.push_back({s, n});
  }
  return Family(u, members);
}

}  // namespace setfam
