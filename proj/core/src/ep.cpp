#include "setfam/ep.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace setfam {

namespace {

constexpr std::size_t max_combined_period = 1 << 14;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<bool> bits_of(const std::string& s, const char* who) {
  std::vector<bool> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument(std::string(who) + ": bits must be '0' or '1'");
    out.push_back(c == '1');
  }
  return out;
}

std::string string_of(const std::vector<bool>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

bool all_equal_to(const std::vector<bool>& bits, bool v) {
  return std::all_of(bits.begin(), bits.end(), [v](bool b) { return b == v; });
}

std::size_t lcm_period(std::size_t a, std::size_t b) {
  std::size_t l = std::lcm(a, b);
  if (l > max_combined_period)
    throw std::invalid_argument("EpSet: combined period too large");
  return l;
}

}  // namespace

EpSet::EpSet() : prefix_(), pattern_{false} {}

EpSet::EpSet(std::vector<bool> prefix, std::vector<bool> pattern)
    : prefix_(std::move(prefix)), pattern_(std::move(pattern)) {
  require(!pattern_.empty(), "EpSet: pattern must be nonempty");
  canonicalize();
}

EpSet::EpSet(const std::string& prefix, const std::string& pattern)
    : EpSet(bits_of(prefix, "EpSet"), bits_of(pattern, "EpSet")) {}

void EpSet::canonicalize() {
  // Primitive pattern: the shortest divisor-length word that tiles it.
  std::size_t q = pattern_.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool tiles = true;
    for (std::size_t i = d; tiles && i < q; ++i) tiles = pattern_[i] == pattern_[i % d];
    if (tiles) {
      pattern_.resize(d);
      break;
    }
  }
  // Shortest prefix: while its last bit agrees with the pattern's last bit,
  // the bit can be absorbed by rotating the pattern one step right.
  while (!prefix_.empty() && prefix_.back() == pattern_.back()) {
    prefix_.pop_back();
    bool last = pattern_.back();
    pattern_.pop_back();
    pattern_.insert(pattern_.begin(), last);
  }
}

bool EpSet::contains(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[static_cast<std::size_t>(n)];
  return pattern_[static_cast<std::size_t>((n - prefix_.size()) % pattern_.size())];
}

std::string EpSet::prefix_string() const { return string_of(prefix_); }
std::string EpSet::pattern_string() const { return string_of(pattern_); }

EpSet EpSet::naturals() { return EpSet(std::vector<bool>{}, std::vector<bool>{true}); }
EpSet EpSet::evens() { return EpSet(std::vector<bool>{}, std::vector<bool>{true, false}); }
EpSet EpSet::odds() { return EpSet(std::vector<bool>{}, std::vector<bool>{false, true}); }

EpSet EpSet::finite_set(const std::vector<std::uint64_t>& elements) {
  std::uint64_t top = 0;
  for (auto e : elements) top = std::max(top, e + 1);
  std::vector<bool> prefix(static_cast<std::size_t>(top), false);
  for (auto e : elements) prefix[static_cast<std::size_t>(e)] = true;
  return EpSet(std::move(prefix), {false});
}

EpSet EpSet::from_threshold(std::uint64_t start) {
  return EpSet(std::vector<bool>(static_cast<std::size_t>(start), false), {true});
}

namespace {

template <typename Combine>
EpSet combine(const EpSet& a, const EpSet& b, Combine&& op) {
  std::size_t p = std::max(a.prefix_length(), b.prefix_length());
  std::size_t q = lcm_period(a.period(), b.period());
  std::vector<bool> prefix(p), pattern(q);
  for (std::size_t n = 0; n < p; ++n) prefix[n] = op(a.contains(n), b.contains(n));
  for (std::size_t j = 0; j < q; ++j) pattern[j] = op(a.contains(p + j), b.contains(p + j));
  return EpSet(std::move(prefix), std::move(pattern));
}

}  // namespace

EpSet ep_complement(const EpSet& s) {
  std::vector<bool> prefix(s.prefix()), pattern(s.pattern());
  prefix.flip();
  pattern.flip();
  return EpSet(std::move(prefix), std::move(pattern));
}

EpSet ep_union(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

EpSet ep_intersect(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

EpSet ep_minus(const EpSet& a, const EpSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

EpSet ep_toggle(const EpSet& s, std::uint64_t n) {
  std::size_t p = s.prefix_length(), q = s.period();
  if (n < p) {
    std::vector<bool> prefix(s.prefix());
    prefix[static_cast<std::size_t>(n)] = !prefix[static_cast<std::size_t>(n)];
    return EpSet(std::move(prefix), s.pattern());
  }
  // Materialize the prefix out to n and realign the pattern's phase.
  std::size_t np = static_cast<std::size_t>(n) + 1;
  std::vector<bool> prefix(np);
  for (std::size_t i = 0; i < np; ++i) prefix[i] = s.contains(i);
  prefix[np - 1] = !prefix[np - 1];
  std::size_t shift = (np - p) % q;
  std::vector<bool> pattern(q);
  for (std::size_t j = 0; j < q; ++j) pattern[j] = s.pattern()[(j + shift) % q];
  return EpSet(std::move(prefix), std::move(pattern));
}

bool ep_is_empty(const EpSet& s) {
  return all_equal_to(s.prefix(), false) && all_equal_to(s.pattern(), false);
}

bool ep_is_finite(const EpSet& s) { return all_equal_to(s.pattern(), false); }

bool ep_is_cofinite(const EpSet& s) { return all_equal_to(s.pattern(), true); }

bool ep_subset_of(const EpSet& a, const EpSet& b) { return ep_is_empty(ep_minus(a, b)); }

ExtNat gap(const EpSet& s) {
  if (ep_is_finite(s)) return ExtNat::inf();
  std::size_t p = s.prefix_length(), q = s.period();
  // Every gap with left endpoint in [p, p+q) recurs each period; gaps
  // further out are shifted copies and gaps before p occur finitely often.
  std::uint64_t best = 0;
  for (std::size_t a = p; a < p + q; ++a) {
    if (!s.contains(a)) continue;
    std::size_t b = a + 1;
    while (!s.contains(b)) ++b;  // next element exists within a + q
    best = std::max<std::uint64_t>(best, b - a - 1);
  }
  return ExtNat(best);
}

ExtNat cogap(const EpSet& s) { return gap(ep_complement(s)); }

ExtNat prose_gap_bound(const EpSet& s) {
  std::size_t p = s.prefix_length(), q = s.period();
  std::vector<std::uint64_t> elems;
  if (ep_is_finite(s)) {
    for (std::size_t n = 0; n < p; ++n)
      if (s.contains(n)) elems.push_back(n);
  } else {
    // Pairs with left endpoint below p+q cover every gap value that occurs.
    for (std::size_t n = 0; n < p + 2 * q; ++n)
      if (s.contains(n)) elems.push_back(n);
  }
  std::uint64_t best = 0;
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
    if (!ep_is_finite(s) && elems[i] >= p + q) break;
    best = std::max(best, elems[i + 1] - elems[i] - 1);
  }
  return ExtNat(best);
}

CogapDiagnostic cogap_diagnostic(const EpSet& s) {
  CogapDiagnostic d{cogap(s), prose_gap_bound(s), false};
  d.agree = d.cogap_value == d.prose_c_s;
  return d;
}

bool in_G(const EpSet& s) { return !ep_is_finite(s); }
bool in_H(const EpSet& s) { return ep_is_cofinite(s); }

bool finitely_insensitive_probe(const std::function<ExtNat(const EpSet&)>& value_fn,
                                const EpSet& s, const std::vector<std::uint64_t>& toggles) {
  ExtNat base = value_fn(s);
  EpSet cur = s;
  for (std::uint64_t n : toggles) {
    cur = ep_toggle(cur, n);
    if (value_fn(cur) != base) return false;
  }
  return true;
}

std::pair<EpSet, EpSet> even_odd_split(const EpSet& s) {
  return {ep_intersect(s, EpSet::evens()), ep_intersect(s, EpSet::odds())};
}

ExtNat out_cogap(const EpSet& s) { return extnat_min(std::array{ExtNat(2), cogap(s)}); }

bool out_cogap_beaten_by_bounded_cover(const EpSet& s, int max_parts, int period_bound) {
  ExtNat target = out_cogap(s);
  // Cover sums are nonnegative, and finitely many finite parts cannot cover
  // an infinite set, so targets 0 and 1 cannot be undercut.
  if (target <= ExtNat(1) || max_parts < 2) return false;
  // target == 2: a cheaper cover has total <= 1, so it is one infinite part
  // with coGap <= 1 plus finite leftovers. Sweep the infinite part as
  // S /\ P over all periodic patterns P up to the period bound; any
  // eventually periodic part of bounded period agrees with one of these up
  // to a finite set, which coGap ignores.
  for (int q = 1; q <= period_bound; ++q) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << q); ++bits) {
      std::vector<bool> pattern(static_cast<std::size_t>(q));
      for (int j = 0; j < q; ++j) pattern[static_cast<std::size_t>(j)] = (bits >> j) & 1u;
      EpSet part = ep_intersect(s, EpSet({}, pattern));
      if (cogap(part) <= ExtNat(1) && ep_is_finite(ep_minus(s, part))) return true;
    }
  }
  return false;
}

std::vector<EpSet> inn_cogap_witness(const EpSet& s, int k) {
  require(k >= 1, "inn_cogap_witness: K must be positive");
  require(!ep_is_finite(s), "inn_cogap_witness: set must be infinite");
  if (k == 1) return {s};
  std::size_t p = s.prefix_length(), q = s.period();
  std::size_t window = p + q * static_cast<std::size_t>(k);
  std::vector<bool> member(window + 1);
  for (std::size_t n = 0; n <= window; ++n) member[n] = s.contains(n);

  bool cofinite_tail = ep_is_cofinite(s);
  // Round-robin index per element: by maximal run for sets with gaps (each
  // part keeps whole runs, so it inherits coGap >= 1), by residue class for
  // an all-ones tail (runs never end there).
  std::vector<int> slot(window + 1, 0);
  if (cofinite_tail) {
    for (std::size_t n = 0; n <= window; ++n) slot[n] = static_cast<int>(n % static_cast<std::size_t>(k));
  } else {
    int run_index = -1;
    for (std::size_t n = 0; n <= window; ++n) {
      if (!member[n]) continue;
      if (n == 0 || !member[n - 1]) ++run_index;
      slot[n] = run_index % k;
    }
  }

  std::vector<EpSet> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::vector<bool> prefix(p), pattern(q * static_cast<std::size_t>(k));
    for (std::size_t n = 0; n < p; ++n) prefix[n] = member[n] && slot[n] == i;
    for (std::size_t j = 0; j < pattern.size(); ++j)
      pattern[j] = member[p + j] && slot[p + j] == i;
    parts.emplace_back(std::move(prefix), std::move(pattern));
  }
  return parts;
}

// -- sequences ----------------------------------------------------------

EpSequence::EpSequence(Universe u, std::vector<int> prefix, std::vector<int> pattern)
    : universe_(std::move(u)), prefix_(std::move(prefix)), pattern_(std::move(pattern)) {
  require(!pattern_.empty(), "EpSequence: pattern must be nonempty");
  for (int v : prefix_)
    require(v >= 0 && v < universe_.size(), "EpSequence: value out of universe range");
  for (int v : pattern_)
    require(v >= 0 && v < universe_.size(), "EpSequence: value out of universe range");
  canonicalize();
}

EpSequence EpSequence::from_labels(Universe u, const std::vector<std::string>& prefix,
                                   const std::vector<std::string>& pattern) {
  std::vector<int> pre, pat;
  pre.reserve(prefix.size());
  pat.reserve(pattern.size());
  for (const auto& l : prefix) pre.push_back(u.index_of(l));
  for (const auto& l : pattern) pat.push_back(u.index_of(l));
  return EpSequence(std::move(u), std::move(pre), std::move(pat));
}

EpSequence EpSequence::constant(Universe u, int value) {
  return EpSequence(std::move(u), {}, {value});
}

void EpSequence::canonicalize() {
  std::size_t q = pattern_.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool tiles = true;
    for (std::size_t i = d; tiles && i < q; ++i) tiles = pattern_[i] == pattern_[i % d];
    if (tiles) {
      pattern_.resize(d);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == pattern_.back()) {
    prefix_.pop_back();
    int last = pattern_.back();
    pattern_.pop_back();
    pattern_.insert(pattern_.begin(), last);
  }
}

int EpSequence::value_at(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[static_cast<std::size_t>(n)];
  return pattern_[static_cast<std::size_t>((n - prefix_.size()) % pattern_.size())];
}

EpSequence EpSequence::mapped(const TotalMap& map) const {
  require(map.domain() == universe_, "EpSequence::mapped: map domain must match universe");
  std::vector<int> pre(prefix_), pat(pattern_);
  for (int& v : pre) v = map(v);
  for (int& v : pat) v = map(v);
  return EpSequence(map.codomain(), std::move(pre), std::move(pat));
}

EpSet seq_preimage(const EpSequence& x, SubsetMask s) {
  require(s.size == x.universe().size(), "seq_preimage: mask sized to wrong universe");
  std::vector<bool> prefix(x.prefix().size()), pattern(x.pattern().size());
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = s.contains(x.prefix()[i]);
  for (std::size_t j = 0; j < pattern.size(); ++j) pattern[j] = s.contains(x.pattern()[j]);
  return EpSet(std::move(prefix), std::move(pattern));
}

ExtNat nat_family_value(NatFamily f, const EpSet& s) {
  switch (f) {
    case NatFamily::G: return in_G(s) ? ExtNat(1) : ExtNat(0);
    case NatFamily::H: return in_H(s) ? ExtNat(1) : ExtNat(0);
    case NatFamily::CoGap: return cogap(s);
  }
  throw std::invalid_argument("nat_family_value: unknown family");
}

MultiSet seq_limit(const EpSequence& x, const FiniteTopology& t, NatFamily f) {
  require(validate_topology(t), "seq_limit: invalid topology");
  require(t.universe() == x.universe(), "seq_limit: topology universe must match sequence");
  int n = t.universe().size();
  auto opens = t.opens();
  std::vector<ExtNat> mult(static_cast<std::size_t>(n), ExtNat::inf());
  for (int y = 0; y < n; ++y) {
    for (SubsetMask u : opens) {
      if (!u.contains(y)) continue;
      ExtNat v = nat_family_value(f, seq_preimage(x, u));
      if (v < mult[static_cast<std::size_t>(y)]) mult[static_cast<std::size_t>(y)] = v;
    }
  }
  return MultiSet(t.universe(), std::move(mult));
}

}  // namespace setfam
