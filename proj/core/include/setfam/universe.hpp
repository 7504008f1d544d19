#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace setfam {

// Hard cap so subsets fit in a 16-bit mask and dense tables stay small.
inline constexpr int max_universe_size = 16;

// Finite ordered ground set. Labels are distinct and the index <-> label
// bijection is fixed at construction.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(const std::string& label) const;
  int index_of(const std::string& label) const;  // throws if absent

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

// Subset of a universe as a characteristic bit vector. Carries the universe
// size so complements are well defined without extra context.
struct SubsetMask {
  std::uint32_t bits = 0;
  int size = 0;

  static constexpr std::uint32_t full_bits(int n) {
    return n == 0 ? 0u : (0xffffffffu >> (32 - n));
  }

  static SubsetMask empty_set(int n) { return {0u, n}; }
  static SubsetMask full_set(int n) { return {full_bits(n), n}; }
  static SubsetMask singleton(int i, int n) { return {1u << i, n}; }
  static SubsetMask of(std::initializer_list<int> elems, int n) {
    SubsetMask m{0u, n};
    for (int e : elems) m.bits |= 1u << e;
    return m;
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  int popcount() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool full() const { return bits == full_bits(size); }

  SubsetMask with(int i) const { return {bits | (1u << i), size}; }
  SubsetMask without(int i) const { return {bits & ~(1u << i), size}; }
  SubsetMask complement() const { return {~bits & full_bits(size), size}; }
  SubsetMask union_with(SubsetMask o) const { return {bits | o.bits, size}; }
  SubsetMask intersect(SubsetMask o) const { return {bits & o.bits, size}; }
  SubsetMask minus(SubsetMask o) const { return {bits & ~o.bits, size}; }

  bool subset_of(SubsetMask o) const { return (bits & ~o.bits) == 0; }
  bool disjoint_with(SubsetMask o) const { return (bits & o.bits) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < size; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  auto operator<=>(const SubsetMask&) const = default;
};

// Total map between two universes, given element-wise.
class TotalMap {
 public:
  TotalMap(Universe domain, Universe codomain, std::vector<int> image);

  static TotalMap identity(const Universe& u);
  static TotalMap from_labels(const Universe& domain, const Universe& codomain,
                              const std::vector<std::string>& image_labels);

  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i)); }
  const Universe& domain() const { return domain_; }
  const Universe& codomain() const { return codomain_; }

  // f^{-1}(S) for S a subset of the codomain.
  SubsetMask preimage(SubsetMask s) const;

 private:
  Universe domain_;
  Universe codomain_;
  std::vector<int> image_;
};

}  // namespace setfam
