#include "setfam/enumerate.hpp"

namespace setfam {

std::vector<SubsetMask> all_masks(int n) {
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) out.push_back(SubsetMask{b, n});
  return out;
}

std::vector<std::pair<SubsetMask, SubsetMask>> cover_decompositions(SubsetMask s) {
  std::vector<std::pair<SubsetMask, SubsetMask>> out;
  for_each_submask(s, [&](SubsetMask a) {
    if (a.bits == s.bits) return;
    // b must contain s \ a; its overlap with a is free.
    SubsetMask rest = s.minus(a);
    for_each_submask(a, [&](SubsetMask c) {
      SubsetMask b = rest.union_with(c);
      if (b.bits == s.bits) return;  // b strictly below s
      out.emplace_back(a, b);
    });
  });
  return out;
}

std::vector<std::pair<SubsetMask, SubsetMask>> disjoint_decompositions(SubsetMask s) {
  std::vector<std::pair<SubsetMask, SubsetMask>> out;
  for_each_submask(s, [&](SubsetMask a) {
    if (a.empty() || a.bits == s.bits) return;
    out.emplace_back(a, s.minus(a));
  });
  return out;
}

std::vector<std::vector<SubsetMask>> set_partitions(SubsetMask s, int max_parts) {
  std::vector<std::vector<SubsetMask>> out;
  std::vector<int> elems = s.elements();
  if (elems.empty()) {
    out.push_back({});
    return out;
  }
  // Restricted growth walk: element j joins an existing block or opens the
  // next one, so each partition is produced exactly once.
  struct Walker {
    const std::vector<int>& elems;
    int size;
    int max_parts;
    std::vector<std::vector<SubsetMask>>& out;
    std::vector<SubsetMask> parts;

    void step(std::size_t j, int used) {
      if (j == elems.size()) {
        out.push_back(parts);
        return;
      }
      int e = elems[j];
      for (int b = 0; b < used; ++b) {
        parts[static_cast<std::size_t>(b)].bits |= 1u << e;
        step(j + 1, used);
        parts[static_cast<std::size_t>(b)].bits &= ~(1u << e);
      }
      if (max_parts < 0 || used < max_parts) {
        parts.push_back(SubsetMask::singleton(e, size));
        step(j + 1, used + 1);
        parts.pop_back();
      }
    }
  };
  Walker w{elems, s.size, max_parts, out, {}};
  w.step(0, 0);
  return out;
}

}  // namespace setfam
