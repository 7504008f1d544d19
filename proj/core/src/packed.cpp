#include "setfam/packed.hpp"

namespace setfam::packed {

namespace {

inline bool has(FamilyBits f, std::uint32_t mask) { return (f >> mask) & 1u; }

}  // namespace

bool is_eventual(FamilyBits f, int n) {
  std::uint32_t count = mask_count(n);
  for (std::uint32_t s = 0; s < count; ++s) {
    if (!has(f, s)) continue;
    for (int i = 0; i < n; ++i)
      if (!((s >> i) & 1u) && !has(f, s | (1u << i))) return false;
  }
  return true;
}

bool is_co_eventual(FamilyBits f, int n) {
  std::uint32_t count = mask_count(n);
  for (std::uint32_t s = 0; s < count; ++s) {
    if (!has(f, s)) continue;
    for (int i = 0; i < n; ++i)
      if (((s >> i) & 1u) && !has(f, s & ~(1u << i))) return false;
  }
  return true;
}

FamilyBits complement_family(FamilyBits f, int n) { return ~f & all_families_mask(n); }

FamilyBits aso(FamilyBits f, int n) {
  std::uint32_t count = mask_count(n);
  std::uint32_t full = count - 1;
  FamilyBits out = 0;
  for (std::uint32_t s = 0; s < count; ++s)
    if (!has(f, full & ~s)) out |= FamilyBits{1} << s;
  return out;
}

bool is_self_aso(FamilyBits f, int n) { return aso(f, n) == f; }

bool is_filter(FamilyBits f, int n) {
  if (!is_eventual(f, n)) return false;
  std::uint32_t count = mask_count(n);
  for (std::uint32_t s = 0; s < count; ++s) {
    if (!has(f, s)) continue;
    for (std::uint32_t t = s + 1; t < count; ++t)
      if (has(f, t) && !has(f, s & t)) return false;
  }
  return true;
}

bool condition_O_eventual(FamilyBits f, int n) {
  std::uint32_t count = mask_count(n);
  for (std::uint32_t s = 0; s < count; ++s) {
    if (has(f, s)) continue;
    for (std::uint32_t t = s; t < count; ++t)
      if (!has(f, t) && has(f, s | t)) return false;
  }
  return true;
}

bool condition_I_eventual(FamilyBits f, int n) {
  std::uint32_t count = mask_count(n);
  for (std::uint32_t s = 0; s < count; ++s) {
    if (!has(f, s)) continue;
    for (std::uint32_t t = s + 1; t < count; ++t)
      if (has(f, t) && (s & t) == 0) return false;
  }
  return true;
}

bool connective_and(FamilyBits f, int n) {
  std::uint32_t count = mask_count(n);
  for (std::uint32_t s = 0; s < count; ++s)
    for (std::uint32_t t = s; t < count; ++t)
      if (has(f, s & t) != (has(f, s) && has(f, t))) return false;
  return true;
}

bool connective_or(FamilyBits f, int n) {
  std::uint32_t count = mask_count(n);
  for (std::uint32_t s = 0; s < count; ++s)
    for (std::uint32_t t = s; t < count; ++t)
      if (has(f, s | t) != (has(f, s) || has(f, t))) return false;
  return true;
}

}  // namespace setfam::packed
