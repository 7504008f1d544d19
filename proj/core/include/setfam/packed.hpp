#pragma once

#include <cstdint>

namespace setfam::packed {

// Families over universes of size n <= 4 packed into one word: bit s is the
// membership of the subset with mask bits s. Used by the exhaustive sweeps,
// where 2^(2^n) families would make Family objects too slow.

using FamilyBits = std::uint64_t;

inline std::uint32_t mask_count(int n) { return 1u << n; }
inline FamilyBits all_families_mask(int n) {
  return n == 4 ? 0xffffULL : (FamilyBits{1} << mask_count(n)) - 1;
}

bool is_eventual(FamilyBits f, int n);
bool is_co_eventual(FamilyBits f, int n);
FamilyBits complement_family(FamilyBits f, int n);
FamilyBits aso(FamilyBits f, int n);
bool is_self_aso(FamilyBits f, int n);
bool is_filter(FamilyBits f, int n);
bool condition_O_eventual(FamilyBits f, int n);  // caller guarantees eventual
bool condition_I_eventual(FamilyBits f, int n);

// The logical connectives plugged into the family, both directions:
// AND: S /\ T in F  iff  S in F and T in F.
// OR:  S \/ T in F  iff  S in F or T in F.
bool connective_and(FamilyBits f, int n);
bool connective_or(FamilyBits f, int n);

}  // namespace setfam::packed
