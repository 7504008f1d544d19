#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace setfam {

// Value in {0, 1, ..., inf} with saturating addition. Finite values are
// capped at 2^32-1; a finite sum that would exceed the cap saturates to inf.
class ExtNat {
 public:
  static constexpr std::uint64_t finite_cap = 0xffffffffULL;

  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t n) : v_(n) {
    if (n > finite_cap) throw std::out_of_range("ExtNat: finite value exceeds cap");
  }

  static constexpr ExtNat inf() {
    ExtNat e;
    e.v_ = inf_value;
    return e;
  }

  constexpr bool is_inf() const { return v_ == inf_value; }
  constexpr bool is_finite() const { return v_ != inf_value; }

  constexpr std::uint64_t finite_value() const {
    if (is_inf()) throw std::logic_error("ExtNat: finite_value() called on inf");
    return v_;
  }

  friend constexpr bool operator==(ExtNat, ExtNat) = default;
  friend constexpr auto operator<=>(ExtNat a, ExtNat b) { return a.v_ <=> b.v_; }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_inf() || b.is_inf()) return inf();
    std::uint64_t s = a.v_ + b.v_;
    if (s > finite_cap) return inf();
    return ExtNat(s);
  }
  constexpr ExtNat& operator+=(ExtNat o) { return *this = *this + o; }

  std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

 private:
  static constexpr std::uint64_t inf_value = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_ = 0;
};

// Empty sum is 0.
inline ExtNat extnat_sum(std::span<const ExtNat> xs) {
  ExtNat s = 0;
  for (ExtNat x : xs) s += x;
  return s;
}

// Empty min is inf, empty max is 0 (lattice conventions).
inline ExtNat extnat_min(std::span<const ExtNat> xs) {
  ExtNat m = ExtNat::inf();
  for (ExtNat x : xs)
    if (x < m) m = x;
  return m;
}

inline ExtNat extnat_max(std::span<const ExtNat> xs) {
  ExtNat m = 0;
  for (ExtNat x : xs)
    if (x > m) m = x;
  return m;
}

}  // namespace setfam
