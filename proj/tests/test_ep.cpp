#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "setfam/ep.hpp"
#include "setfam/verify.hpp"

using namespace setfam;

namespace {

oracles::EpBits window_of(const EpSet& s) {
  return oracles::EpBits(s.prefix_length(), s.period(),
                         [&](std::size_t n) { return s.contains(n); });
}

oracles::EpBits complement_window_of(const EpSet& s) {
  return oracles::EpBits(s.prefix_length(), s.period(),
                         [&](std::size_t n) { return !s.contains(n); });
}

}  // namespace

TEST_CASE("canonical forms") {
  CHECK(EpSet("1", "01") == EpSet::evens());
  CHECK(EpSet("10", "10") == EpSet::evens());
  CHECK(EpSet("", "1010") == EpSet::evens());
  CHECK(EpSet("", "110110").pattern_string() == "110");
  CHECK(EpSet("0001", "0").prefix_string() == "0001");
  CHECK(EpSet("000100", "0") == EpSet::finite_set({3}));
  CHECK(EpSet("", "0") == EpSet());
  CHECK_THROWS_AS(EpSet("01", ""), std::invalid_argument);
  CHECK_THROWS_AS(EpSet("01", "2"), std::invalid_argument);

  // Canonical representatives agree pointwise with the inputs they came from.
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> plen(0, 10), qlen(1, 10), bit(0, 1);
    std::vector<bool> prefix(static_cast<std::size_t>(plen(rng)));
    for (auto&& b : prefix) b = bit(rng);
    std::vector<bool> pattern(static_cast<std::size_t>(qlen(rng)));
    for (auto&& b : pattern) b = bit(rng);
    EpSet s(prefix, pattern);
    for (std::size_t n = 0; n < 80; ++n) {
      bool raw = n < prefix.size() ? prefix[n]
                                   : pattern[(n - prefix.size()) % pattern.size()];
      CHECK(s.contains(n) == raw);
    }
  }
}

TEST_CASE("boolean algebra on ep sets") {
  CHECK(ep_complement(EpSet::evens()) == EpSet::odds());
  CHECK(ep_union(EpSet::evens(), EpSet::odds()) == EpSet::naturals());
  CHECK(!ep_is_finite(ep_intersect(EpSet::from_threshold(5), EpSet::evens())));
  CHECK(ep_is_empty(ep_intersect(EpSet::evens(), EpSet::odds())));
  CHECK(ep_subset_of(EpSet::evens(), EpSet::naturals()));

  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    EpSet a = sample_epset(rng), b = sample_epset(rng);
    EpSet u = ep_union(a, b), n = ep_intersect(a, b), d = ep_minus(a, b),
          c = ep_complement(a);
    for (std::uint64_t k = 0; k < 150; ++k) {
      CHECK(u.contains(k) == (a.contains(k) || b.contains(k)));
      CHECK(n.contains(k) == (a.contains(k) && b.contains(k)));
      CHECK(d.contains(k) == (a.contains(k) && !b.contains(k)));
      CHECK(c.contains(k) == !a.contains(k));
    }
  }
}

TEST_CASE("finite and cofinite detection") {
  CHECK(ep_is_finite(EpSet::finite_set({1, 5, 9})));
  CHECK(!ep_is_finite(EpSet::evens()));
  CHECK(ep_is_cofinite(EpSet::from_threshold(7)));
  CHECK(!ep_is_cofinite(EpSet::evens()));
  CHECK(ep_is_cofinite(EpSet::naturals()));
  CHECK(ep_is_finite(EpSet()));
}

TEST_CASE("gap on the documented examples") {
  CHECK(gap(EpSet::evens()) == ExtNat(1));
  CHECK(gap(EpSet::finite_set({2, 4, 10})) == ExtNat::inf());
  CHECK(gap(EpSet()) == ExtNat::inf());
  CHECK(gap(EpSet::naturals()) == ExtNat(0));
  CHECK(oracles::windowed_gap(window_of(EpSet::evens())) == ExtNat(1));
}

TEST_CASE("cogap on the documented examples") {
  CHECK(cogap(EpSet::evens()) == ExtNat(1));
  CHECK(cogap(EpSet::finite_set({3, 7})) == ExtNat(0));
  CHECK(cogap(EpSet("", "110")) == ExtNat(2));
  CHECK(oracles::windowed_run(window_of(EpSet("", "110"))) == ExtNat(2));
  CHECK(cogap(EpSet::naturals()) == ExtNat::inf());

  // Cofinite set with one early large gap: the equational coGap is infinite
  // while the prose bound records the early gap.
  EpSet early_gap = ep_union(EpSet::finite_set({0}), EpSet::from_threshold(10));
  CHECK(cogap(early_gap) == ExtNat::inf());
  CogapDiagnostic d = cogap_diagnostic(early_gap);
  CHECK(d.prose_c_s == ExtNat(9));
  CHECK(!d.agree);
  CHECK(cogap_diagnostic(EpSet::evens()).agree);
}

TEST_CASE("gap and cogap agree with the windowed oracle on random sets") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 500; ++i) {
    EpSet s = sample_epset(rng);
    CHECK(gap(s) == oracles::windowed_gap(window_of(s)));
    CHECK(cogap(s) == oracles::windowed_gap(complement_window_of(s)));
    ExtNat runs = oracles::windowed_run(window_of(s));
    if (!ep_is_cofinite(s) && !ep_is_finite(s)) CHECK(cogap(s) == runs);
  }
}

TEST_CASE("gap and cogap are finitely insensitive") {
  auto gap_fn = [](const EpSet& s) { return gap(s); };
  auto cogap_fn = [](const EpSet& s) { return cogap(s); };
  auto h_fn = [](const EpSet& s) { return in_H(s) ? ExtNat(1) : ExtNat(0); };

  CHECK(finitely_insensitive_probe(gap_fn, EpSet::evens(), {1}));
  CHECK(finitely_insensitive_probe(cogap_fn, EpSet::naturals(), {0, 1, 2}));

  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::uint64_t> idx(0, 40);
  for (int i = 0; i < 200; ++i) {
    EpSet s = sample_epset(rng);
    std::vector<std::uint64_t> toggles;
    for (int t = 0; t < 5; ++t) toggles.push_back(idx(rng));
    CHECK(finitely_insensitive_probe(gap_fn, s, toggles));
    CHECK(finitely_insensitive_probe(cogap_fn, s, toggles));
    CHECK(finitely_insensitive_probe(h_fn, s, toggles));
  }
}

TEST_CASE("cogap grows and gap shrinks along inclusions") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 200; ++i) {
    EpSet a = sample_epset(rng);
    EpSet b = ep_union(a, sample_epset(rng));  // a subset of b
    CHECK(cogap(a) <= cogap(b));
    CHECK(gap(a) >= gap(b));
  }
}

TEST_CASE("G and H membership and their aso pairing") {
  CHECK(in_G(EpSet::evens()));
  CHECK(!in_H(EpSet::evens()));
  EpSet co_three = ep_complement(EpSet::finite_set({3}));
  CHECK(in_G(co_three));
  CHECK(in_H(co_three));

  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    EpSet s = sample_epset(rng);
    CHECK(in_G(s) == !in_H(ep_complement(s)));
  }
}

TEST_CASE("even/odd split breaks every run") {
  auto [ev, od] = even_odd_split(EpSet::naturals());
  CHECK(ev == EpSet::evens());
  CHECK(od == EpSet::odds());
  CHECK(cogap(ev) == ExtNat(1));
  CHECK(cogap(od) == ExtNat(1));

  auto [ee, eo] = even_odd_split(EpSet::evens());
  CHECK(ee == EpSet::evens());
  CHECK(ep_is_empty(eo));
  CHECK(cogap(ee) == ExtNat(1));
  CHECK(cogap(eo) == ExtNat(0));

  auto [fe, fo] = even_odd_split(EpSet::finite_set({1, 2, 3}));
  CHECK(ep_is_finite(fe));
  CHECK(ep_is_finite(fo));
  CHECK(cogap(fe) == ExtNat(0));
  CHECK(cogap(fo) == ExtNat(0));

  std::mt19937_64 rng(67);
  for (int i = 0; i < 200; ++i) {
    EpSet s = sample_epset(rng);
    auto [a, b] = even_odd_split(s);
    CHECK(ep_union(a, b) == s);
    CHECK(ep_is_empty(ep_intersect(a, b)));
    CHECK(cogap(a) <= ExtNat(1));
    CHECK(cogap(b) <= ExtNat(1));
  }
}

TEST_CASE("out cogap closed form") {
  EpSet runs5("", "111110000");
  CHECK(cogap(runs5) == ExtNat(5));
  CHECK(out_cogap(runs5) == ExtNat(2));
  CHECK(out_cogap(EpSet::evens()) == ExtNat(1));
  CHECK(out_cogap(EpSet::finite_set({4})) == ExtNat(0));

  std::mt19937_64 rng(71);
  for (int i = 0; i < 60; ++i) {
    EpSet s = sample_epset(rng);
    ExtNat expected = cogap(s) < ExtNat(2) ? cogap(s) : ExtNat(2);
    CHECK(out_cogap(s) == expected);
    CHECK(!out_cogap_beaten_by_bounded_cover(s, 3, 12));
  }
}

TEST_CASE("inner cogap witnesses") {
  auto parts = inn_cogap_witness(EpSet::naturals(), 2);
  REQUIRE(parts.size() == 2);
  CHECK(!ep_is_finite(parts[0]));
  CHECK(!ep_is_finite(parts[1]));
  CHECK(ep_union(parts[0], parts[1]) == EpSet::naturals());
  CHECK(ep_is_empty(ep_intersect(parts[0], parts[1])));

  auto three = inn_cogap_witness(EpSet::evens(), 3);
  REQUIRE(three.size() == 3);
  EpSet whole;
  for (const EpSet& p : three) {
    CHECK(!ep_is_finite(p));
    whole = ep_union(whole, p);
  }
  CHECK(whole == EpSet::evens());

  CHECK(inn_cogap_witness(EpSet::evens(), 1) == std::vector<EpSet>{EpSet::evens()});
  CHECK_THROWS_AS(inn_cogap_witness(EpSet::finite_set({1}), 2), std::invalid_argument);
  CHECK_THROWS_AS(inn_cogap_witness(EpSet::evens(), 0), std::invalid_argument);

  std::mt19937_64 rng(73);
  for (int i = 0; i < 100; ++i) {
    EpSet s = sample_epset(rng);
    if (ep_is_finite(s)) continue;
    for (int k = 1; k <= 5; ++k) {
      auto ps = inn_cogap_witness(s, k);
      REQUIRE(static_cast<int>(ps.size()) == k);
      EpSet u;
      for (std::size_t a = 0; a < ps.size(); ++a) {
        CHECK(!ep_is_finite(ps[a]));
        CHECK(cogap(ps[a]) >= ExtNat(1));
        for (std::size_t b = a + 1; b < ps.size(); ++b)
          CHECK(ep_is_empty(ep_intersect(ps[a], ps[b])));
        u = ep_union(u, ps[a]);
      }
      CHECK(u == s);
    }
  }
}

TEST_CASE("sequence preimages and limits") {
  Universe u({"a", "b"});
  EpSequence alternating(u, {}, {0, 1});
  CHECK(seq_preimage(alternating, SubsetMask::singleton(0, 2)) == EpSet::evens());
  CHECK(seq_preimage(alternating, SubsetMask::full_set(2)) == EpSet::naturals());

  FiniteTopology disc = FiniteTopology::discrete(u);
  CHECK(seq_limit(alternating, disc, NatFamily::G) == MultiSet(u, {ExtNat(1), ExtNat(1)}));
  CHECK(seq_limit(alternating, disc, NatFamily::H) == MultiSet(u, {ExtNat(0), ExtNat(0)}));
  CHECK(seq_limit(alternating, disc, NatFamily::CoGap) == MultiSet(u, {ExtNat(1), ExtNat(1)}));

  EpSequence constant = EpSequence::constant(u, 0);
  CHECK(seq_limit(constant, disc, NatFamily::CoGap) ==
        MultiSet(u, {ExtNat::inf(), ExtNat(0)}));
  CHECK(seq_limit(constant, disc, NatFamily::H) == MultiSet(u, {ExtNat(1), ExtNat(0)}));

  // An eventually-constant sequence has the same limits.
  EpSequence tail(u, {1, 1, 1}, {0});
  CHECK(seq_limit(tail, disc, NatFamily::CoGap) == MultiSet(u, {ExtNat::inf(), ExtNat(0)}));
}
