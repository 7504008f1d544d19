#include <random>

#include "doctest.h"
#include "setfam/packed.hpp"
#include "setfam/topology.hpp"
#include "setfam/verify.hpp"

using namespace setfam;

namespace {

const Universe u2({"a", "b"});
const Universe u3({"a", "b", "c"});

}  // namespace

TEST_CASE("validation and hausdorff detection") {
  CHECK(validate_topology(FiniteTopology::discrete(u3)));
  CHECK(is_hausdorff(FiniteTopology::discrete(u3)));
  CHECK(validate_topology(FiniteTopology::indiscrete(u2)));
  CHECK(!is_hausdorff(FiniteTopology::indiscrete(u2)));
  FiniteTopology sp = FiniteTopology::sierpinski();
  CHECK(validate_topology(sp));
  CHECK(!is_hausdorff(sp));

  // Missing the union of {a} and {b}.
  FiniteTopology bad(u3, {SubsetMask::empty_set(3), SubsetMask::full_set(3),
                          SubsetMask::singleton(0, 3), SubsetMask::singleton(1, 3)});
  CHECK(!validate_topology(bad));
  CHECK_THROWS_AS(is_hausdorff(bad), std::invalid_argument);
  CHECK_THROWS_AS(closure_family(Family::all_subsets(u3), bad), std::invalid_argument);
}

TEST_CASE("hausdorff means discrete on finite spaces") {
  for (int n = 1; n <= 3; ++n) {
    Universe u = default_universe(n);
    for (const FiniteTopology& t : enumerate_topologies(u))
      CHECK(is_hausdorff(t) == (t.opens().size() == (std::size_t{1} << n)));
  }
}

TEST_CASE("topology enumeration counts") {
  CHECK(enumerate_topologies(default_universe(1)).size() == 1);
  CHECK(enumerate_topologies(default_universe(2)).size() == 4);
  CHECK(enumerate_topologies(default_universe(3)).size() == 29);
}

TEST_CASE("closure of a family") {
  FiniteTopology disc = FiniteTopology::discrete(u3);
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    if (!packed::is_eventual(bits, 3)) continue;
    Family f = Family::from_packed(u3, bits);
    CHECK(closure_family(f, disc) == f);
  }
  CHECK(closure_family(Family::all_subsets(u3), disc) == Family::all_subsets(u3));

  // Under the indiscrete topology the only open above a nonempty set is X.
  FiniteTopology ind = FiniteTopology::indiscrete(u3);
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    if (!packed::is_eventual(bits, 3)) continue;
    Family f = Family::from_packed(u3, bits);
    if (!f.contains(SubsetMask::full_set(3))) continue;
    Family cl = closure_family(f, ind);
    for (std::uint32_t b = 0; b < 8; ++b) {
      SubsetMask s{b, 3};
      bool expected = s.empty() ? f.contains(SubsetMask::empty_set(3)) : true;
      CHECK(cl.contains(s) == expected);
    }
  }
}

TEST_CASE("limit sets are closed and match star of closure") {
  for (const FiniteTopology& t : enumerate_topologies(u3)) {
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
      if (!packed::is_eventual(bits, 3)) continue;
      Family f = Family::from_packed(u3, bits);
      SubsetMask lim = limit_set(f, t);
      CHECK(t.is_open(lim.complement()));
      CHECK(lim == star(closure_family(f, t)));
    }
  }
  CHECK(limit_set(Family::principal(u3, 0), FiniteTopology::discrete(u3)) ==
        SubsetMask::singleton(0, 3));
  CHECK(limit_set(Family::majority(u3), FiniteTopology::discrete(u3)) ==
        SubsetMask::empty_set(3));
}

TEST_CASE("closure of a multi-family") {
  std::mt19937_64 rng(17);
  FiniteTopology disc = FiniteTopology::discrete(u3);
  FiniteTopology ind = FiniteTopology::indiscrete(u3);
  for (int i = 0; i < 30; ++i) {
    MultiFamily m = sample_increasing_multifamily(u3, rng);
    CHECK(closure_multifamily(m, disc) == m);
    MultiFamily cl = closure_multifamily(m, ind);
    for (std::uint32_t b = 1; b < 8; ++b)
      CHECK(cl.value({b, 3}) == m.value(SubsetMask::full_set(3)));
    CHECK(cl.value(SubsetMask::empty_set(3)) == m.value(SubsetMask::empty_set(3)));
    for (const FiniteTopology& t : enumerate_topologies(u2)) {
      MultiFamily m2 = sample_increasing_multifamily(u2, rng);
      MultiFamily once = closure_multifamily(m2, t);
      CHECK(is_increasing(once));
      CHECK(closure_multifamily(once, t) == once);
      // cl M >= M for increasing M.
      for (std::uint32_t b = 0; b < 4; ++b) CHECK(once.value({b, 2}) >= m2.value({b, 2}));
    }
  }
  CHECK_THROWS_AS(closure_multifamily(MultiFamily(u2, {ExtNat(1), ExtNat(0), ExtNat(0), ExtNat(0)}), disc),
                  std::invalid_argument);
}

TEST_CASE("multi-set limits") {
  FiniteTopology disc = FiniteTopology::discrete(u3);
  MultiSet la = multiset_limit(indicator_of_family(Family::principal(u3, 0)), disc);
  CHECK(la == MultiSet(u3, {ExtNat(1), ExtNat(0), ExtNat(0)}));

  MultiFamily hull = inn_hull(indicator_of_family(Family::nonempty_sets(u3)));
  MultiSet lim = multiset_limit(hull, FiniteTopology::indiscrete(u3));
  CHECK(lim == MultiSet(u3, {ExtNat(3), ExtNat(3), ExtNat(3)}));

  std::mt19937_64 rng(19);
  for (const FiniteTopology& t : enumerate_topologies(u2)) {
    MultiFamily m = sample_increasing_multifamily(u2, rng);
    CHECK(multiset_limit(m, t) == star_multiset(closure_multifamily(m, t)));
  }
}

TEST_CASE("unique limit point of inner eventual families") {
  FiniteTopology disc = FiniteTopology::discrete(u3);
  CHECK(unique_limit_inner(Family::principal(u3, 0), disc) == 0);
  CHECK(!unique_limit_inner(Family::majority(u3), disc));
  CHECK_THROWS_AS(unique_limit_inner(Family::majority(u3), FiniteTopology::indiscrete(u3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(unique_limit_inner(Family::all_subsets(u3), disc), std::invalid_argument);

  // Exhaustive at three points: never two limit points, and the limit, when
  // present, pushes forward through every map.
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    if (!packed::is_eventual(bits, 3) || !packed::condition_I_eventual(bits, 3)) continue;
    Family f = Family::from_packed(u3, bits);
    auto lim = unique_limit_inner(f, disc);  // throws on two limit points
    if (!lim) continue;
    Universe y({"p", "q"});
    FiniteTopology dy = FiniteTopology::discrete(y);
    for (int i0 = 0; i0 < 2; ++i0)
      for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2) {
          TotalMap g(u3, y, {i0, i1, i2});
          CHECK(unique_limit_inner(push_family(g, f), dy) == g(*lim));
        }
  }
}

TEST_CASE("closure interacts with outer core and push as the propositions state") {
  std::mt19937_64 rng(29);
  // Out(cl M) >= cl(Out M) over every topology on up to three points.
  for (int n = 2; n <= 3; ++n) {
    Universe u = default_universe(n);
    for (const FiniteTopology& t : enumerate_topologies(u)) {
      MultiFamily m = sample_increasing_multifamily(u, rng);
      MultiFamily lhs = out_core(closure_multifamily(m, t));
      MultiFamily rhs = closure_multifamily(out_core(m), t);
      for (std::size_t i = 0; i < lhs.values().size(); ++i)
        CHECK(lhs.values()[i] >= rhs.values()[i]);
    }
  }
  // cl(push M) >= push(cl M) for continuous maps.
  Universe y({"p", "q"});
  auto tys = enumerate_topologies(y);
  auto txs = enumerate_topologies(u3);
  for (const auto& tx : txs)
    for (const auto& ty : tys)
      for (int i0 = 0; i0 < 2; ++i0)
        for (int i1 = 0; i1 < 2; ++i1)
          for (int i2 = 0; i2 < 2; ++i2) {
            TotalMap f(u3, y, {i0, i1, i2});
            if (!is_continuous(f, tx, ty)) continue;
            MultiFamily m = sample_increasing_multifamily(u3, rng);
            MultiFamily lhs = closure_multifamily(push_multifamily(f, m), ty);
            MultiFamily rhs = push_multifamily(f, closure_multifamily(m, tx));
            for (std::size_t i = 0; i < lhs.values().size(); ++i)
              CHECK(lhs.values()[i] >= rhs.values()[i]);
          }
}
