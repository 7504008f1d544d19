#include "doctest.h"
#include "setfam/family.hpp"
#include "setfam/multifamily.hpp"
#include "setfam/verify.hpp"

using namespace setfam;

TEST_CASE("family enumeration counts") {
  CHECK(count_families(3, SpeciesFilter::all) == 256);
  CHECK(count_families(3, SpeciesFilter::eventual) == 20);   // monotone functions on 3 points
  CHECK(count_families(4, SpeciesFilter::eventual) == 168);  // and on 4 points
  CHECK(count_families(2, SpeciesFilter::ultrafilter) == 2);
  CHECK(count_families(1, SpeciesFilter::ultrafilter) == 1);
  CHECK_THROWS_AS(count_families(5, SpeciesFilter::all), std::invalid_argument);

  // Self-Aso eventual families on two points are exactly the two principal
  // ultrafilters.
  auto fams = enumerate_families_vec(2, SpeciesFilter::self_aso_eventual);
  REQUIRE(fams.size() == 2);
  Universe u = fams[0].universe();
  CHECK(fams[0] == Family::principal(u, 0));
  CHECK(fams[1] == Family::principal(u, 1));
  for (const Family& f : fams) CHECK(aso(f) == f);
}

TEST_CASE("census tables") {
  CensusTable c1 = census(1);
  CHECK(c1.counts["ultrafilter"] == 1);
  CHECK(c1.ultrafilters_all_principal);
  CHECK(c1.ultrafilter_iff_self_aso_filter);

  CensusTable c2 = census(2);
  CHECK(c2.total_families == 16);
  CHECK(c2.counts["ultrafilter"] == 2);
  CHECK(c2.counts["eventual"] == 6);

  CensusTable c3 = census(3);
  CHECK(c3.total_families == 256);
  CHECK(c3.counts["ultrafilter"] == 3);
  CHECK(c3.counts["eventual"] == 20);
  // The majority family lands in the self-Aso-but-not-filter cell.
  CHECK(c3.cross["self_aso_not_filter"] >= 1);
  CHECK(c3.ultrafilters_all_principal);
  CHECK(c3.ultrafilter_iff_self_aso_filter);
  CHECK_THROWS_AS(census(5), std::invalid_argument);
}

TEST_CASE("every registered sweep passes on a small scope") {
  SweepOptions opts;
  opts.n = 3;
  opts.samples = 25;
  opts.seed = 12345;
  for (const std::string& id : sweep_ids()) {
    SweepReport r = run_sweep(id, opts);
    INFO(id, ": ", r.passes, "/", r.instances);
    CHECK(r.ok());
    CHECK(!r.counterexample);
    CHECK(r.instances > 0);
    CHECK(r.seed == opts.seed);
  }
  CHECK(sweep_ids().size() == 16);
  CHECK_THROWS_AS(run_sweep("no-such-sweep", opts), std::invalid_argument);
}

TEST_CASE("sweeps are reproducible for a fixed seed") {
  SweepOptions opts;
  opts.samples = 10;
  opts.seed = 99;
  SweepReport a = run_sweep("prop-ia", opts);
  SweepReport b = run_sweep("prop-ia", opts);
  CHECK(a.instances == b.instances);
  CHECK(a.passes == b.passes);
}

TEST_CASE("shrinking keeps the failure and reaches a local minimum") {
  Universe u = default_universe(3);
  // Artificial failure: containing a fixed pair of sets.
  SubsetMask ab = SubsetMask::of({0, 1}, 3);
  SubsetMask c = SubsetMask::singleton(2, 3);
  auto fails = [&](const Family& f) { return f.contains(ab) && f.contains(c); };
  Family big = Family::all_subsets(u);
  Family small = shrink_family(big, fails);
  CHECK(fails(small));
  CHECK(small.member_count() == 2);

  auto mf_fails = [&](const MultiFamily& m) {
    return m.value(ab) >= ExtNat(1) && m.value(c) >= ExtNat(2);
  };
  MultiFamily shrunk = shrink_multifamily(MultiFamily::constant(u, ExtNat::inf()), mf_fails);
  CHECK(mf_fails(shrunk));
  CHECK(shrunk.value(ab) == ExtNat(1));
  CHECK(shrunk.value(c) == ExtNat(2));
  CHECK(shrunk.value(SubsetMask::full_set(3)) == ExtNat(0));
}
