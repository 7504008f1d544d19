#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "setfam/family.hpp"
#include "setfam/multifamily.hpp"
#include "setfam/universe.hpp"

namespace setfam {

// Universe {"x0","x1",...} of the given size for enumeration sweeps.
Universe default_universe(int n);

enum class SpeciesFilter {
  all,
  eventual,
  self_aso,
  self_aso_eventual,
  filter,
  ultrafilter,
  inner_eventual,
};

SpeciesFilter species_filter_from_string(const std::string& name);

// Streams families on an n-element universe in ascending packed order,
// optionally restricted to a species. n is capped at 4 (65536 families).
void enumerate_families(int n, SpeciesFilter filter,
                        const std::function<void(const Family&)>& fn);
std::vector<Family> enumerate_families_vec(int n, SpeciesFilter filter);
std::uint64_t count_families(int n, SpeciesFilter filter);

struct CensusTable {
  int n = 0;
  std::uint64_t total_families = 0;
  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, std::uint64_t> cross;
  bool ultrafilters_all_principal = false;
  bool ultrafilter_iff_self_aso_filter = false;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

CensusTable census(int n);  // n capped at 4

// -- seeded instance generators ------------------------------------------

// Random increasing multi-family with values from the chain {0,1,2,inf}:
// a random table repaired upward to be monotone.
MultiFamily sample_increasing_multifamily(const Universe& u, std::mt19937_64& rng);
// Random self-Aso eventual family: a weighted majority with odd total
// weight (generic weights, so no ties).
Family sample_self_aso_eventual_family(const Universe& u, std::mt19937_64& rng);

class EpSet;
class EpSequence;
EpSet sample_epset(std::mt19937_64& rng);
EpSequence sample_epsequence(const Universe& u, std::mt19937_64& rng);

struct SweepOptions {
  int n = 3;                  // universe size where applicable
  int samples = 100;          // sampled-instance count where applicable
  std::uint64_t seed = 1;
};

struct SweepReport {
  std::string id;
  std::uint64_t instances = 0;
  std::uint64_t passes = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  std::optional<nlohmann::json> counterexample;

  bool ok() const { return passes == instances && instances > 0; }
  nlohmann::json to_json() const;
};

const std::vector<std::string>& sweep_ids();
// Throws std::invalid_argument for an unknown id.
SweepReport run_sweep(const std::string& id, const SweepOptions& opts);
std::vector<SweepReport> run_all_sweeps(const SweepOptions& opts);

// Greedy counterexample shrinking: drop members / lower values while the
// failure predicate stays true.
Family shrink_family(Family f, const std::function<bool(const Family&)>& fails);
MultiFamily shrink_multifamily(MultiFamily m, const std::function<bool(const MultiFamily&)>& fails);

}  // namespace setfam
