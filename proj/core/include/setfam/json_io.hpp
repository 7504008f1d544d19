#pragma once

#include <json.hpp>

#include "setfam/ep.hpp"
#include "setfam/extnat.hpp"
#include "setfam/family.hpp"
#include "setfam/multifamily.hpp"
#include "setfam/topology.hpp"
#include "setfam/universe.hpp"

namespace setfam {

using json = nlohmann::json;

// Universe: {"labels": ["a","b","c"]}; inside composite objects the
// universe appears as the bare label array.
json universe_to_json(const Universe& u);
Universe universe_from_json(const json& j);

// Subsets serialize as sorted label arrays: ["a","c"].
json mask_to_json(SubsetMask s, const Universe& u);
SubsetMask mask_from_json(const json& j, const Universe& u);

// Integer or the string "inf".
json extnat_to_json(ExtNat v);
ExtNat extnat_from_json(const json& j);

// {"universe": [...], "members": [["a","b"], ...]}
json family_to_json(const Family& f);
Family family_from_json(const json& j);

json species_report_to_json(const SpeciesReport& r);

// {"universe": [...], "values": [{"set": ["a"], "value": 1}, ...]},
// zero entries omitted.
json multifamily_to_json(const MultiFamily& m);
MultiFamily multifamily_from_json(const json& j);

// {"universe": [...], "values": [{"element": "a", "value": 1}, ...]},
// zero entries omitted.
json multiset_to_json(const MultiSet& m);
MultiSet multiset_from_json(const json& j);

// {"universe": [...], "opens": [[], ["a"], ...]}
json topology_to_json(const FiniteTopology& t);
FiniteTopology topology_from_json(const json& j);

// {"prefix": "0110", "pattern": "10"}
json epset_to_json(const EpSet& s);
EpSet epset_from_json(const json& j);

// {"universe": [...], "prefix": ["a","b"], "pattern": ["a"]}
json epsequence_to_json(const EpSequence& x);
EpSequence epsequence_from_json(const json& j);

json partition_verdict_to_json(const PartitionVerdict& v, const Universe& u);

}  // namespace setfam
