#include "setfam/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace setfam {

namespace {

std::vector<std::string> labels_from(const json& j, const char* who) {
  if (!j.is_array()) throw std::invalid_argument(std::string(who) + ": expected a label array");
  std::vector<std::string> labels;
  labels.reserve(j.size());
  for (const auto& l : j) labels.push_back(l.get<std::string>());
  return labels;
}

}  // namespace

json universe_to_json(const Universe& u) { return json{{"labels", u.labels()}}; }

Universe universe_from_json(const json& j) {
  if (j.is_array()) return Universe(labels_from(j, "universe"));
  return Universe(labels_from(j.at("labels"), "universe"));
}

json mask_to_json(SubsetMask s, const Universe& u) {
  json out = json::array();
  for (int i : s.elements()) out.push_back(u.label(i));
  return out;
}

SubsetMask mask_from_json(const json& j, const Universe& u) {
  SubsetMask s = SubsetMask::empty_set(u.size());
  for (const auto& l : j) s.bits |= 1u << u.index_of(l.get<std::string>());
  return s;
}

json extnat_to_json(ExtNat v) {
  if (v.is_inf()) return "inf";
  return v.finite_value();
}

ExtNat extnat_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtNat::inf();
    throw std::invalid_argument("ExtNat: expected a number or \"inf\"");
  }
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw std::invalid_argument("ExtNat: expected a nonnegative integer or \"inf\"");
  return ExtNat(j.get<std::uint64_t>());
}

json family_to_json(const Family& f) {
  json members = json::array();
  for (SubsetMask m : f.members()) members.push_back(mask_to_json(m, f.universe()));
  return json{{"universe", f.universe().labels()}, {"members", members}};
}

Family family_from_json(const json& j) {
  Universe u = universe_from_json(j.at("universe"));
  std::vector<SubsetMask> members;
  for (const auto& m : j.at("members")) members.push_back(mask_from_json(m, u));
  return Family(u, members);
}

json species_report_to_json(const SpeciesReport& r) {
  return json{{"eventual", r.eventual},
              {"co_eventual", r.co_eventual},
              {"filter", r.filter},
              {"ultrafilter", r.ultrafilter},
              {"self_aso", r.self_aso},
              {"condition_O", r.condition_O},
              {"condition_I", r.condition_I},
              {"finitely_additive", r.finitely_additive}};
}

json multifamily_to_json(const MultiFamily& m) {
  json values = json::array();
  int n = m.universe().size();
  for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
    ExtNat v = m.values()[b];
    if (v == ExtNat(0)) continue;
    values.push_back(json{{"set", mask_to_json({b, n}, m.universe())}, {"value", extnat_to_json(v)}});
  }
  return json{{"universe", m.universe().labels()}, {"values", values}};
}

MultiFamily multifamily_from_json(const json& j) {
  Universe u = universe_from_json(j.at("universe"));
  std::vector<ExtNat> values(std::size_t{1} << u.size(), ExtNat(0));
  for (const auto& entry : j.at("values")) {
    SubsetMask s = mask_from_json(entry.at("set"), u);
    values[s.bits] = extnat_from_json(entry.at("value"));
  }
  return MultiFamily(u, std::move(values));
}

json multiset_to_json(const MultiSet& m) {
  json values = json::array();
  for (int i = 0; i < m.universe().size(); ++i) {
    ExtNat v = m.multiplicity(i);
    if (v == ExtNat(0)) continue;
    values.push_back(json{{"element", m.universe().label(i)}, {"value", extnat_to_json(v)}});
  }
  return json{{"universe", m.universe().labels()}, {"values", values}};
}

MultiSet multiset_from_json(const json& j) {
  Universe u = universe_from_json(j.at("universe"));
  std::vector<ExtNat> mult(static_cast<std::size_t>(u.size()), ExtNat(0));
  for (const auto& entry : j.at("values")) {
    int i = u.index_of(entry.at("element").get<std::string>());
    mult[static_cast<std::size_t>(i)] = extnat_from_json(entry.at("value"));
  }
  return MultiSet(u, std::move(mult));
}

json topology_to_json(const FiniteTopology& t) {
  json opens = json::array();
  for (SubsetMask s : t.opens()) opens.push_back(mask_to_json(s, t.universe()));
  return json{{"universe", t.universe().labels()}, {"opens", opens}};
}

FiniteTopology topology_from_json(const json& j) {
  Universe u = universe_from_json(j.at("universe"));
  std::vector<SubsetMask> opens;
  for (const auto& s : j.at("opens")) opens.push_back(mask_from_json(s, u));
  return FiniteTopology(u, opens);
}

json epset_to_json(const EpSet& s) {
  return json{{"prefix", s.prefix_string()}, {"pattern", s.pattern_string()}};
}

EpSet epset_from_json(const json& j) {
  return EpSet(j.at("prefix").get<std::string>(), j.at("pattern").get<std::string>());
}

json epsequence_to_json(const EpSequence& x) {
  json prefix = json::array(), pattern = json::array();
  for (int v : x.prefix()) prefix.push_back(x.universe().label(v));
  for (int v : x.pattern()) pattern.push_back(x.universe().label(v));
  return json{{"universe", x.universe().labels()}, {"prefix", prefix}, {"pattern", pattern}};
}

EpSequence epsequence_from_json(const json& j) {
  Universe u = universe_from_json(j.at("universe"));
  std::vector<std::string> prefix, pattern;
  for (const auto& l : j.at("prefix")) prefix.push_back(l.get<std::string>());
  for (const auto& l : j.at("pattern")) pattern.push_back(l.get<std::string>());
  return EpSequence::from_labels(std::move(u), prefix, pattern);
}

json partition_verdict_to_json(const PartitionVerdict& v, const Universe& u) {
  json parts = json::array();
  for (SubsetMask p : v.parts) parts.push_back(mask_to_json(p, u));
  json out{{"parts", parts}, {"measured", v.measured}};
  if (v.witness_part) out["witness_part"] = *v.witness_part;
  return out;
}

}  // namespace setfam
