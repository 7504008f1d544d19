// Command-line front end: species classification, Aso, outer core / inner
// hull, limits, eventually-periodic diagnostics, censuses and proposition
// sweeps. All outputs are JSON on stdout. Exit codes: 0 pass, 1 a sweep or
// census found a counterexample, 2 usage or input format error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "setfam/ep.hpp"
#include "setfam/json_io.hpp"
#include "setfam/topology.hpp"
#include "setfam/verify.hpp"

namespace {

using setfam::json;

// Arguments may be a path to a JSON file or inline JSON text.
json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg[0] != '{') {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open input file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return json::parse(text);
}

void emit(const json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"setfam: species of set families, multi-families and their limits"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --pretty after the subcommand name
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output; render tables where available");

  std::string family_arg, mf_arg, topology_arg, seq_arg, epset_arg, nat_family = "G";
  std::string sweep_id;
  bool sweep_all = false;
  int census_n = 2;
  setfam::SweepOptions opts;

  auto* classify_cmd = app.add_subcommand("classify", "species report for a family");
  classify_cmd->add_option("family", family_arg, "family JSON (file or inline)")->required();

  auto* aso_cmd = app.add_subcommand("aso", "associate family");
  aso_cmd->add_option("family", family_arg, "family JSON (file or inline)")->required();

  auto* out_cmd = app.add_subcommand("out-core", "outer core of an increasing multi-family");
  out_cmd->add_option("multifamily", mf_arg, "multi-family JSON (file or inline)")->required();

  auto* inn_cmd = app.add_subcommand("inn-hull", "inner hull of an increasing multi-family");
  inn_cmd->add_option("multifamily", mf_arg, "multi-family JSON (file or inline)")->required();

  auto* limit_cmd = app.add_subcommand("limit", "multi-set limit of a multi-family");
  limit_cmd->add_option("multifamily", mf_arg, "multi-family JSON (file or inline)")->required();
  limit_cmd->add_option("topology", topology_arg, "topology JSON (file or inline)")->required();

  auto* seq_cmd = app.add_subcommand("seq-limit", "limit multi-set of a sequence");
  seq_cmd->add_option("sequence", seq_arg, "sequence JSON (file or inline)")->required();
  seq_cmd->add_option("--family", nat_family, "weighting family on N: G, H or cogap")
      ->check(CLI::IsMember({"G", "H", "cogap"}));

  auto* cogap_cmd = app.add_subcommand("cogap", "gap/coGap diagnostics of an ep set");
  cogap_cmd->add_option("epset", epset_arg, "ep-set JSON (file or inline)")->required();

  auto* census_cmd = app.add_subcommand("census", "species counts over all families");
  census_cmd->add_option("--n", census_n, "universe size (1..4)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run proposition sweeps");
  verify_cmd->add_option("--sweep", sweep_id, "sweep id");
  verify_cmd->add_flag("--all", sweep_all, "run every registered sweep");
  verify_cmd->add_option("--n", opts.n, "universe size for enumeration sweeps");
  verify_cmd->add_option("--samples", opts.samples, "sample count for sampled sweeps");
  verify_cmd->add_option("--seed", opts.seed, "seed for sampled sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) {
      setfam::Family f = setfam::family_from_json(load_json_arg(family_arg));
      emit(setfam::species_report_to_json(setfam::classify(f)), pretty);
      return 0;
    }
    if (*aso_cmd) {
      setfam::Family f = setfam::family_from_json(load_json_arg(family_arg));
      emit(setfam::family_to_json(setfam::aso(f)), pretty);
      return 0;
    }
    if (*out_cmd) {
      setfam::MultiFamily m = setfam::multifamily_from_json(load_json_arg(mf_arg));
      emit(setfam::multifamily_to_json(setfam::out_core(m)), pretty);
      return 0;
    }
    if (*inn_cmd) {
      setfam::MultiFamily m = setfam::multifamily_from_json(load_json_arg(mf_arg));
      emit(setfam::multifamily_to_json(setfam::inn_hull(m)), pretty);
      return 0;
    }
    if (*limit_cmd) {
      setfam::MultiFamily m = setfam::multifamily_from_json(load_json_arg(mf_arg));
      setfam::FiniteTopology t = setfam::topology_from_json(load_json_arg(topology_arg));
      emit(setfam::multiset_to_json(setfam::multiset_limit(m, t)), pretty);
      return 0;
    }
    if (*seq_cmd) {
      setfam::EpSequence x = setfam::epsequence_from_json(load_json_arg(seq_arg));
      setfam::NatFamily f = nat_family == "G"   ? setfam::NatFamily::G
                            : nat_family == "H" ? setfam::NatFamily::H
                                                : setfam::NatFamily::CoGap;
      setfam::FiniteTopology t = setfam::FiniteTopology::discrete(x.universe());
      emit(setfam::multiset_to_json(setfam::seq_limit(x, t, f)), pretty);
      return 0;
    }
    if (*cogap_cmd) {
      setfam::EpSet s = setfam::epset_from_json(load_json_arg(epset_arg));
      setfam::CogapDiagnostic d = setfam::cogap_diagnostic(s);
      emit(json{{"set", setfam::epset_to_json(s)},
                {"gap", setfam::extnat_to_json(setfam::gap(s))},
                {"cogap", setfam::extnat_to_json(d.cogap_value)},
                {"prose_c_s", setfam::extnat_to_json(d.prose_c_s)},
                {"prose_agrees", d.agree},
                {"out_cogap", setfam::extnat_to_json(setfam::out_cogap(s))},
                {"finite", setfam::ep_is_finite(s)}},
           pretty);
      return 0;
    }
    if (*census_cmd) {
      setfam::CensusTable t = setfam::census(census_n);
      if (pretty)
        std::cout << t.to_table();
      else
        emit(t.to_json(), false);
      return t.ultrafilters_all_principal && t.ultrafilter_iff_self_aso_filter ? 0 : 1;
    }
    if (*verify_cmd) {
      std::vector<setfam::SweepReport> reports;
      if (sweep_all) {
        reports = setfam::run_all_sweeps(opts);
      } else if (!sweep_id.empty()) {
        reports.push_back(setfam::run_sweep(sweep_id, opts));
      } else {
        std::cerr << "verify: pass --sweep <id> or --all; known ids:";
        for (const auto& id : setfam::sweep_ids()) std::cerr << " " << id;
        std::cerr << "\n";
        return 2;
      }
      json out = json::array();
      bool all_ok = true;
      for (const auto& r : reports) {
        out.push_back(r.to_json());
        all_ok = all_ok && r.ok();
        if (pretty)
          std::cerr << (r.ok() ? "pass " : "FAIL ") << r.id << " (" << r.passes << "/"
                    << r.instances << ", " << r.elapsed_ms << " ms)\n";
      }
      emit(out, pretty);
      return all_ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
