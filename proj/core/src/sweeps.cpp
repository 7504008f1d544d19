#include <array>
#include <chrono>
#include <stdexcept>

#include "setfam/enumerate.hpp"
#include "setfam/ep.hpp"
#include "setfam/json_io.hpp"
#include "setfam/packed.hpp"
#include "setfam/topology.hpp"
#include "setfam/verify.hpp"

namespace setfam {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

class Harness {
 public:
  Harness(std::string id, std::uint64_t seed) : start_(Clock::now()) {
    rep_.id = std::move(id);
    rep_.seed = seed;
  }

  template <typename WitnessFn>
  void check(bool pass, WitnessFn&& witness) {
    ++rep_.instances;
    if (pass) {
      ++rep_.passes;
    } else if (!rep_.counterexample) {
      rep_.counterexample = witness();
    }
  }

  SweepReport finish() {
    rep_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    return rep_;
  }

 private:
  SweepReport rep_;
  Clock::time_point start_;
};

std::vector<TotalMap> all_maps(const Universe& from, const Universe& to) {
  std::vector<TotalMap> maps;
  int n = from.size(), m = to.size();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(m);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::size_t rem = code;
    for (int i = 0; i < n; ++i) {
      img[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::size_t>(m));
      rem /= static_cast<std::size_t>(m);
    }
    maps.emplace_back(from, to, std::move(img));
  }
  return maps;
}

json map_to_json(const TotalMap& f) {
  json img = json::array();
  for (int i = 0; i < f.domain().size(); ++i)
    img.push_back(json{{"from", f.domain().label(i)}, {"to", f.codomain().label(f(i))}});
  return json{{"map", img}};
}

bool mf_geq(const MultiFamily& a, const MultiFamily& b) {
  for (std::size_t i = 0; i < a.values().size(); ++i)
    if (a.values()[i] < b.values()[i]) return false;
  return true;
}

bool multiset_geq(const MultiSet& a, const MultiSet& b) {
  for (int i = 0; i < a.universe().size(); ++i)
    if (a.multiplicity(i) < b.multiplicity(i)) return false;
  return true;
}

EpSet sample_epset_impl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> plen(0, 8), qlen(1, 8), bit(0, 1);
  std::vector<bool> prefix(static_cast<std::size_t>(plen(rng)));
  for (auto&& b : prefix) b = bit(rng);
  std::vector<bool> pattern(static_cast<std::size_t>(qlen(rng)));
  for (auto&& b : pattern) b = bit(rng);
  return EpSet(std::move(prefix), std::move(pattern));
}

EpSequence sample_epsequence_impl(const Universe& u, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> plen(0, 6), qlen(1, 6), val(0, u.size() - 1);
  std::vector<int> prefix(static_cast<std::size_t>(plen(rng)));
  for (auto& v : prefix) v = val(rng);
  std::vector<int> pattern(static_cast<std::size_t>(qlen(rng)));
  for (auto& v : pattern) v = val(rng);
  return EpSequence(u, std::move(prefix), std::move(pattern));
}

// -- individual sweeps ---------------------------------------------------

SweepReport sweep_simple_observ(const SweepOptions& opts) {
  Harness h("simple-observ", opts.seed);
  int n = std::min(opts.n, 4);
  Universe u = default_universe(n);
  std::uint64_t both = 0;
  std::uint64_t total = packed::all_families_mask(n);
  for (std::uint64_t f = 0;; ++f) {
    bool ev = packed::is_eventual(f, n);
    bool coev = packed::is_co_eventual(f, n);
    std::uint64_t comp = packed::complement_family(f, n);
    bool dual = (packed::is_eventual(comp, n) == coev) && (packed::is_co_eventual(comp, n) == ev);
    h.check(dual, [&] { return family_to_json(Family::from_packed(u, f)); });
    if (ev && coev) ++both;
    if (f == total) break;
  }
  h.check(both == 2, [&] { return json{{"both_eventual_and_co_eventual", both}}; });
  return h.finish();
}

SweepReport sweep_aso_involution(const SweepOptions& opts) {
  Harness h("aso-involution", opts.seed);
  int n = std::min(opts.n, 4);
  Universe u = default_universe(n);
  std::uint64_t total = packed::all_families_mask(n);
  std::vector<std::uint64_t> aso_of(static_cast<std::size_t>(total) + 1);
  for (std::uint64_t f = 0;; ++f) {
    aso_of[f] = packed::aso(f, n);
    if (f == total) break;
  }
  // One instance per family: the involution plus anti-monotonicity against
  // every subfamily (submask iteration reaches each comparable pair once).
  for (std::uint64_t g = 0;; ++g) {
    bool ok = packed::aso(aso_of[g], n) == g;
    std::uint64_t ag = aso_of[g];
    for (std::uint64_t f = g; ok; f = (f - 1) & g) {
      ok = (ag & ~aso_of[f]) == 0;
      if (f == 0) break;
    }
    h.check(ok, [&] { return family_to_json(Family::from_packed(u, g)); });
    if (g == total) break;
  }
  return h.finish();
}

SweepReport sweep_push_aso_commute(const SweepOptions& opts) {
  Harness h("push-aso-commute", opts.seed);
  Universe u3 = default_universe(3);
  std::vector<TotalMap> maps;
  for (const auto& m : all_maps(u3, default_universe(2))) maps.push_back(m);
  for (const auto& m : all_maps(u3, u3)) maps.push_back(m);
  enumerate_families(3, SpeciesFilter::all, [&](const Family& f) {
    for (const TotalMap& map : maps) {
      bool ok = aso(push_family(map, f)) == push_family(map, aso(f));
      h.check(ok, [&] {
        return json{{"family", family_to_json(f)}, {"push", map_to_json(map)}};
      });
    }
  });
  return h.finish();
}

template <typename Check>
SweepReport sweep_over_maps_and_samples(const char* id, const SweepOptions& opts, Check&& check) {
  Harness h(id, opts.seed);
  std::mt19937_64 rng(opts.seed);
  Universe u3 = default_universe(3);
  std::vector<TotalMap> maps;
  for (const auto& m : all_maps(u3, default_universe(2))) maps.push_back(m);
  for (const auto& m : all_maps(u3, u3)) maps.push_back(m);
  for (int s = 0; s < opts.samples; ++s) {
    MultiFamily m = sample_increasing_multifamily(u3, rng);
    for (const TotalMap& map : maps) {
      bool ok = check(map, m);
      h.check(ok, [&] {
        MultiFamily small = shrink_multifamily(m, [&](const MultiFamily& cand) {
          return is_increasing(cand) && !check(map, cand);
        });
        return json{{"multifamily", multifamily_to_json(small)}, {"push", map_to_json(map)}};
      });
    }
  }
  return h.finish();
}

SweepReport sweep_prop_ia(const SweepOptions& opts) {
  return sweep_over_maps_and_samples("prop-ia", opts, [](const TotalMap& f, const MultiFamily& m) {
    return mf_geq(out_core(push_multifamily(f, m)), push_multifamily(f, out_core(m)));
  });
}

SweepReport sweep_prop_ib(const SweepOptions& opts) {
  return sweep_over_maps_and_samples("prop-ib", opts, [](const TotalMap& f, const MultiFamily& m) {
    return mf_geq(push_multifamily(f, inn_hull(m)), inn_hull(push_multifamily(f, m)));
  });
}

SweepReport sweep_prop_ii(const SweepOptions& opts) {
  Harness h("prop-ii", opts.seed);
  std::mt19937_64 rng(opts.seed);
  for (int n = 2; n <= 3; ++n) {
    Universe u = default_universe(n);
    auto topologies = enumerate_topologies(u);
    int per_topology = std::max(1, opts.samples / static_cast<int>(topologies.size()));
    for (const FiniteTopology& t : topologies) {
      for (int s = 0; s < per_topology; ++s) {
        MultiFamily m = sample_increasing_multifamily(u, rng);
        bool ok = mf_geq(out_core(closure_multifamily(m, t)),
                         closure_multifamily(out_core(m), t));
        h.check(ok, [&] {
          return json{{"multifamily", multifamily_to_json(m)}, {"topology", topology_to_json(t)}};
        });
      }
    }
  }
  return h.finish();
}

SweepReport sweep_prop_iii(const SweepOptions& opts) {
  Harness h("prop-iii", opts.seed);
  std::mt19937_64 rng(opts.seed);
  for (int n = 2; n <= 3; ++n) {
    Universe ux = default_universe(n);
    auto tx = enumerate_topologies(ux);
    for (int m = 2; m <= 3; ++m) {
      Universe uy = default_universe(m);
      auto ty = enumerate_topologies(uy);
      auto maps = all_maps(ux, uy);
      for (const FiniteTopology& dom : tx) {
        for (const FiniteTopology& cod : ty) {
          for (const TotalMap& f : maps) {
            if (!is_continuous(f, dom, cod)) continue;
            MultiFamily mm = sample_increasing_multifamily(ux, rng);
            bool ok = mf_geq(closure_multifamily(push_multifamily(f, mm), cod),
                             push_multifamily(f, closure_multifamily(mm, dom)));
            h.check(ok, [&] {
              return json{{"multifamily", multifamily_to_json(mm)},
                          {"push", map_to_json(f)},
                          {"domain_topology", topology_to_json(dom)},
                          {"codomain_topology", topology_to_json(cod)}};
            });
          }
        }
      }
    }
  }
  return h.finish();
}

SweepReport sweep_prop_ii_star(const SweepOptions& opts) {
  Harness h("prop-ii-star", opts.seed);
  std::mt19937_64 rng(opts.seed);
  for (int n = 1; n <= 3; ++n) {
    Universe u = default_universe(n);
    FiniteTopology t = FiniteTopology::discrete(u);
    for (int s = 0; s < opts.samples; ++s) {
      MultiFamily m = sample_increasing_multifamily(u, rng);
      MultiFamily lhs = inn_hull(closure_multifamily(m, t));
      MultiFamily rhs = closure_multifamily(inn_hull(m), t);
      bool ok = mf_geq(rhs, lhs);
      h.check(ok, [&] { return multifamily_to_json(m); });
    }
  }
  return h.finish();
}

SweepReport sweep_thm_lim(const SweepOptions& opts) {
  Harness h("thm-lim", opts.seed);
  std::mt19937_64 rng(opts.seed);
  Universe ux = default_universe(3);
  FiniteTopology tx = FiniteTopology::discrete(ux);
  for (int m = 2; m <= 3; ++m) {
    Universe uy = default_universe(m);
    FiniteTopology ty = FiniteTopology::discrete(uy);
    auto maps = all_maps(ux, uy);
    for (const TotalMap& f : maps) {
      int per_map = std::max(1, opts.samples / static_cast<int>(maps.size()));
      for (int s = 0; s < per_map; ++s) {
        MultiFamily inner = inn_hull(sample_increasing_multifamily(ux, rng));
        bool ok = multiset_geq(multiset_limit(push_multifamily(f, inner), ty),
                               multi_image(f, multiset_limit(inner, tx)));
        h.check(ok, [&] {
          return json{{"multifamily", multifamily_to_json(inner)}, {"push", map_to_json(f)}};
        });
      }
    }
  }
  return h.finish();
}

SweepReport sweep_cor_inn_seq(const SweepOptions& opts) {
  Harness h("cor-inn-seq", opts.seed);
  std::mt19937_64 rng(opts.seed);
  Universe ux = default_universe(3);
  FiniteTopology tx = FiniteTopology::discrete(ux);
  std::vector<std::pair<Universe, std::vector<TotalMap>>> targets;
  for (int m = 2; m <= 3; ++m) {
    Universe uy = default_universe(m);
    targets.emplace_back(uy, all_maps(ux, uy));
  }
  for (int s = 0; s < opts.samples; ++s) {
    EpSequence x = sample_epsequence_impl(ux, rng);
    MultiSet lim_x = seq_limit(x, tx, NatFamily::H);
    for (const auto& [uy, maps] : targets) {
      FiniteTopology ty = FiniteTopology::discrete(uy);
      for (const TotalMap& f : maps) {
        MultiSet lhs = seq_limit(x.mapped(f), ty, NatFamily::H);
        bool ok = multiset_geq(lhs, multi_image(f, lim_x));
        h.check(ok, [&] {
          return json{{"sequence", epsequence_to_json(x)}, {"push", map_to_json(f)}};
        });
      }
    }
  }
  return h.finish();
}

SweepReport sweep_inner_unique_limit(const SweepOptions& opts) {
  Harness h("inner-unique-limit", opts.seed);
  int n = std::min(opts.n, 4);
  Universe u = default_universe(n);
  FiniteTopology t = FiniteTopology::discrete(u);
  std::vector<std::pair<Universe, std::vector<TotalMap>>> targets;
  for (int m = 1; m <= 3; ++m) {
    Universe uy = default_universe(m);
    targets.emplace_back(uy, all_maps(u, uy));
  }
  enumerate_families(n, SpeciesFilter::inner_eventual, [&](const Family& f) {
    SubsetMask lim = limit_set(f, t);
    h.check(lim.popcount() <= 1, [&] { return family_to_json(f); });
    if (lim.popcount() != 1) return;
    int x0 = lim.elements().front();
    for (const auto& [uy, maps] : targets) {
      FiniteTopology ty = FiniteTopology::discrete(uy);
      for (const TotalMap& g : maps) {
        SubsetMask pushed = limit_set(push_family(g, f), ty);
        bool ok = pushed == SubsetMask::singleton(g(x0), uy.size());
        h.check(ok, [&] {
          return json{{"family", family_to_json(f)}, {"push", map_to_json(g)}};
        });
      }
    }
  });
  return h.finish();
}

SweepReport sweep_prop_flt(const SweepOptions& opts) {
  Harness h("prop-flt", opts.seed);
  int n = std::min(opts.n, 4);
  enumerate_families(n, SpeciesFilter::self_aso_eventual, [&](const Family& f) {
    PropFltReport r = prop_flt_report(f);
    h.check(r.all_equal(), [&] {
      Family shrunk = shrink_family(
          f, [](const Family& g) {
            return is_eventual(g) && is_self_aso(g) && !prop_flt_report(g).all_equal();
          });
      return json{{"family", family_to_json(shrunk)},
                  {"additive", r.additive},
                  {"no_nonmeasured", r.no_nonmeasured},
                  {"no_nonmeasured_3", r.no_nonmeasured_3},
                  {"filter", r.filter}};
    });
  });
  return h.finish();
}

SweepReport sweep_level_set_aso(const SweepOptions& opts) {
  Harness h("level-set-aso", opts.seed);
  std::mt19937_64 rng(opts.seed);
  static constexpr ExtNat chain[4] = {ExtNat(0), ExtNat(1), ExtNat(2), ExtNat::inf()};

  auto check_one = [&](const MultiFamily& m) {
    MultiFamily co = co_multifamily(m);
    int n = m.universe().size();
    for (ExtNat threshold : {ExtNat(0), ExtNat(1), ExtNat(2)}) {
      Family lhs = aso(upper_level_family(m, threshold));
      std::vector<SubsetMask> lower;
      for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b)
        if (co.values()[b] <= threshold) lower.push_back({b, n});
      bool ok = lhs == Family(m.universe(), lower);
      h.check(ok, [&] {
        return json{{"multifamily", multifamily_to_json(m)},
                    {"threshold", extnat_to_json(threshold)}};
      });
    }
  };

  // Exhaustive over the chain {0,1,2,inf} at n=2.
  Universe u2 = default_universe(2);
  for (int c0 = 0; c0 < 4; ++c0)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2)
        for (int c3 = 0; c3 < 4; ++c3) {
          MultiFamily m(u2, {chain[c0], chain[c1], chain[c2], chain[c3]});
          if (!is_increasing(m)) continue;
          check_one(m);
        }
  // Sampled at n=3.
  Universe u3 = default_universe(3);
  for (int s = 0; s < opts.samples; ++s) check_one(sample_increasing_multifamily(u3, rng));
  return h.finish();
}

SweepReport sweep_push_out_inn(const SweepOptions& opts) {
  return sweep_over_maps_and_samples(
      "push-out-inn", opts, [](const TotalMap& f, const MultiFamily& m) {
        return is_outer(push_multifamily(f, out_core(m))) &&
               is_inner(push_multifamily(f, inn_hull(m)));
      });
}

SweepReport sweep_cogap_formula(const SweepOptions& opts) {
  Harness h("cogap-formula", opts.seed);
  std::mt19937_64 rng(opts.seed);
  for (int s = 0; s < opts.samples; ++s) {
    EpSet e = sample_epset_impl(rng);
    ExtNat closed_form = extnat_min(std::array{ExtNat(2), cogap(e)});
    bool ok = out_cogap(e) == closed_form;

    // The even/odd split is the two-part cover realizing the closed form.
    auto [ev, od] = even_odd_split(e);
    ok = ok && ep_union(ev, od) == e && ep_intersect(ev, od) == EpSet();
    ok = ok && cogap(ev) <= ExtNat(1) && cogap(od) <= ExtNat(1);
    if (!ep_is_finite(e)) ok = ok && cogap(ev) + cogap(od) >= out_cogap(e);

    // No small ep cover does better.
    ok = ok && !out_cogap_beaten_by_bounded_cover(e, 3, 12);

    // Disjoint witnesses certify Inn coGap(S) >= K for every K.
    if (!ep_is_finite(e)) {
      for (int k = 1; k <= 4; ++k) {
        auto parts = inn_cogap_witness(e, k);
        ok = ok && static_cast<int>(parts.size()) == k;
        EpSet whole;
        for (std::size_t i = 0; ok && i < parts.size(); ++i) {
          ok = !ep_is_finite(parts[i]) && cogap(parts[i]) >= ExtNat(1);
          for (std::size_t j = i + 1; ok && j < parts.size(); ++j)
            ok = ep_intersect(parts[i], parts[j]) == EpSet();
          whole = ep_union(whole, parts[i]);
        }
        ok = ok && whole == e;
      }
    }
    h.check(ok, [&] { return epset_to_json(e); });
  }
  return h.finish();
}

SweepReport sweep_rerere_analog(const SweepOptions& opts) {
  Harness h("rerere-analog", opts.seed);
  std::mt19937_64 rng(opts.seed);
  Universe u({"a", "b"});
  FiniteTopology t = FiniteTopology::discrete(u);

  // Constant sequence: the coGap-limit holds the limit point infinitely
  // often and nothing else.
  EpSequence constant = EpSequence::constant(u, 0);
  MultiSet lim_const = seq_limit(constant, t, NatFamily::CoGap);
  h.check(lim_const == MultiSet(u, {ExtNat::inf(), ExtNat(0)}),
          [&] { return multiset_to_json(lim_const); });

  // Alternating sequence: coGap multiplicity 1 at both points, no H-limit.
  EpSequence alternating(u, {}, {0, 1});
  MultiSet lim_alt = seq_limit(alternating, t, NatFamily::CoGap);
  h.check(lim_alt == MultiSet(u, {ExtNat(1), ExtNat(1)}),
          [&] { return multiset_to_json(lim_alt); });
  MultiSet lim_h = seq_limit(alternating, t, NatFamily::H);
  h.check(lim_h == MultiSet(u, {ExtNat(0), ExtNat(0)}),
          [&] { return multiset_to_json(lim_h); });
  MultiSet lim_g = seq_limit(alternating, t, NatFamily::G);
  h.check(lim_g == MultiSet(u, {ExtNat(1), ExtNat(1)}),
          [&] { return multiset_to_json(lim_g); });

  // Forgetting multiplicities, the coGap-limit is the set of accumulation
  // points, i.e. the G-limit support.
  for (int n = 2; n <= 3; ++n) {
    Universe un = default_universe(n);
    FiniteTopology tn = FiniteTopology::discrete(un);
    for (int s = 0; s < opts.samples; ++s) {
      EpSequence x = sample_epsequence_impl(un, rng);
      SubsetMask cogap_support = seq_limit(x, tn, NatFamily::CoGap).support();
      SubsetMask g_support = seq_limit(x, tn, NatFamily::G).support();
      h.check(cogap_support == g_support, [&] { return epsequence_to_json(x); });
    }
  }
  return h.finish();
}

struct SweepDef {
  const char* id;
  SweepReport (*run)(const SweepOptions&);
};

constexpr SweepDef sweep_defs[] = {
    {"simple-observ", sweep_simple_observ},
    {"aso-involution", sweep_aso_involution},
    {"push-aso-commute", sweep_push_aso_commute},
    {"prop-ia", sweep_prop_ia},
    {"prop-ib", sweep_prop_ib},
    {"prop-ii", sweep_prop_ii},
    {"prop-iii", sweep_prop_iii},
    {"prop-ii-star", sweep_prop_ii_star},
    {"thm-lim", sweep_thm_lim},
    {"cor-inn-seq", sweep_cor_inn_seq},
    {"inner-unique-limit", sweep_inner_unique_limit},
    {"prop-flt", sweep_prop_flt},
    {"level-set-aso", sweep_level_set_aso},
    {"push-out-inn", sweep_push_out_inn},
    {"cogap-formula", sweep_cogap_formula},
    {"rerere-analog", sweep_rerere_analog},
};

}  // namespace

EpSet sample_epset(std::mt19937_64& rng) { return sample_epset_impl(rng); }

EpSequence sample_epsequence(const Universe& u, std::mt19937_64& rng) {
  return sample_epsequence_impl(u, rng);
}

const std::vector<std::string>& sweep_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : sweep_defs) v.emplace_back(d.id);
    return v;
  }();
  return ids;
}

SweepReport run_sweep(const std::string& id, const SweepOptions& opts) {
  for (const auto& d : sweep_defs)
    if (id == d.id) return d.run(opts);
  throw std::invalid_argument("run_sweep: unknown sweep id '" + id + "'");
}

std::vector<SweepReport> run_all_sweeps(const SweepOptions& opts) {
  std::vector<SweepReport> out;
  for (const auto& d : sweep_defs) out.push_back(d.run(opts));
  return out;
}

nlohmann::json SweepReport::to_json() const {
  nlohmann::json j{{"id", id},
                   {"instances", instances},
                   {"passes", passes},
                   {"seed", seed},
                   {"elapsed_ms", elapsed_ms},
                   {"ok", ok()}};
  j["counterexample"] = counterexample ? *counterexample : nlohmann::json(nullptr);
  return j;
}

Family shrink_family(Family f, const std::function<bool(const Family&)>& fails) {
  if (!fails(f)) return f;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (SubsetMask m : f.members()) {
      std::vector<SubsetMask> fewer;
      for (SubsetMask x : f.members())
        if (!(x == m)) fewer.push_back(x);
      Family candidate(f.universe(), fewer);
      if (fails(candidate)) {
        f = candidate;
        shrunk = true;
        break;
      }
    }
  }
  return f;
}

MultiFamily shrink_multifamily(MultiFamily m,
                               const std::function<bool(const MultiFamily&)>& fails) {
  if (!fails(m)) return m;
  auto lower = [](ExtNat v) {
    if (v.is_inf()) return ExtNat(2);
    return ExtNat(v.finite_value() - 1);
  };
  int n = m.universe().size();
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::uint32_t b = 0; b <= SubsetMask::full_bits(n); ++b) {
      ExtNat v = m.values()[b];
      if (v == ExtNat(0)) continue;
      MultiFamily candidate = m.with_value({b, n}, lower(v));
      if (fails(candidate)) {
        m = candidate;
        shrunk = true;
        break;
      }
    }
  }
  return m;
}

}  // namespace setfam
