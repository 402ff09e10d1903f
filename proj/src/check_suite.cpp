#include "hyperres/check_suite.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "hyperres/bounds.hpp"
#include "hyperres/constructions.hpp"
#include "hyperres/io.hpp"
#include "hyperres/resilience.hpp"
#include "hyperres/search.hpp"
#include "hyperres/solvers.hpp"
#include "hyperres/structure.hpp"
#include "hyperres/sunflower.hpp"

namespace hyperres {

namespace {

bool is_resilient_nu2(const KFamily& f) {
  return has_matching_of_size(f, 2) && !has_matching_of_size(f, 3) &&
         is_t_resilient(f, 2);
}

/// Accumulates the outcome of one check. The first few failures are
/// spelled out in the detail; every failing family is dumped.
class Recorder {
 public:
  Recorder(std::string name, std::string statement,
           const std::optional<std::filesystem::path>& dump_dir)
      : dump_dir_(dump_dir) {
    entry_.name = std::move(name);
    entry_.statement = std::move(statement);
  }

  void pass() { ++entry_.cases; }

  void expect(bool ok, const std::string& what,
              const KFamily* family = nullptr) {
    ++entry_.cases;
    if (ok) return;
    entry_.passed = false;
    if (++failures_ <= 3) {
      if (!entry_.detail.empty()) entry_.detail += "; ";
      entry_.detail += what;
    }
    if (family != nullptr) dump(*family);
  }

  CheckEntry finish() {
    if (failures_ > 3) {
      entry_.detail += "; " + std::to_string(failures_ - 3) + " more";
    }
    if (entry_.passed && entry_.detail.empty()) {
      entry_.detail = std::to_string(entry_.cases) + " cases";
    }
    return std::move(entry_);
  }

 private:
  void dump(const KFamily& f) {
    if (!dump_dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dump_dir_, ec);
    const auto path = *dump_dir_ / (entry_.name + "-" +
                                    std::to_string(entry_.dumps.size()) +
                                    ".txt");
    std::ofstream out(path);
    out << "# counterexample to " << entry_.name << "\n" << format_family(f);
    entry_.dumps.push_back(path.string());
  }

  CheckEntry entry_;
  const std::optional<std::filesystem::path>& dump_dir_;
  std::size_t failures_ = 0;
};

std::string pair_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

CheckEntry golden_check(const SuiteOptions& o) {
  Recorder rec("golden_k8", "complete 3-graph on [8]: 56 edges, nu 2, tau 6, "
                            "2-resilient",
               o.dump_dir);
  const KFamily f = complete_k_graph(8, 3);
  rec.expect(f.size() == 56, "size " + std::to_string(f.size()));
  const int nu = matching_number(f).nu;
  rec.expect(nu == 2, "nu " + std::to_string(nu));
  const int tau = covering_number(f).tau;
  rec.expect(tau == 6, "tau " + std::to_string(tau));
  const ResilienceReport r = resilience_profile(f);
  rec.expect(r.max_t == 2, "max_t " + std::to_string(r.max_t));
  return rec.finish();
}

CheckEntry lower_bound_check(const SuiteOptions& o) {
  Recorder rec("lower_bounds",
               "complete k-graph on sk+k-1 vertices has nu = s and is "
               "(k-1)-resilient",
               o.dump_dir);
  for (int k = 2; k <= 4; ++k) {
    for (int s = 1; s * k + k - 1 <= 11; ++s) {
      const LowerBoundReport r = verify_lower_bound(k, s, k - 1);
      rec.expect(r.certified && r.size == binomial(r.n, k),
                 "k=" + std::to_string(k) + " s=" + std::to_string(s));
    }
  }
  return rec.finish();
}

CheckEntry tuv_sharpness_check(const SuiteOptions& o) {
  Recorder rec("tuv_sharp_k8",
               "complete 3-graph on [8]: |T_uv| = 36 and the u,v weight "
               "table totals 36 for every pair",
               o.dump_dir);
  const KFamily f = complete_k_graph(8, 3);
  for (int u = 1; u <= 8; ++u) {
    for (int v = u + 1; v <= 8; ++v) {
      const auto pair = disjoint_pair_avoiding(f, vertex_bit(u) | vertex_bit(v));
      const WeightTable t =
          weight_decomposition_uv(f, u, v, pair->first, pair->second);
      rec.expect(count_uv(f, u, v) == 36 && t.doubled_total == 72 &&
                     t.identity_holds() && t.residual.empty(),
                 pair_name(u, v));
    }
  }
  return rec.finish();
}

/// A random 3-graph on [n] containing the disjoint edges a and b.
KFamily random_ab_instance(std::mt19937_64& rng, Mask& a, Mask& b) {
  std::uniform_int_distribution<int> n_dist(6, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = n_dist(rng);
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(verts.begin(), verts.end(), rng);
  a = vertex_bit(verts[0]) | vertex_bit(verts[1]) | vertex_bit(verts[2]);
  b = vertex_bit(verts[3]) | vertex_bit(verts[4]) | vertex_bit(verts[5]);
  const double p = unit(rng);
  std::vector<Mask> edges{a, b};
  for_each_subset_of_size(n, 3, [&](Mask m) {
    if (unit(rng) < p) edges.push_back(m);
  });
  return KFamily(3, n, std::move(edges));
}

CheckEntry t0_identity_check(const SuiteOptions& o) {
  Recorder rec("t0_identity",
               "|T0| equals the sum of omega over A x B; 36 for the complete "
               "3-graph on [8]",
               o.dump_dir);
  const KFamily k8 = complete_k_graph(8, 3);
  const WeightTable full =
      weight_decomposition_ab(k8, 0b111, 0b111000);
  rec.expect(full.identity_holds() && full.doubled_total == 72,
             "complete case total " + std::to_string(full.doubled_total) +
                 "/2");
  std::mt19937_64 rng(o.seed ^ 0x7430);
  for (int i = 0; i < 1000; ++i) {
    Mask a = 0;
    Mask b = 0;
    const KFamily f = random_ab_instance(rng, a, b);
    const WeightTable t = weight_decomposition_ab(f, a, b);
    rec.expect(t.identity_holds(), "instance " + std::to_string(i), &f);
  }
  return rec.finish();
}

CheckEntry fact_4_4_check(const SuiteOptions& o) {
  Recorder rec("graph_classification",
               "a graph with no pseudo sunflower of size 3 is a triangle or "
               "a subgraph of C4 (all graphs on <= 6 labeled vertices)",
               o.dump_dir);
  for (int n = 2; n <= 6; ++n) {
    std::vector<Mask> all;
    for_each_subset_of_size(n, 2, [&](Mask m) { all.push_back(m); });
    const std::uint64_t total = std::uint64_t{1} << all.size();
    for (std::uint64_t pick = 0; pick < total; ++pick) {
      std::vector<Mask> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((pick >> i) & 1) edges.push_back(all[i]);
      }
      const KFamily g(2, n, std::move(edges));
      const bool free = !find_pseudo_sunflower(g, 3).has_value();
      const bool small = classify_sunflower_free_graph(g) != GraphClass::kNeither;
      if (free == small) {
        rec.pass();
      } else {
        rec.expect(false, "graph " + format_family(g), &g);
      }
    }
  }
  return rec.finish();
}

CheckEntry furedi_check(const SuiteOptions& o,
                        const std::vector<KFamily>& corpus) {
  Recorder rec("furedi",
               "a k-graph with more than r^k edges has a pseudo sunflower of "
               "size r+1",
               o.dump_dir);
  std::vector<KFamily> pool;
  for (auto& [name, g] : graph_gallery()) pool.push_back(g);
  pool.push_back(complete_k_graph(8, 3));
  pool.push_back(fixture_four_edges());
  pool.insert(pool.end(), corpus.begin(), corpus.end());
  for (const KFamily& f : pool) {
    for (int r = 1; r <= 3; ++r) {
      const FurediVerdict v = assert_furedi(f, r);
      const bool valid =
          !v.witness || (v.witness->size() == r + 1 &&
                         is_pseudo_sunflower_of(f, *v.witness));
      rec.expect(!v.internal_error && valid &&
                     (!v.bound_exceeded || v.witness.has_value()),
                 "r=" + std::to_string(r), &f);
    }
  }
  return rec.finish();
}

std::vector<CheckEntry> corpus_checks(const SuiteOptions& o,
                                      const std::vector<KFamily>& corpus) {
  Recorder valid("corpus_valid", "every corpus family has nu = 2 and is "
                                 "2-resilient",
                 o.dump_dir);
  Recorder sunflower("no_pseudo_sunflower_3s_plus_1",
                     "no pseudo sunflower of size 3s+1 = 7", o.dump_dir);
  Recorder degree("pair_degree", "every pair lies in at most 3s = 6 edges",
                  o.dump_dir);
  Recorder tuv("tuv_bound",
               "|T_uv| <= 36 for all u,v, and the u,v weight table totals "
               "|T_uv| with no residual edges",
               o.dump_dir);
  Recorder t0("t0_bound",
              "for disjoint edges A,B: |T0| equals the omega total and is "
              "at most 36",
              o.dump_dir);
  Recorder cross("cross_permutation",
                 "any two maximum matchings admit sigma with "
                 "Ti meeting V_sigma(i)",
                 o.dump_dir);
  Recorder unions("union_family_intersecting",
                  "the 2-fold union family is 2-intersecting", o.dump_dir);
  Recorder profile("edge_profile",
                   "no edge misses the union of a maximum matching",
                   o.dump_dir);

  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const KFamily& f = corpus[idx];
    const std::string tag = "family " + std::to_string(idx);
    valid.expect(is_resilient_nu2(f), tag, &f);

    sunflower.expect(!find_pseudo_sunflower(f, 7).has_value(), tag, &f);
    degree.expect(f.max_degree(2) <= 6, tag, &f);

    std::string tuv_fail;
    for (int u = 1; u <= f.n() && tuv_fail.empty(); ++u) {
      for (int v = u + 1; v <= f.n() && tuv_fail.empty(); ++v) {
        const std::size_t count = count_uv(f, u, v);
        const auto pair =
            disjoint_pair_avoiding(f, vertex_bit(u) | vertex_bit(v));
        if (!pair) {
          tuv_fail = pair_name(u, v) + " has no disjoint pair avoiding it";
          break;
        }
        const WeightTable t =
            weight_decomposition_uv(f, u, v, pair->first, pair->second);
        if (count > 36 || t.edge_count != count || !t.identity_holds() ||
            !t.residual.empty()) {
          tuv_fail = "at " + pair_name(u, v);
        }
      }
    }
    tuv.expect(tuv_fail.empty(), tag + " " + tuv_fail, &f);

    bool t0_ok = true;
    const auto edges = f.edges();
    for (std::size_t i = 0; i < edges.size() && t0_ok; ++i) {
      for (std::size_t j = i + 1; j < edges.size() && t0_ok; ++j) {
        if ((edges[i] & edges[j]) != 0) continue;
        const WeightTable t = weight_decomposition_ab(f, edges[i], edges[j]);
        t0_ok = t.identity_holds() && t.edge_count <= 36;
      }
    }
    t0.expect(t0_ok, tag, &f);

    const std::vector<Matching> maximum = all_matchings_of_size(f, 2);
    bool cross_ok = true;
    for (std::size_t i = 0; i < maximum.size() && cross_ok; ++i) {
      for (std::size_t j = i; j < maximum.size() && cross_ok; ++j) {
        cross_ok = matchings_cross_permutation(f, maximum[i], maximum[j])
                       .sigma.has_value();
      }
    }
    cross.expect(cross_ok, tag, &f);

    const KFamily r = s_fold_union_family(f, 2);
    unions.expect(!r.empty() && is_t_intersecting(r, 2), tag, &f);

    if (maximum.empty()) {
      profile.expect(false, tag + " has no 2-matching", &f);
    } else {
      const EdgeProfile p = edge_profile(f, maximum.front());
      profile.expect(p.disjoint == 0 && p.total() == f.size(), tag, &f);
    }
  }

  std::vector<CheckEntry> out;
  for (Recorder* r :
       {&valid, &sunflower, &degree, &tuv, &t0, &cross, &unions, &profile}) {
    out.push_back(r->finish());
  }
  return out;
}

CheckEntry bounds_check(const SuiteOptions& o) {
  Recorder rec("bound_identities",
               "floor((e-1)4!) = 41; f(s,s) = 73/6 s^3 - 19/2 s^2 + 22/3 s; "
               "f'((4s-1)/5) = (2/15)(6s^2 - 123s - 14); max_t f(s,t) < "
               "73/6 s^3 + 50 for s = 3..20",
               o.dump_dir);
  rec.expect(el_lower_bound(4).value == 41, "el(4)");
  const Polynomial f = f_poly_symbolic();
  rec.expect(f == f_poly_expanded(), "expanded form");
  const Polynomial S = Polynomial::s();
  const Polynomial diag = Polynomial(Rational(73, 6)) * S * S * S -
                          Polynomial(Rational(19, 2)) * S * S +
                          Polynomial(Rational(22, 3)) * S;
  rec.expect(f.substitute_t(S) == diag, "f(s,s) symbolic");
  for (long s = 2; s <= 50; ++s) {
    rec.expect(f_poly(s, s).value == diag.evaluate(s, 0),
               "f(s,s) at s=" + std::to_string(s));
  }
  const Polynomial at = (Polynomial(4L) * S - Polynomial(1L)) *
                        Polynomial(Rational(1, 5));
  const Polynomial printed =
      Polynomial(Rational(2, 15)) *
      (Polynomial(6L) * S * S - Polynomial(123L) * S - Polynomial(14L));
  rec.expect(f.derivative_t().substitute_t(at) == printed, "derivative");
  for (long s = 3; s <= 20; ++s) {
    rec.expect(f_poly_max(s).first < fw_cubic_bound(s).value,
               "max f at s=" + std::to_string(s));
  }
  for (const Anchor& a : misc_anchors()) {
    const bool ok = (a.name == "graph_bound_s1" && a.value == 3) ||
                    (a.name == "graph_bound_s2" && a.value == 10) ||
                    (a.name == "conj_bound_s1" && a.value == 10) ||
                    (a.name == "conj_bound_s2" && a.value == 56) ||
                    (a.name == "c_7_4" && a.value == 35) ||
                    (a.name == "m41_lower" && a.value == 42) ||
                    (a.name == "m41_upper" && a.value == 175);
    rec.expect(ok, a.name);
  }
  rec.expect(el_lower_bound(4).value > binomial(7, 4) &&
                 el_lower_bound(4).value < 42,
             "35 < 41 < 42");
  return rec.finish();
}

/// Random intersecting 3-graphs on [n], n in 5..7, grown edge by edge.
std::vector<KFamily> intersecting_sample(std::size_t count,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_dist(5, 7);
  std::vector<KFamily> out;
  std::set<std::vector<Mask>> seen;
  while (out.size() < count) {
    const int n = n_dist(rng);
    std::vector<Mask> all;
    for_each_subset_of_size(n, 3, [&](Mask m) { all.push_back(m); });
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Mask> edges;
    for (Mask m : all) {
      if (std::all_of(edges.begin(), edges.end(),
                      [&](Mask e) { return (e & m) != 0; })) {
        edges.push_back(m);
        KFamily f(3, n, edges);
        std::vector<Mask> key(f.edges().begin(), f.edges().end());
        key.push_back(static_cast<Mask>(n));
        if (seen.insert(key).second) out.push_back(std::move(f));
        if (out.size() == count) break;
      }
    }
  }
  return out;
}

CheckEntry intersecting_check(const SuiteOptions& o) {
  Recorder rec("intersecting_resilience",
               "an intersecting k-graph is (k-1)-resilient iff tau = k; its "
               "closure is maximal intersecting with tau = k",
               o.dump_dir);
  const auto sample = intersecting_sample(o.quick ? 150 : 600, o.seed ^ 0x1e);
  for (const KFamily& f : sample) {
    const int tau = covering_number(f).tau;
    rec.expect(is_t_resilient(f, 2) == (tau == 3), "equivalence", &f);
    if (tau != 3) continue;
    const KFamily c = maximal_intersecting_closure(f);
    bool maximal = true;
    for_each_subset_of_size(f.n(), 3, [&](Mask m) {
      if (c.contains(m)) return;
      bool meets_all = true;
      for (Mask e : c.edges()) meets_all = meets_all && (e & m) != 0;
      if (meets_all) maximal = false;
    });
    rec.expect(is_t_intersecting(c, 1) && covering_number(c).tau == 3 &&
                   maximal,
               "closure", &f);
  }
  return rec.finish();
}

}  // namespace

std::vector<KFamily> resilient_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const KFamily k8 = complete_k_graph(8, 3);
  std::vector<KFamily> out;
  std::set<std::vector<Mask>> seen;
  auto keep = [&](const KFamily& f) {
    std::vector<Mask> key(f.edges().begin(), f.edges().end());
    if (seen.insert(std::move(key)).second) out.push_back(f);
  };

  const std::size_t from_subsets = count / 2;
  std::size_t attempts = 0;
  while (out.size() < from_subsets && attempts < 200 * count) {
    ++attempts;
    const double p = 0.6 + 0.4 * unit(rng);
    std::vector<Mask> edges;
    for (Mask e : k8.edges()) {
      if (unit(rng) < p) edges.push_back(e);
    }
    KFamily f(3, 8, std::move(edges));
    if (is_resilient_nu2(f)) keep(f);
  }

  while (out.size() < count) {
    std::vector<Mask> current(k8.edges().begin(), k8.edges().end());
    std::vector<Mask> order = current;
    std::shuffle(order.begin(), order.end(), rng);
    const double snapshot = 0.15 + 0.25 * unit(rng);
    for (Mask e : order) {
      std::vector<Mask> trial;
      trial.reserve(current.size());
      for (Mask g : current) {
        if (g != e) trial.push_back(g);
      }
      KFamily f(3, 8, trial);
      if (!is_resilient_nu2(f)) continue;
      current = std::move(trial);
      if (unit(rng) < snapshot) keep(f);
      if (out.size() == count) break;
    }
  }
  return out;
}

bool SuiteReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CheckEntry& e) { return e.passed; });
}

CheckEntry lovasz_consistency_check() {
  CheckEntry e;
  e.name = "lovasz_reading";
  e.statement = "m(3,2) = 56 against both readings of the general bound";
  const LovaszBound b = lovasz_bound(3, 2);
  const Rational m32 = 56;
  e.cases = 2;
  e.passed = m32 <= b.as_corollary.value;
  e.known_discrepancy = m32 > b.as_printed.value;
  std::ostringstream detail;
  detail << "56 <= " << b.as_corollary.value << " ((ks)^k) "
         << (e.passed ? "holds" : "FAILS");
  if (e.known_discrepancy) {
    detail << "; 56 > " << b.as_printed.value
           << " ((ks)^s as printed), a known statement discrepancy";
  }
  e.detail = detail.str();
  return e;
}

SuiteReport check_paper_suite(const SuiteOptions& options) {
  SuiteReport report;
  const std::vector<KFamily> corpus =
      resilient_corpus(options.quick ? 40 : 200, options.seed);
  report.corpus_size = corpus.size();

  report.entries.push_back(golden_check(options));
  report.entries.push_back(lower_bound_check(options));
  report.entries.push_back(tuv_sharpness_check(options));
  report.entries.push_back(t0_identity_check(options));
  report.entries.push_back(fact_4_4_check(options));
  for (CheckEntry& e : corpus_checks(options, corpus)) {
    report.entries.push_back(std::move(e));
  }
  report.entries.push_back(furedi_check(options, corpus));
  report.entries.push_back(bounds_check(options));
  report.entries.push_back(lovasz_consistency_check());
  report.entries.push_back(intersecting_check(options));
  return report;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const CheckEntry& e : r.entries) {
    entries.push_back({{"name", e.name},
                       {"statement", e.statement},
                       {"passed", e.passed},
                       {"known_discrepancy", e.known_discrepancy},
                       {"cases", e.cases},
                       {"detail", e.detail},
                       {"dumps", e.dumps}});
  }
  return {{"passed", r.all_passed()},
          {"corpus_size", r.corpus_size},
          {"checks", entries}};
}

}  // namespace hyperres
