#include <doctest.h>

#include <set>

#include "hyperres/bounds.hpp"
#include "hyperres/canonical.hpp"
#include "hyperres/constructions.hpp"
#include "hyperres/error.hpp"
#include "hyperres/resilience.hpp"
#include "hyperres/search.hpp"
#include "hyperres/solvers.hpp"
#include "oracles.hpp"

using namespace hyperres;

namespace {

SearchResult run(int k, int s, int t, int max_n, int threads = 1) {
  SearchSpec spec;
  spec.k = k;
  spec.s = s;
  spec.t = t;
  spec.max_n = max_n;
  spec.threads = threads;
  return max_resilient_family(spec);
}

// Every isomorphism class on [n] reachable from the empty family by adding
// edges while staying inside the pruned region, found level by level.
struct Enumeration {
  std::size_t classes = 0;
  std::size_t best = 0;
  std::set<std::vector<Mask>> best_forms;
};

Enumeration enumerate(int k, int s, int t, int n) {
  std::vector<Mask> all;
  for (Mask e = 0; e < (Mask{1} << n); ++e) {
    if (oracle::popcnt(e) == k) all.push_back(e);
  }
  const bool cap = t == k - 1;
  long size_cap = 1;
  for (int i = 0; i < k; ++i) size_cap *= k * s;

  auto inside = [&](const std::vector<Mask>& edges) {
    if (oracle::max_disjoint(edges, 0, 0) > s) return false;
    if (!cap) return true;
    if (static_cast<long>(edges.size()) > size_cap) return false;
    for (Mask sub = 0; sub < (Mask{1} << n); ++sub) {
      if (oracle::popcnt(sub) != k - 1) continue;
      int deg = 0;
      for (Mask e : edges) deg += (e & sub) == sub;
      if (deg > k * s) return false;
    }
    return true;
  };

  Enumeration out;
  std::set<std::vector<Mask>> level{{}};
  while (!level.empty()) {
    out.classes += level.size();
    std::set<std::vector<Mask>> next;
    for (const auto& form : level) {
      const KFamily f(k, n, form);
      if (!form.empty() && oracle::nu(f) == s && oracle::resilient(f, t)) {
        if (form.size() > out.best) {
          out.best = form.size();
          out.best_forms.clear();
        }
        if (form.size() == out.best) out.best_forms.insert(form);
      }
      for (Mask e : all) {
        if (f.contains(e)) continue;
        std::vector<Mask> edges = form;
        edges.push_back(e);
        if (!inside(edges)) continue;
        next.insert(oracle::min_form(KFamily(k, n, edges)));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("search golden values") {
  const SearchResult tri = run(2, 1, 1, 5);
  CHECK(tri.found);
  CHECK(tri.best_size == 3);
  CHECK(tri.exhausted);
  REQUIRE(tri.witnesses.size() == 1);
  CHECK(isomorphic(tri.witnesses[0], KFamily::from_edge_lists(
                                         2, 5, {{1, 2}, {2, 3}, {1, 3}})));

  const SearchResult k5 = run(2, 2, 1, 6);
  CHECK(k5.best_size == 10);
  CHECK(k5.exhausted);
  REQUIRE(k5.witnesses.size() == 1);
  CHECK(k5.witnesses[0].n() == 6);

  const SearchResult ten = run(3, 1, 2, 6);
  CHECK(ten.best_size == 10);
  CHECK(ten.exhausted);
  CHECK(ten.witnesses.size() > 1);
  bool has_k5 = false;
  const KFamily k5_3 = complete_k_graph(5, 3);
  const KFamily k53(3, 6, std::vector<Mask>(k5_3.edges().begin(),
                                            k5_3.edges().end()));
  for (const KFamily& w : ten.witnesses) has_k5 = has_k5 || isomorphic(w, k53);
  CHECK(has_k5);
}

TEST_CASE("node counts and optima agree with an exhaustive class enumeration") {
  const int cases[][4] = {{2, 1, 1, 5}, {2, 2, 1, 6}, {3, 1, 2, 5},
                          {3, 1, 2, 6}, {2, 1, 0, 5}, {3, 1, 1, 5}};
  for (const auto& c : cases) {
    CAPTURE(c[0]);
    CAPTURE(c[1]);
    CAPTURE(c[2]);
    CAPTURE(c[3]);
    const SearchResult r = run(c[0], c[1], c[2], c[3]);
    const Enumeration truth = enumerate(c[0], c[1], c[2], c[3]);
    CHECK(r.exhausted);
    CHECK(r.nodes == truth.classes);
    CHECK(r.best_size == truth.best);
    std::set<std::vector<Mask>> forms;
    for (const KFamily& w : r.witnesses) forms.insert(oracle::min_form(w));
    CHECK(forms.size() == r.witnesses.size());
    CHECK(forms == truth.best_forms);
  }
}

TEST_CASE("witnesses are valid and canonical") {
  for (const SearchResult& r : {run(3, 1, 2, 6), run(2, 2, 1, 6)}) {
    for (const KFamily& w : r.witnesses) {
      CHECK(w.size() == r.best_size);
      CHECK(matching_number(w).nu == r.spec.s);
      CHECK(is_t_resilient(w, r.spec.t));
      CHECK(canonical_family(w) == w);
    }
  }
}

TEST_CASE("results do not depend on thread count") {
  const SearchResult one = run(3, 1, 2, 6, 1);
  for (int threads : {2, 3, 8}) {
    const SearchResult many = run(3, 1, 2, 6, threads);
    CHECK(many.best_size == one.best_size);
    CHECK(many.witnesses == one.witnesses);
    CHECK(many.nodes == one.nodes);
    CHECK(many.exhausted);
  }
}

TEST_CASE("verify modes") {
  SearchSpec spec;
  spec.k = 2;
  spec.s = 2;
  spec.t = 1;
  spec.max_n = 6;
  spec.mode = SearchMode::kVerifyUnique;
  spec.target = 10;
  SearchResult r = max_resilient_family(spec);
  REQUIRE(r.target_confirmed);
  CHECK(*r.target_confirmed);

  spec.target = 9;
  spec.mode = SearchMode::kVerifyTarget;
  r = max_resilient_family(spec);
  CHECK_FALSE(*r.target_confirmed);

  spec.k = 3;
  spec.s = 1;
  spec.t = 2;
  spec.target = 10;
  spec.mode = SearchMode::kVerifyUnique;
  r = max_resilient_family(spec);
  CHECK(r.best_size == 10);
  CHECK_FALSE(*r.target_confirmed);
  spec.mode = SearchMode::kVerifyTarget;
  r = max_resilient_family(spec);
  CHECK(*r.target_confirmed);

  spec.target = 11;
  r = max_resilient_family(spec);
  CHECK_FALSE(r.found);
  CHECK_FALSE(*r.target_confirmed);
}

TEST_CASE("budget and degenerate cases") {
  SearchSpec spec;
  spec.k = 3;
  spec.s = 1;
  spec.t = 2;
  spec.max_n = 6;
  spec.node_budget = 20;
  const SearchResult cut = max_resilient_family(spec);
  CHECK_FALSE(cut.exhausted);
  CHECK(cut.nodes == 20);
  CHECK(cut.scope_note().find("lower bound") != std::string::npos);

  const SearchResult none = run(3, 2, 2, 5);
  CHECK(none.exhausted);
  CHECK_FALSE(none.found);
  CHECK(none.witnesses.empty());

  SearchSpec bad;
  bad.t = 3;
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
  bad = SearchSpec{};
  bad.mode = SearchMode::kVerifyTarget;
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
  bad = SearchSpec{};
  bad.threads = 0;
  CHECK_THROWS_AS(max_resilient_family(bad), InvalidArgument);
  CHECK(search_mode_from_string(to_string(SearchMode::kVerifyUnique)) ==
        SearchMode::kVerifyUnique);
  CHECK_THROWS_AS(search_mode_from_string("fastest"), InvalidArgument);
}

TEST_CASE("complete k-graph lower bounds") {
  const LowerBoundReport a = verify_lower_bound(3, 2, 2);
  CHECK(a.n == 8);
  CHECK(a.size == 56);
  CHECK(a.nu == 2);
  CHECK(a.certified);
  CHECK(verify_lower_bound(3, 1, 2).size == 10);
  CHECK(verify_lower_bound(2, 2, 1).size == 10);
  CHECK(verify_lower_bound(4, 2, 3).size == binomial(11, 4));
  CHECK_THROWS_AS(verify_lower_bound(3, 4, 2), InvalidArgument);
  const auto j = to_json(a);
  CHECK(j["certified"] == true);
}

TEST_CASE("search JSON") {
  const auto j = to_json(run(2, 1, 1, 5));
  for (const char* key : {"k", "s", "t", "max_n", "mode", "node_budget",
                          "threads", "found", "best_size", "witnesses",
                          "exhausted", "nodes", "scope"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["best_size"] == 3);
  CHECK(j["mode"] == "maximize");
}
