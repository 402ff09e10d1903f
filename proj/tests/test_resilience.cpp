#include <doctest.h>

#include <random>

#include "hyperres/constructions.hpp"
#include "hyperres/error.hpp"
#include "hyperres/resilience.hpp"
#include "hyperres/solvers.hpp"
#include "oracles.hpp"

using namespace hyperres;

TEST_CASE("is_t_resilient examples") {
  CHECK(is_t_resilient(complete_k_graph(8, 3), 2));
  CHECK_FALSE(is_t_resilient(KFamily::from_edge_lists(3, 3, {{1, 2, 3}}), 1));
  CHECK(is_t_resilient(complete_k_graph(5, 2), 1));
  CHECK(is_t_resilient(complete_k_graph(5, 2), 0));
  CHECK(is_t_resilient(KFamily(3, 5), 3));
  CHECK_THROWS_AS(is_t_resilient(complete_k_graph(5, 2), 6), InvalidArgument);
  CHECK_THROWS_AS(is_t_resilient(complete_k_graph(5, 2), -1), InvalidArgument);
}

TEST_CASE("resilience profile examples") {
  const ResilienceReport k8 = resilience_profile(complete_k_graph(8, 3));
  CHECK(k8.nu == 2);
  CHECK(k8.max_t == 2);
  REQUIRE(k8.violating_set);
  CHECK(*k8.violating_set == VertexSet{1, 2, 3});

  const ResilienceReport two = resilience_profile(
      KFamily::from_edge_lists(3, 6, {{1, 2, 3}, {4, 5, 6}}));
  CHECK(two.max_t == 0);
  CHECK(*two.violating_set == VertexSet{1});

  const ResilienceReport fx = resilience_profile(fixture_four_edges());
  CHECK(fx.nu == 2);
  CHECK(fx.max_t == 0);
  CHECK(*fx.violating_set == VertexSet{5});

  CHECK_THROWS_AS(resilience_profile(KFamily(3, 5)), InvalidArgument);
}

TEST_CASE("resilience agrees with brute force; profile is monotone") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1500; ++i) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = k + 1 + static_cast<int>(rng() % (8 - k));
    const KFamily f = oracle::random_family(rng, k, n, 1 + rng() % 14);
    const ResilienceReport r = resilience_profile(f);
    CHECK(r.max_t < k);
    for (int t = 0; t <= k; ++t) {
      REQUIRE(is_t_resilient(f, t) == oracle::resilient(f, t));
      CHECK(is_t_resilient(f, t) == (t <= r.max_t));
    }
    REQUIRE(r.violating_set);
    CHECK(r.violating_set->size() == r.max_t + 1);
    CHECK(matching_number(delete_vertices(f, *r.violating_set)).nu < r.nu);
    // Least mask among minimum violating sets.
    for (Mask m = 0; m < r.violating_set->mask(); ++m) {
      if (popcount(m) != r.max_t + 1) continue;
      CHECK(matching_number(delete_vertices(f, VertexSet(m))).nu == r.nu);
    }
  }
}

TEST_CASE("intersecting families: (k-1)-resilient iff tau = k") {
  // Every intersecting 3-graph on [5] with at most 10 edges, i.e. all of
  // them, plus random ones on [6] and [7].
  std::vector<Mask> all;
  for_each_subset_of_size(5, 3, [&](Mask m) { all.push_back(m); });
  int checked = 0;
  for (std::uint32_t pick = 1; pick < (1u << all.size()); ++pick) {
    std::vector<Mask> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((pick >> i) & 1) edges.push_back(all[i]);
    }
    const KFamily f(3, 5, edges);
    if (!is_t_intersecting(f, 1)) continue;
    ++checked;
    CHECK(is_t_resilient(f, 2) == (covering_number(f).tau == 3));
  }
  CHECK(checked > 100);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const int n = 6 + static_cast<int>(rng() % 2);
    std::vector<Mask> pool;
    for_each_subset_of_size(n, 3, [&](Mask m) { pool.push_back(m); });
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Mask> edges;
    const std::size_t cap = 1 + rng() % 10;
    for (Mask m : pool) {
      if (edges.size() == cap) break;
      if (std::all_of(edges.begin(), edges.end(),
                      [&](Mask e) { return (e & m) != 0; })) {
        edges.push_back(m);
      }
    }
    const KFamily f(3, n, edges);
    CHECK(is_t_resilient(f, 2) == (oracle::tau(f) == 3));
  }
}

TEST_CASE("maximal intersecting closure") {
  const KFamily k5 = complete_k_graph(5, 3);
  CHECK(maximal_intersecting_closure(k5) == k5);

  // No proper subfamily of the complete 3-graph on [5] has tau = 3: the
  // complement of a missing triple is a 2-cover.
  for (Mask gone : k5.edges()) {
    std::vector<Mask> edges;
    for (Mask e : k5.edges()) {
      if (e != gone) edges.push_back(e);
    }
    CHECK(covering_number(KFamily(3, 5, edges)).tau == 2);
  }

  // The Fano plane: 7 lines, intersecting, tau = 3, already maximal.
  const KFamily fano = KFamily::from_edge_lists(
      3, 7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7},
             {3, 4, 7}, {3, 5, 6}});
  REQUIRE(covering_number(fano).tau == 3);
  CHECK(maximal_intersecting_closure(fano) == fano);

  // Six of its lines still have tau = 3 on [7]; the closure keeps them
  // and cannot be extended.
  std::vector<Mask> six(fano.edges().begin(), fano.edges().end() - 1);
  const KFamily partial(3, 7, six);
  REQUIRE(covering_number(partial).tau == 3);
  const KFamily closed = maximal_intersecting_closure(partial);
  CHECK(is_t_intersecting(closed, 1));
  CHECK(closed.size() >= 7);
  for (Mask e : six) CHECK(closed.contains(e));
  for_each_subset_of_size(7, 3, [&](Mask m) {
    if (!closed.contains(m)) CHECK_FALSE(is_t_intersecting(closed.with_edge(m), 1));
  });

  // On [6] the complete 3-graph on [5] is already maximal.
  const KFamily k5_on_6(3, 6, std::vector<Mask>(k5.edges().begin(),
                                                 k5.edges().end()));
  CHECK(maximal_intersecting_closure(k5_on_6) == k5_on_6);

  CHECK_THROWS_AS(
      maximal_intersecting_closure(KFamily::from_edge_lists(3, 5, {{1, 2, 3}})),
      InvalidArgument);
  CHECK_THROWS_AS(maximal_intersecting_closure(
                      KFamily::from_edge_lists(3, 6, {{1, 2, 3}, {4, 5, 6}})),
                  InvalidArgument);
}

TEST_CASE("closure output is maximal intersecting with tau = k") {
  std::mt19937_64 rng(77);
  int done = 0;
  for (int i = 0; i < 20000 && done < 60; ++i) {
    const int n = 6 + static_cast<int>(rng() % 2);
    std::vector<Mask> pool;
    for_each_subset_of_size(n, 3, [&](Mask m) { pool.push_back(m); });
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Mask> edges;
    for (Mask m : pool) {
      if (edges.size() == 6) break;
      if (std::all_of(edges.begin(), edges.end(),
                      [&](Mask e) { return (e & m) != 0; })) {
        edges.push_back(m);
      }
    }
    const KFamily f(3, n, edges);
    if (covering_number(f).tau != 3) continue;
    ++done;
    const KFamily c = maximal_intersecting_closure(f);
    CHECK(is_t_intersecting(c, 1));
    CHECK(oracle::tau(c) == 3);
    for (Mask e : f.edges()) CHECK(c.contains(e));
    for (Mask m : pool) {
      if (c.contains(m)) continue;
      CHECK_FALSE(is_t_intersecting(c.with_edge(m), 1));
    }
  }
  CHECK(done >= 20);
}
