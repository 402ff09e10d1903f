#include <doctest.h>

#include "hyperres/bounds.hpp"
#include "hyperres/constructions.hpp"
#include "hyperres/error.hpp"
#include "hyperres/resilience.hpp"
#include "hyperres/solvers.hpp"
#include "oracles.hpp"

using namespace hyperres;

TEST_CASE("complete k-graphs") {
  CHECK(complete_k_graph(8, 3).size() == 56);
  CHECK(complete_k_graph(5, 2).size() == 10);
  CHECK(complete_k_graph(12, 4).size() == 495);
  CHECK(complete_k_graph(64, 1).size() == 64);
  CHECK_THROWS_AS(complete_k_graph(3, 4), InvalidArgument);
  CHECK_THROWS_AS(complete_k_graph(65, 2), InvalidArgument);
  CHECK_THROWS_AS(complete_k_graph(5, 0), InvalidArgument);
}

TEST_CASE("complete k-graph on sk+k-1 vertices: nu = s and (k-1)-resilient") {
  for (int k = 1; k <= 4; ++k) {
    for (int s = 1; s * k + k - 1 <= 11; ++s) {
      const int n = s * k + k - 1;
      const KFamily f = complete_k_graph(n, k);
      CHECK(matching_number(f).nu == s);
      CHECK(is_t_resilient(f, k - 1));
      CHECK(BigInt(f.size()) == binomial(n, k));
      if (n <= 8 && k <= 3) {
        CHECK(oracle::nu(f) == s);
        CHECK(oracle::resilient(f, k - 1));
      }
    }
  }
}

TEST_CASE("erdos families") {
  for (int n = 3; n <= 10; ++n) {
    for (int k = 1; k <= 3 && k <= n; ++k) {
      for (int s = 1; s <= n; ++s) {
        const KFamily f = erdos_family(n, k, s);
        CHECK(BigInt(f.size()) == binomial(n, k) - binomial(n - s, k));
        for (Mask e : f.edges()) CHECK((e & ground_mask(s)) != 0);
        if (n >= (s + 1) * k) CHECK(matching_number(f).nu == s);
      }
    }
  }
  CHECK(erdos_family(10, 3, 2).size() == 120 - 56);
  CHECK_THROWS_AS(erdos_family(5, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(erdos_family(5, 2, 6), InvalidArgument);
}

TEST_CASE("fixture and gallery") {
  const KFamily fx = fixture_four_edges();
  CHECK(fx.k() == 3);
  CHECK(fx.n() == 10);
  CHECK(fx.size() == 4);
  CHECK(matching_number(fx).nu == 2);

  std::map<std::string, std::pair<int, std::size_t>> expect = {
      {"triangle", {3, 3}}, {"C4", {4, 4}}, {"P2", {2, 1}},
      {"P3", {3, 2}},       {"P4", {4, 3}}, {"star2", {3, 2}},
      {"star3", {4, 3}},    {"K3", {3, 3}}, {"K4", {4, 6}},
      {"K5", {5, 10}},      {"K6", {6, 15}}};
  const auto gallery = graph_gallery();
  CHECK(gallery.size() == expect.size());
  for (const auto& [name, g] : gallery) {
    REQUIRE(expect.contains(name));
    CHECK(g.k() == 2);
    CHECK(g.n() == expect[name].first);
    CHECK(g.size() == expect[name].second);
    CHECK(construct(name) == g);
  }
}

TEST_CASE("construct parsing") {
  CHECK(construct("complete:8,3") == complete_k_graph(8, 3));
  CHECK(construct("erdos:9,3,2") == erdos_family(9, 3, 2));
  CHECK(construct("fixture") == fixture_four_edges());
  CHECK_THROWS_AS(construct("complete:8"), InvalidArgument);
  CHECK_THROWS_AS(construct("complete:8,x"), InvalidArgument);
  CHECK_THROWS_AS(construct("complete:8,,3"), InvalidArgument);
  CHECK_THROWS_AS(construct("fixture:1"), InvalidArgument);
  CHECK_THROWS_AS(construct("petersen"), InvalidArgument);
  CHECK_THROWS_AS(construct(""), InvalidArgument);
}
