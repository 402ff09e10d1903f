#include <doctest.h>

#include <filesystem>
#include <set>

#include "hyperres/canonical.hpp"
#include "hyperres/check_suite.hpp"
#include "hyperres/resilience.hpp"
#include "hyperres/solvers.hpp"
#include "oracles.hpp"

using namespace hyperres;

TEST_CASE("resilient corpus is valid, distinct and seeded") {
  const auto a = resilient_corpus(30, 99);
  CHECK(a.size() == 30);
  std::set<std::vector<Mask>> seen;
  for (const KFamily& f : a) {
    CHECK(f.k() == 3);
    CHECK(f.n() == 8);
    CHECK(oracle::nu(f) == 2);
    CHECK(is_t_resilient(f, 2));
    seen.insert(std::vector<Mask>(f.edges().begin(), f.edges().end()));
  }
  CHECK(seen.size() == a.size());
  CHECK(resilient_corpus(30, 99) == a);
  CHECK(resilient_corpus(30, 100) != a);
  // A few brute-force resilience checks; the full 2^8 scan is cheap.
  for (std::size_t i = 0; i < a.size(); i += 6) CHECK(oracle::resilient(a[i], 2));
}

TEST_CASE("quick suite passes and is deterministic") {
  SuiteOptions opt;
  opt.quick = true;
  const SuiteReport r = check_paper_suite(opt);
  CHECK(r.all_passed());
  CHECK(r.corpus_size == 40);
  for (const CheckEntry& e : r.entries) {
    CAPTURE(e.name);
    CAPTURE(e.detail);
    CHECK(e.passed);
    CHECK(e.dumps.empty());
    CHECK(e.cases > 0);
  }
  const SuiteReport again = check_paper_suite(opt);
  REQUIRE(again.entries.size() == r.entries.size());
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    CHECK(again.entries[i].cases == r.entries[i].cases);
    CHECK(again.entries[i].detail == r.entries[i].detail);
  }
  const auto j = to_json(r);
  CHECK(j["checks"].size() == r.entries.size());
}

TEST_CASE("the printed general bound is flagged, not failed") {
  const CheckEntry e = lovasz_consistency_check();
  CHECK(e.passed);
  CHECK(e.known_discrepancy);
  CHECK(e.detail.find("56") != std::string::npos);
}
