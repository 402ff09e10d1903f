#include <doctest.h>

#include <random>

#include "hyperres/constructions.hpp"
#include "hyperres/error.hpp"
#include "hyperres/io.hpp"
#include "hyperres/report.hpp"
#include "oracles.hpp"

using namespace hyperres;

namespace {

const BoundComparison* find(const AnalysisReport& r, const std::string& f) {
  for (const auto& b : r.bounds) {
    if (b.formula == f) return &b;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("report for the complete 3-graph on [8]") {
  const AnalysisReport r = analyze(complete_k_graph(8, 3));
  CHECK(r.k == 3);
  CHECK(r.n == 8);
  CHECK(r.size == 56);
  CHECK(r.nu == 2);
  CHECK(r.matching.size() == 2);
  CHECK(r.tau == 6);
  CHECK(popcount(r.cover) == 6);
  REQUIRE(r.resilience);
  CHECK(r.resilience->max_t == 2);
  CHECK(r.intersection_level == 0);
  REQUIRE(r.sunflowers.size() == 1);
  CHECK(r.sunflowers[0].size == 7);
  CHECK_FALSE(r.sunflowers[0].witness);

  const BoundComparison* m32 = find(r, "m32");
  REQUIRE(m32);
  CHECK(m32->within);
  const BoundComparison* lov = find(r, "lovasz");
  REQUIRE(lov);
  CHECK(lov->value == "216");
  CHECK(lov->within);
  CHECK_FALSE(find(r, "emc"));  // n = 8 < (s+1)k

  const int sizes[] = {3, 6};
  const AnalysisReport scan = analyze(complete_k_graph(8, 3), sizes);
  REQUIRE(scan.sunflowers.size() == 2);
  CHECK(scan.sunflowers[0].witness);
  CHECK(scan.sunflowers[1].witness);
}

TEST_CASE("report for the fixture and the empty family") {
  const AnalysisReport fx = analyze(fixture_four_edges());
  CHECK(fx.nu == 2);
  CHECK(fx.tau == 2);
  REQUIRE(fx.resilience);
  CHECK(fx.resilience->max_t == 0);
  CHECK_FALSE(find(fx, "lovasz"));
  const BoundComparison* emc = find(fx, "emc");
  REQUIRE(emc);
  CHECK(emc->within);

  const AnalysisReport empty = analyze(KFamily(3, 6));
  CHECK(empty.size == 0);
  CHECK(empty.nu == 0);
  CHECK(empty.tau == 0);
  CHECK_FALSE(empty.resilience);
  CHECK(empty.sunflowers.empty());
  CHECK(empty.bounds.empty());
}

TEST_CASE("report JSON round trip") {
  std::mt19937_64 rng(5);
  std::vector<KFamily> fams = {complete_k_graph(8, 3), fixture_four_edges(),
                               KFamily(2, 4), construct("K5")};
  for (int i = 0; i < 60; ++i) {
    fams.push_back(oracle::random_family(rng, 2 + static_cast<int>(rng() % 2),
                                         7, rng() % 20));
  }
  for (const KFamily& f : fams) {
    const AnalysisReport r = analyze(f);
    CHECK(report_from_json(to_json(r)) == r);
    CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
    CHECK_FALSE(format_report(r).empty());
  }
  try {
    report_from_json(nlohmann::json{{"k", 3}});
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::kBadJson);
  }
}

TEST_CASE("report text mentions the key numbers") {
  const std::string text = format_report(analyze(construct("K5")));
  CHECK(text.find("nu") != std::string::npos);
  CHECK(text.find("10") != std::string::npos);
}
