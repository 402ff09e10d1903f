#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperres/family.hpp"

namespace hyperres {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Seeded random subfamilies of the complete 3-graph on [8] with ν = 2
/// that are 2-resilient, pairwise distinct.
///
/// Half come from random edge subsets kept with probability in [0.6, 1),
/// filtered; the rest are snapshots of random peeling chains that start
/// from the complete family and drop an edge whenever the result keeps
/// ν = 2 and 2-resilience.
std::vector<KFamily> resilient_corpus(std::size_t count, std::uint64_t seed);

struct CheckEntry {
  std::string name;
  std::string statement;
  bool passed = true;
  /// A known inconsistency in the source statement, reported but not
  /// counted as a failure.
  bool known_discrepancy = false;
  std::size_t cases = 0;
  std::string detail;
  /// Family files written for counterexamples.
  std::vector<std::string> dumps;
};

struct SuiteOptions {
  bool quick = false;
  std::uint64_t seed = kDefaultSeed;
  /// Where counterexamples are written; nothing is written when unset.
  std::optional<std::filesystem::path> dump_dir;
};

struct SuiteReport {
  std::vector<CheckEntry> entries;
  std::size_t corpus_size = 0;
  bool all_passed() const;
};

/// Runs every machine-checkable statement over fixed fixtures, the graph
/// gallery, all graphs on at most 6 labeled vertices and the seeded
/// corpus (200 families, 40 in quick mode).
SuiteReport check_paper_suite(const SuiteOptions& options);

/// Known discrepancy: the printed (ks)^s bound against m(3,2) = 56.
CheckEntry lovasz_consistency_check();

nlohmann::json to_json(const SuiteReport& r);

}  // namespace hyperres
