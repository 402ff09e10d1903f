#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperres/canonical.hpp"
#include "hyperres/family.hpp"
#include "hyperres/polynomial.hpp"

namespace hyperres {

enum class SearchMode { kMaximize, kVerifyTarget, kVerifyUnique };

std::string to_string(SearchMode m);
SearchMode search_mode_from_string(const std::string& s);

struct SearchSpec {
  int k = 3;
  int s = 1;
  int t = 2;
  int max_n = 6;
  std::uint64_t node_budget = 50'000'000;
  SearchMode mode = SearchMode::kMaximize;
  /// Required by the verify modes.
  std::optional<std::size_t> target;
  int threads = 1;
};

/// Throws InvalidArgument unless 0 <= t < k <= max_n <= 64, s >= 1,
/// budget > 0, threads >= 1, and a target is given for verify modes.
void validate(const SearchSpec& spec);

struct SearchResult {
  SearchSpec spec;
  /// Some family with ν = s, t-resilient, was met (of size >= target in
  /// the verify modes).
  bool found = false;
  std::size_t best_size = 0;
  /// Canonical representatives attaining best_size, pairwise
  /// non-isomorphic, ascending by canonical form.
  std::vector<KFamily> witnesses;
  /// The whole space on [max_n] was explored within the budget.
  bool exhausted = false;
  std::uint64_t nodes = 0;
  /// Verify modes: target confirmed (exhausted, best_size == target, and
  /// for kVerifyUnique a single witness).
  std::optional<bool> target_confirmed;

  std::string scope_note() const;
};

/// Largest t-resilient k-graph with ν = s on a ground set of at most
/// max_n vertices.
///
/// Families are generated once per isomorphism class by canonical
/// augmentation: a child F + e is kept iff e lies in the orbit of the
/// child's canonical deletion edge, and isomorphic siblings are merged.
/// Subtrees are cut when ν exceeds s and, for t = k-1, when some
/// (k-1)-set lies in more than k·s edges or |F| exceeds (ks)^k (both
/// necessary for the targets and monotone under adding edges).
/// Resilience is checked at every candidate with ν = s, since it is not
/// monotone. The node count is schedule independent; with threads > 1 a
/// run cut short by the budget may differ between runs.
SearchResult max_resilient_family(const SearchSpec& spec);

struct LowerBoundReport {
  int k = 0;
  int s = 0;
  int t = 0;
  int n = 0;  ///< sk + k - 1
  BigInt size;
  int nu = 0;
  bool resilient = false;
  /// ν = s and t-resilient, so m(k,s) >= size when t = k - 1.
  bool certified = false;
};

/// Checks the complete k-graph on sk+k-1 vertices. Needs sk+k-1 <= 12.
LowerBoundReport verify_lower_bound(int k, int s, int t);

nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const LowerBoundReport& r);

}  // namespace hyperres
