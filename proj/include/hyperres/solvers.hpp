#pragma once

#include <climits>
#include <span>
#include <vector>

#include "hyperres/family.hpp"

namespace hyperres {

/// Maximum number of pairwise disjoint sets among `sets` (any sizes).
///
/// Branch and bound: at each node the next member is picked among the
/// remaining candidates in list order, every later candidate that meets it
/// is dropped, and a branch is cut when
///   depth + min(#candidates, |union of candidates| / smallest size)
/// cannot beat the incumbent. The incumbent starts from the greedy packing.
/// Search stops early once `stop_at` disjoint sets are found.
std::vector<Mask> max_disjoint_sets(std::span<const Mask> sets,
                                    int stop_at = INT_MAX);

struct MatchingResult {
  int nu = 0;
  Matching witness;
};

/// ν(F) with one maximum matching.
MatchingResult matching_number(const KFamily& f);

/// True iff F has `size` pairwise disjoint edges; fills `out` if given.
bool has_matching_of_size(const KFamily& f, int size, Matching* out = nullptr);
bool has_matching_of_size(std::span<const Mask> edges, int size,
                          Matching* out = nullptr);

struct CoverResult {
  int tau = 0;
  VertexSet cover;
};

/// τ(F) with one minimum transversal. Branches over the vertices of the
/// first uncovered edge; a greedy disjoint packing of the uncovered edges
/// lower-bounds what is still needed.
CoverResult covering_number(const KFamily& f);

/// Edges of F in order, adding each one disjoint from those already taken.
Matching greedy_matching(std::span<const Mask> edges);

}  // namespace hyperres
