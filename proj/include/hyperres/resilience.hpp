#pragma once

#include <cstdint>
#include <optional>

#include "hyperres/family.hpp"

namespace hyperres {

/// F is t-resilient when deleting any set T of at most t vertices keeps
/// ν(F(T̄)) = ν(F). Only |T| = min(t, n) needs checking since ν can only
/// drop further on supersets. Matchings found along the way are cached, so
/// a deletion set that misses a known maximum matching costs one AND.
bool is_t_resilient(const KFamily& f, int t);

struct ResilienceReport {
  int nu = 0;
  /// Largest t with F t-resilient; always < k.
  int max_t = 0;
  /// Minimum-size vertex set whose deletion lowers ν, least mask among
  /// those; its size is max_t + 1.
  std::optional<VertexSet> violating_set;

  friend bool operator==(const ResilienceReport&,
                         const ResilienceReport&) = default;
};

/// Throws InvalidArgument on the empty family.
ResilienceReport resilience_profile(const KFamily& f);

/// Candidate scan cap for maximal_intersecting_closure.
inline constexpr std::uint64_t kClosureCandidateLimit = 50'000'000;

/// Adds every k-subset of [n] that meets all current edges, scanning
/// candidates in ascending mask order. One pass suffices: a rejected
/// candidate stays rejected as edges are only added.
///
/// Requires F intersecting with τ(F) = k (InvalidArgument otherwise).
KFamily maximal_intersecting_closure(const KFamily& f);

}  // namespace hyperres
