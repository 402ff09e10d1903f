#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperres/family.hpp"

namespace hyperres {

/// Outcome of pairing the blocks of two equal-size matchings.
struct CrossPermutation {
  /// sigma[i] = j (0-based) with M1[i] ∩ M2[j] ≠ ∅ for all i, when found.
  std::optional<std::vector<int>> sigma;
  /// Otherwise a set X of M1-indices whose M2-neighbourhood is smaller
  /// than X. This certifies ν(F) > |M1|.
  std::vector<int> hall_violator;
};

/// Perfect matching in the bipartite graph {(i,j) : M1[i] ∩ M2[j] ≠ ∅} by
/// augmenting paths. Throws InvalidArgument if M1 or M2 is not a matching
/// of F or their sizes differ.
CrossPermutation matchings_cross_permutation(const KFamily& f,
                                             const Matching& m1,
                                             const Matching& m2);

/// Default cap on the number of s-matchings s_fold_union_family enumerates.
inline constexpr std::uint64_t kUnionFamilyBudget = 20'000'000;

/// { T1 ∪ ... ∪ Ts : T1..Ts a matching of F }, an (s·k)-uniform family.
/// Empty when ν(F) < s. Throws InvalidArgument if s < 1 or s·k > n and
/// BudgetExceeded past `budget` enumerated matchings.
KFamily s_fold_union_family(const KFamily& f, int s,
                            std::uint64_t budget = kUnionFamilyBudget);

/// Every s-matching of F (each listed once, edges ascending).
std::vector<Matching> all_matchings_of_size(
    const KFamily& f, int s, std::uint64_t budget = kUnionFamilyBudget);

/// Edges of F sorted by how they meet the blocks Ti of a maximum matching.
/// t21: |T ∩ Ti| >= 2 for some i. Otherwise by |T ∩ R|: 1 -> t1,
/// 2 -> t22, >= 3 -> t3; 0 -> disjoint (impossible for a maximum matching).
struct EdgeProfile {
  std::size_t t1 = 0;
  std::size_t t21 = 0;
  std::size_t t22 = 0;
  std::size_t t3 = 0;
  std::size_t disjoint = 0;

  std::size_t total() const { return t1 + t21 + t22 + t3 + disjoint; }
  friend bool operator==(const EdgeProfile&, const EdgeProfile&) = default;
};

/// Throws InvalidArgument unless M is a maximum matching of F.
EdgeProfile edge_profile(const KFamily& f, const Matching& m);

/// Half-integer weights ω(P) over a list of vertex pairs, stored doubled.
struct WeightTable {
  std::vector<VertexSet> pairs;
  std::vector<std::int64_t> doubled_weights;
  std::int64_t doubled_total = 0;
  /// Size of the edge set the table decomposes (|T0| or |T_uv|).
  std::size_t edge_count = 0;
  /// Edges of that set carrying no weight (only the u,v table has any).
  std::vector<Mask> residual;

  /// total == edge_count exactly.
  bool identity_holds() const {
    return doubled_total == 2 * static_cast<std::int64_t>(edge_count);
  }
  std::int64_t doubled_weight(VertexSet pair) const;
};

/// ω over A×B for T0 = {T : T ∩ A ≠ ∅ ≠ T ∩ B}, R = A ∪ B:
/// ω(P,T) = 1 if |T ∩ R| = 2 and 1/2 if T ⊂ R. Requires k = 3 and A, B
/// disjoint edges of F.
WeightTable weight_decomposition_ab(const KFamily& f, Mask a, Mask b);

/// ω over {u,v}×(T1 ∪ T2) for T_uv = {T : T ∩ {u,v} ≠ ∅},
/// S = T1 ∪ T2 ∪ {u,v}: ω(P,T) = 1 if |T ∩ S| = 2 and 1/2 if T ⊂ S.
/// Edges of T_uv missing T1 ∪ T2 get no weight and are listed in
/// `residual`. Requires k = 3, u ≠ v, T1, T2 disjoint edges of F avoiding
/// u and v.
WeightTable weight_decomposition_uv(const KFamily& f, int u, int v, Mask t1,
                                    Mask t2);

/// |{T ∈ F : T ∩ {u,v} ≠ ∅}|.
std::size_t count_uv(const KFamily& f, int u, int v);

/// Two disjoint edges of F avoiding `avoid`, least masks first.
std::optional<std::pair<Mask, Mask>> disjoint_pair_avoiding(const KFamily& f,
                                                           Mask avoid);

nlohmann::json to_json(const WeightTable& t);
nlohmann::json to_json(const EdgeProfile& p);

}  // namespace hyperres
