#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "hyperres/family.hpp"

namespace hyperres {

/// Distinct edges S0 (core) and S1..Sr (petals) with center C ⊊ S0 such
/// that the sets Si \ C are pairwise disjoint. Kept in normalized form,
/// |S0 \ C| = 1.
struct PseudoSunflower {
  VertexSet center;
  Mask core = 0;
  std::vector<Mask> petals;

  int size() const { return static_cast<int>(petals.size()) + 1; }
  friend bool operator==(const PseudoSunflower&,
                         const PseudoSunflower&) = default;
};

/// Checks the defining conditions against `f` (membership, distinctness,
/// proper center, disjoint differences). Normalization is not required.
bool is_pseudo_sunflower_of(const KFamily& f, const PseudoSunflower& p);

/// A pseudo sunflower with exactly `size` members, or nullopt.
///
/// Cores are tried in ascending mask order and, for each core, centers
/// S0 \ {x} for x ascending; the first hit wins. Petals are picked by the
/// exact disjoint-set solver on {S \ C : S ≠ S0, x ∉ S}. A larger
/// sunflower is cut down to the requested size. Throws if size < 2.
std::optional<PseudoSunflower> find_pseudo_sunflower(const KFamily& f,
                                                     int size);

/// Size of the largest pseudo sunflower in f (0 for the empty family,
/// 1 when no two edges form one).
int max_pseudo_sunflower_size(const KFamily& f);

struct FurediVerdict {
  boost::multiprecision::cpp_int bound;  ///< r^k
  std::size_t family_size = 0;
  bool bound_exceeded = false;
  /// A pseudo sunflower of size r+1, if one exists.
  std::optional<PseudoSunflower> witness;
  /// |F| > r^k yet no witness: only a solver bug can cause this.
  bool internal_error = false;
};

/// Füredi: a k-graph with no pseudo sunflower of size r+1 has at most
/// r^k edges. Throws if r < 1.
FurediVerdict assert_furedi(const KFamily& f, int r);

enum class GraphClass { kTriangle, kSubgraphOfC4, kNeither };

std::string to_string(GraphClass c);

/// Graphs without a size-3 pseudo sunflower are triangles or subgraphs of
/// a 4-cycle. kNeither is returned exactly when such a sunflower exists.
/// Throws InvalidArgument unless k = 2.
GraphClass classify_sunflower_free_graph(const KFamily& g);

nlohmann::json to_json(const PseudoSunflower& p);

}  // namespace hyperres
