#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hyperres/family.hpp"

namespace hyperres {

/// Relabeling-invariant signature of a (optionally edge-colored) family.
/// Two families get equal forms iff some permutation of [n] maps one onto
/// the other (preserving edge colors when present).
struct CanonicalForm {
  int k = 0;
  int n = 0;
  std::vector<Mask> edges;  ///< relabeled, ascending
  std::vector<int> colors;  ///< parallel to edges; empty when uncolored

  std::string to_string() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// label[v-1] is the canonical name (1..n) of vertex v.
  std::vector<int> label;
  /// Automorphisms met during the search, as vertex maps perm[v-1].
  /// They are genuine automorphisms but need not generate the whole group.
  std::vector<std::vector<int>> automorphisms;
  long leaves = 0;  ///< leaves of the search tree that were visited
};

/// Canonical labeling by partition refinement and individualization.
///
/// The ordered vertex partition is refined until every vertex in a cell
/// sees the same multiset of (edge color, cells of the other vertices)
/// over its edges. Leaves of the individualization tree are compared by
/// their relabeled edge lists and the smallest is kept. Branches that are
/// images of explored ones under a found automorphism are skipped.
///
/// `edge_colors`, when non-empty, is parallel to f.edges().
CanonicalLabeling canonical_labeling(const KFamily& f,
                                     std::span<const int> edge_colors = {});

CanonicalForm canonical_form(const KFamily& f);

bool isomorphic(const KFamily& a, const KFamily& b);

/// The family relabeled into its canonical form.
KFamily canonical_family(const KFamily& f);

}  // namespace hyperres
