#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hyperres/vertex_set.hpp"

namespace hyperres {

/// A k-uniform family of subsets of [n], 0 <= k <= n <= 64.
///
/// Edges are kept deduplicated and in ascending mask order, so iteration
/// order is a function of the edge set alone. Immutable once built.
/// k = 0 only arises from traces F(A,B) with |A| = k.
class KFamily {
 public:
  KFamily(int k, int n);
  /// Throws InvalidArgument if an edge has the wrong size or leaves [n].
  /// Duplicate edges are merged.
  KFamily(int k, int n, std::vector<Mask> edges);

  static KFamily from_edge_lists(int k, int n,
                                 const std::vector<std::vector<int>>& edges);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const Mask> edges() const { return edges_; }
  Mask edge(std::size_t i) const { return edges_[i]; }
  bool contains(Mask edge) const;
  /// Union of all edges.
  Mask support() const;

  /// Number of edges containing every vertex of `s`.
  std::size_t degree(VertexSet s) const;
  /// Largest degree over all sets of the given size.
  std::size_t max_degree(int set_size) const;

  KFamily with_edge(Mask edge) const;
  /// Relabels vertex v as perm[v-1] (a permutation of 1..n).
  KFamily relabeled(std::span<const int> perm) const;

  friend bool operator==(const KFamily&, const KFamily&) = default;

 private:
  int k_;
  int n_;
  std::vector<Mask> edges_;
};

struct Matching {
  std::vector<Mask> edges;
  Mask cover = 0;  ///< union of the edges

  std::size_t size() const { return edges.size(); }
  static Matching from_edges(std::vector<Mask> edges);
};

/// True if the masks are pairwise disjoint.
bool pairwise_disjoint(std::span<const Mask> sets);

/// True if `m` consists of pairwise disjoint edges of `f`.
bool is_matching_of(const KFamily& f, const Matching& m);

/// F(A,B) = { F \ A : F in f, F ∩ B = A }, uniformity k - |A|.
/// Throws InvalidArgument unless A ⊆ B and |A| <= k.
KFamily trace(const KFamily& f, VertexSet a, VertexSet b);
/// F(A) = F(A,A).
KFamily link(const KFamily& f, VertexSet a);
/// F(Ā) = F(∅,A): drop every edge meeting A.
KFamily delete_vertices(const KFamily& f, VertexSet a);

/// Every two distinct edges share at least t vertices (vacuous for |f| < 2).
bool is_t_intersecting(const KFamily& f, int t);

/// Largest t with is_t_intersecting(f, t); k for families with < 2 edges.
int intersection_level(const KFamily& f);

std::string edge_to_string(Mask edge);

}  // namespace hyperres
