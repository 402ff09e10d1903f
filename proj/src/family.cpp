#include "hyperres/family.hpp"

#include <algorithm>
#include <unordered_map>

#include "hyperres/error.hpp"

namespace hyperres {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_vertex(mask_, [&](int v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string edge_to_string(Mask edge) {
  std::string out = "(";
  bool first = true;
  for_each_vertex(edge, [&](int v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + ")";
}

namespace {

void check_shape(int k, int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("ground set size n=" + std::to_string(n) +
                          " outside 1..64");
  }
  if (k < 0 || k > n) {
    throw InvalidArgument("uniformity k=" + std::to_string(k) +
                          " outside 0..n");
  }
}

}  // namespace

KFamily::KFamily(int k, int n) : k_(k), n_(n) { check_shape(k, n); }

KFamily::KFamily(int k, int n, std::vector<Mask> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
  check_shape(k, n);
  const Mask ground = ground_mask(n);
  for (Mask e : edges_) {
    if (popcount(e) != k) {
      throw InvalidArgument("edge " + edge_to_string(e) + " does not have " +
                            std::to_string(k) + " vertices");
    }
    if ((e & ~ground) != 0) {
      throw InvalidArgument("edge " + edge_to_string(e) + " leaves [" +
                            std::to_string(n) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

KFamily KFamily::from_edge_lists(int k, int n,
                                 const std::vector<std::vector<int>>& edges) {
  std::vector<Mask> masks;
  masks.reserve(edges.size());
  for (const auto& e : edges) {
    Mask m = 0;
    for (int v : e) {
      if (v < 1 || v > n) {
        throw InvalidArgument("vertex " + std::to_string(v) + " outside [" +
                              std::to_string(n) + "]");
      }
      m |= vertex_bit(v);
    }
    masks.push_back(m);
  }
  return KFamily(k, n, std::move(masks));
}

bool KFamily::contains(Mask edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), edge);
}

Mask KFamily::support() const {
  Mask m = 0;
  for (Mask e : edges_) m |= e;
  return m;
}

std::size_t KFamily::degree(VertexSet s) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(),
                    [&](Mask e) { return (s.mask() & ~e) == 0; }));
}

std::size_t KFamily::max_degree(int set_size) const {
  if (set_size < 0 || set_size > k_) return 0;
  std::unordered_map<Mask, std::size_t> counts;
  std::size_t best = 0;
  for (Mask e : edges_) {
    // enumerate the set_size-subsets of e
    const auto verts = mask_vertices(e);
    for_each_subset_of_size(k_, set_size, [&](Mask pick) {
      Mask sub = 0;
      for_each_vertex(pick, [&](int i) { sub |= vertex_bit(verts[i - 1]); });
      best = std::max(best, ++counts[sub]);
    });
  }
  return best;
}

KFamily KFamily::with_edge(Mask edge) const {
  std::vector<Mask> edges = edges_;
  edges.push_back(edge);
  return KFamily(k_, n_, std::move(edges));
}

KFamily KFamily::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw InvalidArgument("relabeling has wrong length");
  }
  std::vector<Mask> edges;
  edges.reserve(edges_.size());
  for (Mask e : edges_) {
    Mask m = 0;
    for_each_vertex(e, [&](int v) { m |= vertex_bit(perm[v - 1]); });
    edges.push_back(m);
  }
  return KFamily(k_, n_, std::move(edges));
}

Matching Matching::from_edges(std::vector<Mask> edges) {
  Matching m;
  for (Mask e : edges) m.cover |= e;
  m.edges = std::move(edges);
  return m;
}

bool pairwise_disjoint(std::span<const Mask> sets) {
  Mask seen = 0;
  for (Mask s : sets) {
    if ((seen & s) != 0) return false;
    seen |= s;
  }
  return true;
}

bool is_matching_of(const KFamily& f, const Matching& m) {
  Mask cover = 0;
  for (Mask e : m.edges) {
    if (!f.contains(e)) return false;
    cover |= e;
  }
  return pairwise_disjoint(m.edges) && cover == m.cover;
}

KFamily trace(const KFamily& f, VertexSet a, VertexSet b) {
  if (!a.subset_of(b)) {
    throw InvalidArgument("trace requires A ⊆ B, got A=" + a.to_string() +
                          " B=" + b.to_string());
  }
  if (a.size() > f.k()) {
    throw InvalidArgument("trace requires |A| <= k");
  }
  std::vector<Mask> out;
  for (Mask e : f.edges()) {
    if ((e & b.mask()) == a.mask()) out.push_back(e & ~a.mask());
  }
  return KFamily(f.k() - a.size(), f.n(), std::move(out));
}

KFamily link(const KFamily& f, VertexSet a) { return trace(f, a, a); }

KFamily delete_vertices(const KFamily& f, VertexSet a) {
  return trace(f, VertexSet{}, a);
}

bool is_t_intersecting(const KFamily& f, int t) {
  const auto edges = f.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (popcount(edges[i] & edges[j]) < t) return false;
    }
  }
  return true;
}

int intersection_level(const KFamily& f) {
  const auto edges = f.edges();
  int level = f.k();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      level = std::min(level, popcount(edges[i] & edges[j]));
    }
  }
  return level;
}

}  // namespace hyperres
