#include "hyperres/solvers.hpp"

#include <algorithm>

namespace hyperres {

namespace {

class PackingSearch {
 public:
  PackingSearch(std::span<const Mask> sets, int stop_at)
      : stop_at_(stop_at) {
    for (Mask s : sets) candidates_.push_back(s);
    best_ = greedy_matching(candidates_).edges;
  }

  std::vector<Mask> run() {
    if (static_cast<int>(best_.size()) < stop_at_) search(candidates_);
    return best_;
  }

 private:
  void search(const std::vector<Mask>& cands) {
    const std::size_t m = cands.size();
    // suffix unions and suffix minimum sizes for the bound
    std::vector<Mask> suffix_union(m + 1, 0);
    std::vector<int> suffix_min(m + 1, kMaxVertices + 1);
    for (std::size_t i = m; i-- > 0;) {
      suffix_union[i] = suffix_union[i + 1] | cands[i];
      suffix_min[i] = std::min(suffix_min[i + 1], popcount(cands[i]));
    }
    const int depth = static_cast<int>(current_.size());
    for (std::size_t i = 0; i < m; ++i) {
      const int remaining = static_cast<int>(m - i);
      const int by_vertices = popcount(suffix_union[i]) / suffix_min[i];
      const int bound = depth + std::min(remaining, by_vertices);
      if (bound <= static_cast<int>(best_.size())) return;

      std::vector<Mask> next;
      next.reserve(m - i - 1);
      for (std::size_t j = i + 1; j < m; ++j) {
        if ((cands[j] & cands[i]) == 0) next.push_back(cands[j]);
      }
      current_.push_back(cands[i]);
      if (current_.size() > best_.size()) best_ = current_;
      if (static_cast<int>(best_.size()) >= stop_at_) return;
      search(next);
      current_.pop_back();
      if (static_cast<int>(best_.size()) >= stop_at_) return;
    }
  }

  int stop_at_;
  std::vector<Mask> candidates_;
  std::vector<Mask> best_;
  std::vector<Mask> current_;
};

class CoverSearch {
 public:
  explicit CoverSearch(std::span<const Mask> edges)
      : edges_(edges.begin(), edges.end()) {
    // a maximal matching's vertices meet every edge
    best_ = greedy_matching(edges_).cover;
  }

  Mask run() {
    search(edges_, 0);
    return best_;
  }

 private:
  void search(const std::vector<Mask>& uncovered, Mask chosen) {
    if (uncovered.empty()) {
      if (popcount(chosen) < popcount(best_)) best_ = chosen;
      return;
    }
    const int lower = popcount(chosen) +
                      static_cast<int>(greedy_matching(uncovered).size());
    if (lower >= popcount(best_)) return;

    const Mask first = uncovered.front();
    for_each_vertex(first, [&](int v) {
      const Mask bit = vertex_bit(v);
      std::vector<Mask> rest;
      rest.reserve(uncovered.size());
      for (Mask e : uncovered) {
        if ((e & bit) == 0) rest.push_back(e);
      }
      search(rest, chosen | bit);
    });
  }

  std::vector<Mask> edges_;
  Mask best_ = 0;
};

}  // namespace

Matching greedy_matching(std::span<const Mask> edges) {
  std::vector<Mask> picked;
  Mask used = 0;
  for (Mask e : edges) {
    if ((e & used) == 0) {
      picked.push_back(e);
      used |= e;
    }
  }
  return Matching::from_edges(std::move(picked));
}

std::vector<Mask> max_disjoint_sets(std::span<const Mask> sets, int stop_at) {
  // The empty set is disjoint from everything, itself included.
  std::vector<Mask> nonempty;
  nonempty.reserve(sets.size());
  bool has_empty = false;
  for (Mask s : sets) {
    if (s == 0) {
      has_empty = true;
    } else {
      nonempty.push_back(s);
    }
  }
  if (stop_at <= 0) return {};
  std::vector<Mask> best =
      PackingSearch(nonempty, has_empty ? stop_at - 1 : stop_at).run();
  if (has_empty) best.push_back(0);
  return best;
}

MatchingResult matching_number(const KFamily& f) {
  auto edges = max_disjoint_sets(f.edges());
  std::sort(edges.begin(), edges.end());
  MatchingResult r;
  r.nu = static_cast<int>(edges.size());
  r.witness = Matching::from_edges(std::move(edges));
  return r;
}

bool has_matching_of_size(std::span<const Mask> edges, int size,
                          Matching* out) {
  if (size <= 0) {
    if (out) *out = Matching{};
    return true;
  }
  auto found = max_disjoint_sets(edges, size);
  if (static_cast<int>(found.size()) < size) return false;
  if (out) {
    found.resize(static_cast<std::size_t>(size));
    std::sort(found.begin(), found.end());
    *out = Matching::from_edges(std::move(found));
  }
  return true;
}

bool has_matching_of_size(const KFamily& f, int size, Matching* out) {
  return has_matching_of_size(f.edges(), size, out);
}

CoverResult covering_number(const KFamily& f) {
  if (f.empty()) return {};
  CoverResult r;
  // No vertex meets the empty edge of a k = 0 family; it is skipped.
  std::vector<Mask> nonempty;
  for (Mask e : f.edges()) {
    if (e != 0) nonempty.push_back(e);
  }
  if (nonempty.empty()) return {};
  const Mask cover = CoverSearch(nonempty).run();
  r.tau = popcount(cover);
  r.cover = VertexSet(cover);
  return r;
}

}  // namespace hyperres
