#include "hyperres/structure.hpp"

#include <algorithm>
#include <functional>

#include "hyperres/error.hpp"
#include "hyperres/io.hpp"
#include "hyperres/solvers.hpp"

namespace hyperres {

namespace {

class Kuhn {
 public:
  explicit Kuhn(std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)), match_right_(adj_.size(), -1) {}

  /// Returns the left vertex that could not be matched, or -1.
  int run() {
    for (int i = 0; i < static_cast<int>(adj_.size()); ++i) {
      visited_.assign(adj_.size(), false);
      if (!augment(i)) return i;
    }
    return -1;
  }

  std::vector<int> left_to_right() const {
    std::vector<int> out(adj_.size(), -1);
    for (std::size_t j = 0; j < match_right_.size(); ++j) {
      if (match_right_[j] >= 0) out[match_right_[j]] = static_cast<int>(j);
    }
    return out;
  }

  /// Left vertices reached from `root` in the last (failed) search.
  std::vector<int> reached_from(int root) const {
    std::vector<int> out{root};
    for (std::size_t j = 0; j < visited_.size(); ++j) {
      if (visited_[j] && match_right_[j] >= 0) out.push_back(match_right_[j]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool augment(int i) {
    for (int j : adj_[i]) {
      if (visited_[j]) continue;
      visited_[j] = true;
      if (match_right_[j] < 0 || augment(match_right_[j])) {
        match_right_[j] = i;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_right_;
  std::vector<bool> visited_;
};

void enumerate_matchings(const KFamily& f, int s, std::uint64_t budget,
                         const std::function<void(const std::vector<Mask>&,
                                                  Mask)>& emit) {
  const auto edges = f.edges();
  std::vector<Mask> current;
  std::uint64_t count = 0;
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t start,
                                                   Mask used) {
    if (static_cast<int>(current.size()) == s) {
      if (++count > budget) {
        throw BudgetExceeded("more than " + std::to_string(budget) + " " +
                             std::to_string(s) + "-matchings");
      }
      emit(current, used);
      return;
    }
    for (std::size_t i = start; i < edges.size(); ++i) {
      if ((edges[i] & used) != 0) continue;
      current.push_back(edges[i]);
      rec(i + 1, used | edges[i]);
      current.pop_back();
    }
  };
  rec(0, 0);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

CrossPermutation matchings_cross_permutation(const KFamily& f,
                                             const Matching& m1,
                                             const Matching& m2) {
  require(is_matching_of(f, m1), "M1 is not a matching of F");
  require(is_matching_of(f, m2), "M2 is not a matching of F");
  require(m1.size() == m2.size(), "matchings differ in size");

  const std::size_t s = m1.size();
  std::vector<std::vector<int>> adj(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if ((m1.edges[i] & m2.edges[j]) != 0) adj[i].push_back(static_cast<int>(j));
    }
  }
  Kuhn kuhn(std::move(adj));
  CrossPermutation out;
  if (const int stuck = kuhn.run(); stuck >= 0) {
    out.hall_violator = kuhn.reached_from(stuck);
  } else {
    out.sigma = kuhn.left_to_right();
  }
  return out;
}

std::vector<Matching> all_matchings_of_size(const KFamily& f, int s,
                                            std::uint64_t budget) {
  require(s >= 1, "matching size must be >= 1");
  std::vector<Matching> out;
  enumerate_matchings(f, s, budget, [&](const std::vector<Mask>& edges, Mask) {
    out.push_back(Matching::from_edges(edges));
  });
  return out;
}

KFamily s_fold_union_family(const KFamily& f, int s, std::uint64_t budget) {
  require(s >= 1, "s must be >= 1");
  require(static_cast<long>(s) * f.k() <= f.n(),
          "s·k = " + std::to_string(s * f.k()) + " exceeds n = " +
              std::to_string(f.n()));
  std::vector<Mask> unions;
  enumerate_matchings(f, s, budget,
                      [&](const std::vector<Mask>&, Mask cover) {
                        unions.push_back(cover);
                      });
  return KFamily(s * f.k(), f.n(), std::move(unions));
}

EdgeProfile edge_profile(const KFamily& f, const Matching& m) {
  require(is_matching_of(f, m), "M is not a matching of F");
  require(!has_matching_of_size(f, static_cast<int>(m.size()) + 1),
          "M is not a maximum matching of F");
  EdgeProfile p;
  for (Mask t : f.edges()) {
    const bool heavy = std::any_of(m.edges.begin(), m.edges.end(),
                                   [&](Mask b) { return popcount(t & b) >= 2; });
    if (heavy) {
      ++p.t21;
      continue;
    }
    switch (popcount(t & m.cover)) {
      case 0:
        ++p.disjoint;
        break;
      case 1:
        ++p.t1;
        break;
      case 2:
        ++p.t22;
        break;
      default:
        ++p.t3;
        break;
    }
  }
  return p;
}

std::int64_t WeightTable::doubled_weight(VertexSet pair) const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i] == pair) return doubled_weights[i];
  }
  return 0;
}

WeightTable weight_decomposition_ab(const KFamily& f, Mask a, Mask b) {
  require(f.k() == 3, "weight decomposition needs k = 3");
  require(f.contains(a) && f.contains(b), "A and B must be edges of F");
  require((a & b) == 0, "A and B must be disjoint");

  WeightTable table;
  for_each_vertex(a, [&](int x) {
    for_each_vertex(b, [&](int y) {
      table.pairs.push_back(VertexSet{x, y});
      table.doubled_weights.push_back(0);
    });
  });
  const Mask r = a | b;
  for (Mask t : f.edges()) {
    if ((t & a) == 0 || (t & b) == 0) continue;
    ++table.edge_count;
    const std::int64_t w = popcount(t & r) == 2 ? 2 : 1;
    for (std::size_t i = 0; i < table.pairs.size(); ++i) {
      if ((table.pairs[i].mask() & ~t) == 0) {
        table.doubled_weights[i] += w;
        table.doubled_total += w;
      }
    }
  }
  return table;
}

WeightTable weight_decomposition_uv(const KFamily& f, int u, int v, Mask t1,
                                    Mask t2) {
  require(f.k() == 3, "weight decomposition needs k = 3");
  require(u != v && u >= 1 && v >= 1 && u <= f.n() && v <= f.n(),
          "u and v must be distinct vertices of [n]");
  require(f.contains(t1) && f.contains(t2), "T1 and T2 must be edges of F");
  require((t1 & t2) == 0, "T1 and T2 must be disjoint");
  const Mask uv = vertex_bit(u) | vertex_bit(v);
  require(((t1 | t2) & uv) == 0, "T1 and T2 must avoid u and v");

  WeightTable table;
  const Mask r = t1 | t2;
  const Mask s = r | uv;
  for (int x : {std::min(u, v), std::max(u, v)}) {
    for_each_vertex(r, [&](int y) {
      table.pairs.push_back(VertexSet{x, y});
      table.doubled_weights.push_back(0);
    });
  }
  for (Mask t : f.edges()) {
    if ((t & uv) == 0) continue;
    ++table.edge_count;
    if ((t & r) == 0) {
      table.residual.push_back(t);
      continue;
    }
    const std::int64_t w = popcount(t & s) == 2 ? 2 : 1;
    for (std::size_t i = 0; i < table.pairs.size(); ++i) {
      if ((table.pairs[i].mask() & ~t) == 0) {
        table.doubled_weights[i] += w;
        table.doubled_total += w;
      }
    }
  }
  return table;
}

std::size_t count_uv(const KFamily& f, int u, int v) {
  return f.size() - delete_vertices(f, VertexSet{u, v}).size();
}

std::optional<std::pair<Mask, Mask>> disjoint_pair_avoiding(const KFamily& f,
                                                           Mask avoid) {
  const auto edges = f.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((edges[i] & avoid) != 0) continue;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if ((edges[j] & (avoid | edges[i])) == 0) {
        return std::make_pair(edges[i], edges[j]);
      }
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(const WeightTable& t) {
  auto pairs = nlohmann::json::array();
  for (const auto& p : t.pairs) pairs.push_back(p.vertices());
  return {{"pairs", pairs},
          {"weights_doubled", t.doubled_weights},
          {"total_doubled", t.doubled_total},
          {"total", static_cast<double>(t.doubled_total) / 2.0},
          {"edge_count", t.edge_count},
          {"residual", edges_to_json(t.residual)}};
}

nlohmann::json to_json(const EdgeProfile& p) {
  return {{"T1", p.t1},
          {"T21", p.t21},
          {"T22", p.t22},
          {"T3", p.t3},
          {"disjoint", p.disjoint}};
}

}  // namespace hyperres
