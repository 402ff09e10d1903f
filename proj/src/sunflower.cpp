#include "hyperres/sunflower.hpp"

#include <algorithm>

#include "hyperres/error.hpp"
#include "hyperres/io.hpp"
#include "hyperres/solvers.hpp"

namespace hyperres {

namespace {

struct PetalPool {
  std::vector<Mask> differences;  // S \ C
  std::vector<Mask> sources;      // S
};

PetalPool petal_pool(const KFamily& f, Mask core, Mask center) {
  const Mask tip = core & ~center;
  PetalPool pool;
  for (Mask s : f.edges()) {
    if (s == core || (s & tip) != 0) continue;
    pool.differences.push_back(s & ~center);
    pool.sources.push_back(s);
  }
  return pool;
}

Mask source_of(const PetalPool& pool, Mask difference) {
  for (std::size_t i = 0; i < pool.differences.size(); ++i) {
    if (pool.differences[i] == difference) return pool.sources[i];
  }
  return 0;
}

}  // namespace

bool is_pseudo_sunflower_of(const KFamily& f, const PseudoSunflower& p) {
  const Mask center = p.center.mask();
  if (!f.contains(p.core)) return false;
  if ((center & ~p.core) != 0 || center == p.core) return false;  // C ⊊ S0
  std::vector<Mask> members{p.core};
  members.insert(members.end(), p.petals.begin(), p.petals.end());
  for (Mask s : p.petals) {
    if (!f.contains(s)) return false;
  }
  auto sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  std::vector<Mask> differences;
  for (Mask s : members) differences.push_back(s & ~center);
  return pairwise_disjoint(differences);
}

std::optional<PseudoSunflower> find_pseudo_sunflower(const KFamily& f,
                                                     int size) {
  if (size < 2) throw InvalidArgument("pseudo sunflower size must be >= 2");
  const int petals_needed = size - 1;
  for (Mask core : f.edges()) {
    std::optional<PseudoSunflower> hit;
    for_each_vertex(core, [&](int x) {
      if (hit) return;
      const Mask center = core & ~vertex_bit(x);
      const PetalPool pool = petal_pool(f, core, center);
      if (static_cast<int>(pool.differences.size()) < petals_needed) return;
      auto chosen = max_disjoint_sets(pool.differences, petals_needed);
      if (static_cast<int>(chosen.size()) < petals_needed) return;
      chosen.resize(static_cast<std::size_t>(petals_needed));
      PseudoSunflower p;
      p.center = VertexSet(center);
      p.core = core;
      for (Mask d : chosen) p.petals.push_back(source_of(pool, d));
      std::sort(p.petals.begin(), p.petals.end());
      hit = std::move(p);
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

int max_pseudo_sunflower_size(const KFamily& f) {
  if (f.empty()) return 0;
  int best = 1;
  for (Mask core : f.edges()) {
    for_each_vertex(core, [&](int x) {
      const Mask center = core & ~vertex_bit(x);
      const PetalPool pool = petal_pool(f, core, center);
      if (static_cast<int>(pool.differences.size()) + 1 <= best) return;
      const int petals =
          static_cast<int>(max_disjoint_sets(pool.differences).size());
      best = std::max(best, petals + 1);
    });
  }
  return best;
}

FurediVerdict assert_furedi(const KFamily& f, int r) {
  if (r < 1) throw InvalidArgument("Füredi check needs r >= 1");
  FurediVerdict v;
  v.bound = boost::multiprecision::pow(boost::multiprecision::cpp_int(r),
                                       static_cast<unsigned>(f.k()));
  v.family_size = f.size();
  v.bound_exceeded = boost::multiprecision::cpp_int(f.size()) > v.bound;
  v.witness = find_pseudo_sunflower(f, r + 1);
  v.internal_error = v.bound_exceeded && !v.witness;
  return v;
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kTriangle:
      return "triangle";
    case GraphClass::kSubgraphOfC4:
      return "subgraph_of_C4";
    case GraphClass::kNeither:
      return "neither";
  }
  return "unknown";
}

GraphClass classify_sunflower_free_graph(const KFamily& g) {
  if (g.k() != 2) {
    throw InvalidArgument("graph classification needs k = 2, got k = " +
                          std::to_string(g.k()));
  }
  const Mask support = g.support();
  const int vertices = popcount(support);
  if (g.size() == 3 && vertices == 3) return GraphClass::kTriangle;

  // Subgraphs of C4 (ignoring isolated vertices): at most four vertices,
  // maximum degree two, no triangle.
  if (vertices > 4 || g.max_degree(1) > 2) return GraphClass::kNeither;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Mask sym = edges[i] ^ edges[j];
      if (popcount(sym) == 2 && g.contains(sym)) return GraphClass::kNeither;
    }
  }
  return GraphClass::kSubgraphOfC4;
}

nlohmann::json to_json(const PseudoSunflower& p) {
  return {{"center", p.center.vertices()},
          {"core", edge_to_json(p.core)},
          {"petals", edges_to_json(p.petals)}};
}

}  // namespace hyperres
