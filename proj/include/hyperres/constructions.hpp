#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperres/family.hpp"

namespace hyperres {

/// All C(n,k) k-subsets of [n].
KFamily complete_k_graph(int n, int k);

/// E(n,k,s): the k-subsets of [n] meeting [s]. Needs 1 <= s <= n, k <= n.
KFamily erdos_family(int n, int k, int s);

/// The 3-graph (1,2,5),(3,4,5),(6,7,8),(6,9,10) on [10].
KFamily fixture_four_edges();

/// Named graphs: triangle, C4, P2..P4 (paths on 2..4 vertices), star2,
/// star3 (K_{1,2}, K_{1,3}) and K3..K6, each on its own vertex count.
std::vector<std::pair<std::string, KFamily>> graph_gallery();

/// Builds a family from a name:
///   complete:N,K   erdos:N,K,S   fixture   or any graph_gallery() name.
/// Throws InvalidArgument on unknown names or bad parameters.
KFamily construct(std::string_view spec);

}  // namespace hyperres
