#include "hyperres/constructions.hpp"

#include <charconv>

#include "hyperres/error.hpp"

namespace hyperres {

namespace {

KFamily graph(int n, std::vector<std::vector<int>> edges) {
  return KFamily::from_edge_lists(2, n, edges);
}

std::vector<int> parse_params(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view tok = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("bad construction parameter \"" +
                            std::string(tok) + "\"");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

KFamily complete_k_graph(int n, int k) {
  if (!(1 <= k && k <= n && n <= kMaxVertices)) {
    throw InvalidArgument("complete k-graph needs 1 <= k <= n <= 64");
  }
  std::vector<Mask> edges;
  for_each_subset_of_size(n, k, [&](Mask m) { edges.push_back(m); });
  return KFamily(k, n, std::move(edges));
}

KFamily erdos_family(int n, int k, int s) {
  if (!(1 <= k && k <= n && n <= kMaxVertices && 1 <= s && s <= n)) {
    throw InvalidArgument("E(n,k,s) needs 1 <= k <= n <= 64, 1 <= s <= n");
  }
  const Mask first_s = ground_mask(s);
  std::vector<Mask> edges;
  for_each_subset_of_size(n, k, [&](Mask m) {
    if ((m & first_s) != 0) edges.push_back(m);
  });
  return KFamily(k, n, std::move(edges));
}

KFamily fixture_four_edges() {
  return KFamily::from_edge_lists(
      3, 10, {{1, 2, 5}, {3, 4, 5}, {6, 7, 8}, {6, 9, 10}});
}

std::vector<std::pair<std::string, KFamily>> graph_gallery() {
  std::vector<std::pair<std::string, KFamily>> out;
  out.emplace_back("triangle", graph(3, {{1, 2}, {2, 3}, {1, 3}}));
  out.emplace_back("C4", graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  out.emplace_back("P2", graph(2, {{1, 2}}));
  out.emplace_back("P3", graph(3, {{1, 2}, {2, 3}}));
  out.emplace_back("P4", graph(4, {{1, 2}, {2, 3}, {3, 4}}));
  out.emplace_back("star2", graph(3, {{1, 2}, {1, 3}}));
  out.emplace_back("star3", graph(4, {{1, 2}, {1, 3}, {1, 4}}));
  for (int n = 3; n <= 6; ++n) {
    out.emplace_back("K" + std::to_string(n), complete_k_graph(n, 2));
  }
  return out;
}

KFamily construct(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::vector<int> params =
      colon == std::string_view::npos ? std::vector<int>{}
                                      : parse_params(spec.substr(colon + 1));
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      throw InvalidArgument("construction \"" + std::string(name) +
                            "\" takes " + std::to_string(count) +
                            " parameters");
    }
  };
  if (name == "complete") {
    want(2);
    return complete_k_graph(params[0], params[1]);
  }
  if (name == "erdos") {
    want(3);
    return erdos_family(params[0], params[1], params[2]);
  }
  if (name == "fixture") {
    want(0);
    return fixture_four_edges();
  }
  for (auto& [gallery_name, family] : graph_gallery()) {
    if (gallery_name == name) {
      want(0);
      return family;
    }
  }
  throw InvalidArgument("unknown construction \"" + std::string(spec) + "\"");
}

}  // namespace hyperres
