#include "hyperres/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "hyperres/bounds.hpp"
#include "hyperres/constructions.hpp"
#include "hyperres/error.hpp"
#include "hyperres/io.hpp"
#include "hyperres/resilience.hpp"
#include "hyperres/solvers.hpp"

namespace hyperres {

namespace {

struct Context {
  SearchSpec spec;
  std::vector<Mask> all_edges;
  std::optional<std::size_t> codegree_cap;
  std::optional<std::size_t> size_cap;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stopped{false};
  /// Candidates below this size are not worth a resilience check.
  std::atomic<std::size_t> threshold{0};
};

Mask relabel(Mask edge, const std::vector<int>& label) {
  Mask out = 0;
  for_each_vertex(edge, [&](int v) { out |= vertex_bit(label[v - 1]); });
  return out;
}

class Explorer {
 public:
  explicit Explorer(Context& ctx) : ctx_(ctx) {}

  void explore(const KFamily& f) {
    consider(f);
    if (ctx_.stopped.load(std::memory_order_relaxed)) return;
    for (const KFamily& child : children(f)) {
      explore(child);
      if (ctx_.stopped.load(std::memory_order_relaxed)) return;
    }
  }

  /// Canonical children of f that survive pruning, each counted as a node.
  /// Stops early (and flags the context) once the budget is spent.
  std::vector<KFamily> children(const KFamily& f) {
    std::vector<KFamily> out;
    std::set<CanonicalForm> seen;
    const int s = ctx_.spec.s;
    std::vector<Mask> disjoint;
    if (ctx_.size_cap && f.size() + 1 > *ctx_.size_cap) return out;
    for (Mask e : ctx_.all_edges) {
      if (f.contains(e)) continue;

      disjoint.clear();
      for (Mask g : f.edges()) {
        if ((g & e) == 0) disjoint.push_back(g);
      }
      if (has_matching_of_size(disjoint, s)) continue;  // ν would be s + 1

      KFamily child = f.with_edge(e);
      if (ctx_.codegree_cap && !codegree_ok(child, e)) continue;

      CanonicalLabeling lab = canonical_labeling(child);
      if (!is_canonical_extension(child, e, lab)) continue;
      if (!seen.insert(lab.form).second) continue;

      if (ctx_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 >
          ctx_.spec.node_budget) {
        ctx_.stopped.store(true, std::memory_order_relaxed);
        break;
      }
      out.push_back(std::move(child));
    }
    return out;
  }

  void consider(const KFamily& f) {
    if (f.empty() || f.size() < ctx_.threshold.load(std::memory_order_relaxed)) {
      return;
    }
    if (!has_matching_of_size(f, ctx_.spec.s)) return;
    if (!is_t_resilient(f, ctx_.spec.t)) return;
    if (f.size() > best_) {
      best_ = f.size();
      witnesses_.clear();
    }
    if (f.size() == best_) {
      CanonicalForm form = canonical_form(f);
      KFamily rep(form.k, form.n, form.edges);
      witnesses_.emplace(std::move(form), std::move(rep));
    }
    std::size_t cur = ctx_.threshold.load(std::memory_order_relaxed);
    while (cur < best_ && !ctx_.threshold.compare_exchange_weak(cur, best_)) {
    }
  }

  std::size_t best() const { return best_; }
  const std::map<CanonicalForm, KFamily>& witnesses() const {
    return witnesses_;
  }

 private:
  bool codegree_ok(const KFamily& child, Mask e) const {
    bool ok = true;
    for_each_vertex(e, [&](int v) {
      if (!ok) return;
      const Mask sub = e & ~vertex_bit(v);
      std::size_t count = 0;
      for (Mask g : child.edges()) {
        if ((g & sub) == sub) ++count;
      }
      if (count > *ctx_.codegree_cap) ok = false;
    });
    return ok;
  }

  /// e must lie in the automorphism orbit of the edge that the canonical
  /// labeling of the child sends to its largest relabeled mask.
  static bool is_canonical_extension(const KFamily& child, Mask e,
                                     const CanonicalLabeling& lab) {
    const Mask top = lab.form.edges.back();
    Mask d = 0;
    for (Mask g : child.edges()) {
      if (relabel(g, lab.label) == top) {
        d = g;
        break;
      }
    }
    if (d == e) return true;
    const auto edges = child.edges();
    std::vector<int> colors_e(edges.size(), 0);
    std::vector<int> colors_d(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == e) colors_e[i] = 1;
      if (edges[i] == d) colors_d[i] = 1;
    }
    return canonical_labeling(child, colors_e).form ==
           canonical_labeling(child, colors_d).form;
  }

  Context& ctx_;
  std::size_t best_ = 0;
  std::map<CanonicalForm, KFamily> witnesses_;
};

}  // namespace

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::kMaximize:
      return "maximize";
    case SearchMode::kVerifyTarget:
      return "verify_target";
    case SearchMode::kVerifyUnique:
      return "verify_unique";
  }
  return "maximize";
}

SearchMode search_mode_from_string(const std::string& s) {
  if (s == "maximize") return SearchMode::kMaximize;
  if (s == "verify_target") return SearchMode::kVerifyTarget;
  if (s == "verify_unique") return SearchMode::kVerifyUnique;
  throw InvalidArgument("unknown search mode \"" + s + "\"");
}

void validate(const SearchSpec& spec) {
  if (!(0 <= spec.t && spec.t < spec.k && spec.k <= spec.max_n &&
        spec.max_n <= kMaxVertices)) {
    throw InvalidArgument("search needs 0 <= t < k <= max_n <= 64");
  }
  if (spec.s < 1) throw InvalidArgument("search needs s >= 1");
  if (spec.node_budget == 0) throw InvalidArgument("node budget must be > 0");
  if (spec.threads < 1) throw InvalidArgument("threads must be >= 1");
  if (spec.mode != SearchMode::kMaximize && !spec.target) {
    throw InvalidArgument("verify modes need a target size");
  }
}

std::string SearchResult::scope_note() const {
  std::string note = "maximum over k-graphs on at most " +
                     std::to_string(spec.max_n) + " vertices";
  if (!exhausted) note += "; budget exhausted, result is a lower bound only";
  return note;
}

SearchResult max_resilient_family(const SearchSpec& spec) {
  validate(spec);
  SearchResult result;
  result.spec = spec;

  // No s-matching fits on max_n vertices: nothing to find.
  if (spec.s * spec.k > spec.max_n) {
    result.exhausted = true;
    if (spec.mode != SearchMode::kMaximize) result.target_confirmed = false;
    return result;
  }

  Context ctx;
  ctx.spec = spec;
  for_each_subset_of_size(spec.max_n, spec.k,
                          [&](Mask m) { ctx.all_edges.push_back(m); });
  if (spec.t == spec.k - 1) {
    ctx.codegree_cap = static_cast<std::size_t>(spec.k * spec.s);
    const BigInt cap = lovasz_bound(spec.k, spec.s).as_corollary.floor;
    if (cap < BigInt(ctx.all_edges.size())) {
      ctx.size_cap = static_cast<std::size_t>(cap);
    }
  }
  if (spec.target) ctx.threshold = *spec.target;
  ctx.nodes = 1;

  const KFamily root(spec.k, spec.max_n);
  std::vector<Explorer> explorers;
  explorers.reserve(static_cast<std::size_t>(spec.threads));

  if (spec.threads == 1) {
    explorers.emplace_back(ctx);
    explorers.front().explore(root);
  } else {
    // Expand breadth first until there is enough work to share out.
    explorers.emplace_back(ctx);
    Explorer& head = explorers.front();
    std::vector<KFamily> frontier{root};
    const std::size_t want = static_cast<std::size_t>(spec.threads) * 8;
    while (!frontier.empty() && frontier.size() < want &&
           !ctx.stopped.load()) {
      std::vector<KFamily> next;
      for (const KFamily& f : frontier) {
        head.consider(f);
        for (KFamily& c : head.children(f)) next.push_back(std::move(c));
        if (ctx.stopped.load()) break;
      }
      frontier = std::move(next);
    }
    for (int i = 1; i < spec.threads; ++i) explorers.emplace_back(ctx);
    std::atomic<std::size_t> index{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < spec.threads; ++i) {
      pool.emplace_back([&, i] {
        Explorer& ex = explorers[static_cast<std::size_t>(i)];
        for (;;) {
          const std::size_t j = index.fetch_add(1);
          if (j >= frontier.size() || ctx.stopped.load()) return;
          ex.explore(frontier[j]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::map<CanonicalForm, KFamily> merged;
  for (const Explorer& ex : explorers) {
    if (ex.best() > result.best_size) {
      result.best_size = ex.best();
      merged.clear();
    }
    if (ex.best() == result.best_size && ex.best() > 0) {
      merged.insert(ex.witnesses().begin(), ex.witnesses().end());
    }
  }
  result.found = result.best_size > 0;
  for (auto& [form, fam] : merged) result.witnesses.push_back(fam);
  result.nodes = std::min(ctx.nodes.load(), spec.node_budget);
  result.exhausted = !ctx.stopped.load();

  if (spec.mode != SearchMode::kMaximize) {
    bool ok = result.exhausted && result.found &&
              result.best_size == *spec.target;
    if (spec.mode == SearchMode::kVerifyUnique) {
      ok = ok && result.witnesses.size() == 1;
    }
    result.target_confirmed = ok;
  }
  return result;
}

LowerBoundReport verify_lower_bound(int k, int s, int t) {
  if (k < 1 || s < 1 || t < 0 || t >= k) {
    throw InvalidArgument("lower bound check needs k, s >= 1, 0 <= t < k");
  }
  LowerBoundReport r;
  r.k = k;
  r.s = s;
  r.t = t;
  r.n = s * k + k - 1;
  if (r.n > 12) {
    throw InvalidArgument("lower bound check limited to sk + k - 1 <= 12");
  }
  const KFamily f = complete_k_graph(r.n, k);
  r.size = BigInt(f.size());
  r.nu = matching_number(f).nu;
  r.resilient = is_t_resilient(f, t);
  r.certified = r.nu == s && r.resilient;
  return r;
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const KFamily& w : r.witnesses) witnesses.push_back(family_to_json(w));
  nlohmann::json j = {
      {"k", r.spec.k},
      {"s", r.spec.s},
      {"t", r.spec.t},
      {"max_n", r.spec.max_n},
      {"mode", to_string(r.spec.mode)},
      {"node_budget", r.spec.node_budget},
      {"threads", r.spec.threads},
      {"found", r.found},
      {"best_size", r.best_size},
      {"witnesses", witnesses},
      {"exhausted", r.exhausted},
      {"nodes", r.nodes},
      {"scope", r.scope_note()},
  };
  j["target"] = r.spec.target ? nlohmann::json(*r.spec.target) : nullptr;
  j["target_confirmed"] =
      r.target_confirmed ? nlohmann::json(*r.target_confirmed) : nullptr;
  return j;
}

nlohmann::json to_json(const LowerBoundReport& r) {
  return {{"k", r.k},         {"s", r.s},
          {"t", r.t},         {"n", r.n},
          {"size", r.size.str()}, {"nu", r.nu},
          {"resilient", r.resilient}, {"certified", r.certified}};
}

}  // namespace hyperres
