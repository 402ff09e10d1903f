#include "hyperres/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hyperres/error.hpp"

namespace hyperres {

namespace {

using Cells = std::vector<std::vector<int>>;  // ordered partition, 0-based
using Certificate = std::vector<std::pair<Mask, int>>;

class Refiner {
 public:
  Refiner(const KFamily& f, std::span<const int> colors) : n_(f.n()) {
    const auto edges = f.edges();
    edge_vertices_.reserve(edges.size());
    incident_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<int> verts;
      for_each_vertex(edges[i], [&](int v) { verts.push_back(v - 1); });
      for (int v : verts) incident_[v].push_back(static_cast<int>(i));
      edge_vertices_.push_back(std::move(verts));
      colors_.push_back(colors.empty() ? 0 : colors[i]);
      masks_.push_back(edges[i]);
    }
  }

  int n() const { return n_; }

  /// Splits cells until every cell is equitable w.r.t. the edge signature.
  void refine(Cells& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      }
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::vector<int>>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(signature(v, cell_of), v);
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> group{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(group));
            group.clear();
          }
          group.push_back(keyed[i].second);
        }
        next.push_back(std::move(group));
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  Certificate certificate(const std::vector<int>& label) const {
    Certificate cert;
    cert.reserve(masks_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      Mask m = 0;
      for (int v : edge_vertices_[i]) m |= Mask{1} << label[v];
      cert.emplace_back(m, colors_[i]);
    }
    std::sort(cert.begin(), cert.end());
    return cert;
  }

 private:
  std::vector<std::vector<int>> signature(int v,
                                          const std::vector<int>& cell_of) const {
    std::vector<std::vector<int>> sig;
    sig.reserve(incident_[v].size());
    for (int e : incident_[v]) {
      std::vector<int> key{colors_[e]};
      for (int w : edge_vertices_[e]) {
        if (w != v) key.push_back(cell_of[w]);
      }
      std::sort(key.begin() + 1, key.end());
      sig.push_back(std::move(key));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  }

  int n_;
  std::vector<std::vector<int>> edge_vertices_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> colors_;
  std::vector<Mask> masks_;
};

class LabelingSearch {
 public:
  explicit LabelingSearch(const Refiner& refiner)
      : refiner_(refiner),
        n_(refiner.n()),
        frames_(static_cast<std::size_t>(n_) + 2) {}

  void run() {
    Cells root{std::vector<int>(static_cast<std::size_t>(n_))};
    std::iota(root[0].begin(), root[0].end(), 0);
    refiner_.refine(root);
    search(root, 0);
  }

  const Certificate& best_certificate() const { return best_cert_; }
  const std::vector<int>& best_label() const { return best_label_; }
  const std::vector<std::vector<int>>& automorphisms() const { return auts_; }
  long leaves() const { return leaves_; }

 private:
  struct Frame {
    bool has_first = false;
    Certificate cert;
    std::vector<int> label;
    std::vector<int> path;
  };

  // Returns the depth to resume at when the current subtree turned out to
  // be the image of an explored one, or -1.
  int search(const Cells& cells, int depth) {
    const auto target = std::find_if(cells.begin(), cells.end(),
                                     [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return leaf(cells, depth);

    const std::size_t target_index =
        static_cast<std::size_t>(target - cells.begin());
    std::vector<int> choices = *target;
    std::sort(choices.begin(), choices.end());
    std::vector<int> explored;
    for (int v : choices) {
      if (equivalent_to_explored(v, explored)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target_index) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      refiner_.refine(child);
      frames_[static_cast<std::size_t>(depth) + 1].has_first = false;
      path_.push_back(v);
      const int resume = search(child, depth + 1);
      path_.pop_back();
      explored.push_back(v);
      if (resume >= 0 && resume < depth) return resume;
    }
    return -1;
  }

  int leaf(const Cells& cells, int depth) {
    ++leaves_;
    std::vector<int> label(static_cast<std::size_t>(n_));
    for (std::size_t pos = 0; pos < cells.size(); ++pos) {
      label[cells[pos][0]] = static_cast<int>(pos);
    }
    Certificate cert = refiner_.certificate(label);

    int resume = -1;
    for (int a = depth; a >= 0 && resume < 0; --a) {
      const Frame& fr = frames_[static_cast<std::size_t>(a)];
      if (fr.has_first && fr.cert == cert) {
        record_automorphism(fr.label, label);
        resume = common_prefix(fr.path);
      }
    }
    if (resume < 0 && have_best_ && cert == best_cert_) {
      record_automorphism(best_label_, label);
      resume = common_prefix(best_path_);
    }
    for (int a = 0; a <= depth; ++a) {
      Frame& fr = frames_[static_cast<std::size_t>(a)];
      if (!fr.has_first) {
        fr.has_first = true;
        fr.cert = cert;
        fr.label = label;
        fr.path = path_;
      }
    }
    if (!have_best_ || cert < best_cert_) {
      have_best_ = true;
      best_cert_ = std::move(cert);
      best_label_ = std::move(label);
      best_path_ = path_;
    }
    return resume;
  }

  int common_prefix(const std::vector<int>& other) const {
    std::size_t i = 0;
    while (i < path_.size() && i < other.size() && path_[i] == other[i]) ++i;
    return static_cast<int>(i);
  }

  // Maps v to the vertex holding the same canonical position in `from`.
  void record_automorphism(const std::vector<int>& from,
                           const std::vector<int>& to) {
    std::vector<int> vertex_at(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) vertex_at[from[v]] = v;
    std::vector<int> perm(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      perm[v] = vertex_at[to[v]];
      identity = identity && perm[v] == v;
    }
    if (!identity) auts_.push_back(std::move(perm));
  }

  // v lies in the orbit of an explored sibling under the automorphisms
  // found so far that fix the current path pointwise.
  bool equivalent_to_explored(int v, const std::vector<int>& explored) const {
    if (explored.empty() || auts_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : auts_) {
      const bool fixes_path = std::all_of(
          path_.begin(), path_.end(), [&](int p) { return g[p] == p; });
      if (!fixes_path) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(g[x]);
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int w) { return find(w) == root; });
  }

  const Refiner& refiner_;
  int n_;
  std::vector<Frame> frames_;
  std::vector<int> path_;
  bool have_best_ = false;
  Certificate best_cert_;
  std::vector<int> best_label_;
  std::vector<int> best_path_;
  std::vector<std::vector<int>> auts_;
  long leaves_ = 0;
};

}  // namespace

std::string CanonicalForm::to_string() const {
  std::string out = std::to_string(k) + "/" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ' ';
    out += edge_to_string(edges[i]);
    if (!colors.empty()) out += "#" + std::to_string(colors[i]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const KFamily& f,
                                     std::span<const int> edge_colors) {
  if (!edge_colors.empty() && edge_colors.size() != f.size()) {
    throw InvalidArgument("edge color list does not match the edge count");
  }
  Refiner refiner(f, edge_colors);
  LabelingSearch search(refiner);
  search.run();

  CanonicalLabeling out;
  out.form.k = f.k();
  out.form.n = f.n();
  for (const auto& [mask, color] : search.best_certificate()) {
    out.form.edges.push_back(mask);
    if (!edge_colors.empty()) out.form.colors.push_back(color);
  }
  out.label.reserve(static_cast<std::size_t>(f.n()));
  for (int pos : search.best_label()) out.label.push_back(pos + 1);
  for (const auto& g : search.automorphisms()) {
    std::vector<int> perm;
    perm.reserve(g.size());
    for (int x : g) perm.push_back(x + 1);
    out.automorphisms.push_back(std::move(perm));
  }
  out.leaves = search.leaves();
  return out;
}

CanonicalForm canonical_form(const KFamily& f) {
  return canonical_labeling(f).form;
}

bool isomorphic(const KFamily& a, const KFamily& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

KFamily canonical_family(const KFamily& f) {
  auto form = canonical_form(f);
  return KFamily(form.k, form.n, std::move(form.edges));
}

}  // namespace hyperres
