#include "asmlab/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "asmlab/error.hpp"

namespace asmlab {

Digraph::Digraph(std::size_t num_vertices, std::vector<std::pair<VertexId, VertexId>> edges)
    : num_vertices_(num_vertices), ends_(std::move(edges)) {
  out_start_.assign(num_vertices_ + 1, 0);
  in_start_.assign(num_vertices_ + 1, 0);
  for (const auto& [t, h] : ends_) {
    if (t >= num_vertices_ || h >= num_vertices_) throw InvalidParameter("edge endpoint out of range");
    ++out_start_[t + 1];
    ++in_start_[h + 1];
  }
  std::partial_sum(out_start_.begin(), out_start_.end(), out_start_.begin());
  std::partial_sum(in_start_.begin(), in_start_.end(), in_start_.begin());
  out_.resize(ends_.size());
  in_.resize(ends_.size());
  std::vector<std::size_t> o(out_start_.begin(), out_start_.end() - 1);
  std::vector<std::size_t> i(in_start_.begin(), in_start_.end() - 1);
  for (EdgeId e = 0; e < ends_.size(); ++e) {
    out_[o[ends_[e].first]++] = e;
    in_[i[ends_[e].second]++] = e;
  }
}

bool is_walk(const Digraph& g, std::span<const EdgeId> walk) noexcept {
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] >= g.num_edges()) return false;
    if (i > 0 && g.head(walk[i - 1]) != g.tail(walk[i])) return false;
  }
  return true;
}

bool is_edge_covering(const Digraph& g, std::span<const EdgeId> walk) noexcept {
  std::vector<char> seen(g.num_edges(), 0);
  std::size_t distinct = 0;
  for (EdgeId e : walk) {
    if (e >= g.num_edges()) return false;
    if (!seen[e]) {
      seen[e] = 1;
      ++distinct;
    }
  }
  return distinct == g.num_edges();
}

std::vector<VertexId> vertex_path(const Digraph& g, std::span<const EdgeId> walk) {
  std::vector<VertexId> path;
  if (walk.empty()) return path;
  path.reserve(walk.size() + 1);
  path.push_back(g.tail(walk.front()));
  for (EdgeId e : walk) path.push_back(g.head(e));
  return path;
}

Walk walk_of_path(const Digraph& g, std::span<const VertexId> path) {
  Walk w;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i - 1] >= g.num_vertices() || path[i] >= g.num_vertices()) {
      throw InvalidParameter("vertex id out of range");
    }
    const auto out = g.out_edges(path[i - 1]);
    const auto it = std::find_if(out.begin(), out.end(), [&](EdgeId e) { return g.head(e) == path[i]; });
    if (it == out.end()) {
      throw InvalidParameter("no edge from vertex " + std::to_string(path[i - 1]) + " to vertex " +
                             std::to_string(path[i]));
    }
    w.push_back(*it);
  }
  return w;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::size_t> vertex_components(const Digraph& g, std::size_t* count) {
  DisjointSets ds(g.num_vertices());
  for (const auto& [t, h] : g.edge_list()) ds.unite(t, h);
  std::vector<std::size_t> label(g.num_vertices());
  std::vector<std::size_t> index(g.num_vertices(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const std::size_t r = ds.find(v);
    if (index[r] == SIZE_MAX) index[r] = next++;
    label[v] = index[r];
  }
  if (count) *count = next;
  return label;
}

std::vector<std::vector<EdgeId>> edge_components(const Digraph& g) {
  const auto label = vertex_components(g);
  std::vector<std::vector<EdgeId>> comps;
  std::vector<std::size_t> slot(g.num_vertices() + 1, SIZE_MAX);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const std::size_t c = label[g.tail(e)];
    if (slot[c] == SIZE_MAX) {
      slot[c] = comps.size();
      comps.emplace_back();
    }
    comps[slot[c]].push_back(e);
  }
  return comps;
}

}  // namespace asmlab
