#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace asmlab {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Edge sequence; consecutive edges share the intermediate vertex.
using Walk = std::vector<EdgeId>;

/// Immutable directed multigraph with dense ids. Edge ids are the positions
/// of the edge list given at construction; out/in lists are sorted by edge id.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t num_vertices, std::vector<std::pair<VertexId, VertexId>> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return ends_.size(); }

  VertexId tail(EdgeId e) const noexcept { return ends_[e].first; }
  VertexId head(EdgeId e) const noexcept { return ends_[e].second; }

  std::span<const EdgeId> out_edges(VertexId v) const noexcept {
    return {out_.data() + out_start_[v], out_.data() + out_start_[v + 1]};
  }
  std::span<const EdgeId> in_edges(VertexId v) const noexcept {
    return {in_.data() + in_start_[v], in_.data() + in_start_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const noexcept { return out_start_[v + 1] - out_start_[v]; }
  std::size_t in_degree(VertexId v) const noexcept { return in_start_[v + 1] - in_start_[v]; }
  bool isolated(VertexId v) const noexcept { return out_degree(v) == 0 && in_degree(v) == 0; }

  const std::vector<std::pair<VertexId, VertexId>>& edge_list() const noexcept { return ends_; }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<std::size_t> out_start_{0}, in_start_{0};
  std::vector<EdgeId> out_, in_;
};

/// True when consecutive edges chain head to tail. The empty walk is a walk.
bool is_walk(const Digraph& g, std::span<const EdgeId> walk) noexcept;

/// True iff the distinct edges of `walk` are exactly the graph's edges.
bool is_edge_covering(const Digraph& g, std::span<const EdgeId> walk) noexcept;

/// tail of the first edge followed by the head of every edge.
std::vector<VertexId> vertex_path(const Digraph& g, std::span<const EdgeId> walk);

/// Edge sequence joining consecutive vertices of `path` (smallest edge id
/// when parallel edges exist). Throws InvalidParameter on a missing edge.
Walk walk_of_path(const Digraph& g, std::span<const VertexId> path);

/// Weakly connected components of the edges, each as sorted edge ids, in
/// order of smallest edge id. Isolated vertices belong to none.
std::vector<std::vector<EdgeId>> edge_components(const Digraph& g);

/// Component index of every vertex under weak connectivity; isolated
/// vertices get their own singleton components.
std::vector<std::size_t> vertex_components(const Digraph& g, std::size_t* count = nullptr);

}  // namespace asmlab
