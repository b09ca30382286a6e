#include "asmlab/bubble.hpp"

#include "asmlab/error.hpp"

namespace asmlab {

const LabeledPath& BubbleGraph::path(std::string_view label) const {
  for (const auto& p : paths) {
    if (p.label == label) return p;
  }
  throw InvalidParameter("bubble graph has no path labeled " + std::string(label));
}

std::vector<VertexId> BubbleGraph::path_vertices(std::string_view label) const {
  return vertex_path(graph, path(label).edges);
}

std::vector<VertexId> BubbleGraph::interior(std::string_view label) const {
  auto v = path_vertices(label);
  return {v.begin() + 1, v.end() - 1};
}

BubbleGraph make_bubble_graph(std::size_t n, const BubbleOptions& o) {
  if (n < 1 || n > 12) throw InvalidParameter("bubble count must be in [1, 12], got " + std::to_string(n));
  if (o.top_edges == 0 || o.bottom_edges == 0 || o.connector_edges == 0 || o.tail_edges == 0 ||
      o.return_edges == 0) {
    throw InvalidParameter("every bubble-graph path needs at least one edge");
  }
  BubbleGraph bg;
  std::vector<std::pair<VertexId, VertexId>> ends;
  auto vertex = [&](std::string name) {
    bg.vertex_names.push_back(std::move(name));
    return static_cast<VertexId>(bg.vertex_names.size() - 1);
  };
  auto chain = [&](const std::string& label, VertexId from, VertexId to, std::size_t len) {
    LabeledPath p{label, {}};
    VertexId cur = from;
    for (std::size_t i = 1; i <= len; ++i) {
      const VertexId next = i == len ? to : vertex(label + "." + std::to_string(i));
      p.edges.push_back(static_cast<EdgeId>(ends.size()));
      ends.emplace_back(cur, next);
      cur = next;
    }
    bg.paths.push_back(std::move(p));
  };
  auto letter = [](std::size_t i) { return std::string(1, static_cast<char>('A' + i)); };

  const VertexId source = vertex("source");
  std::vector<VertexId> split(n), merge(n);
  for (std::size_t i = 0; i < n; ++i) {
    split[i] = vertex("in:" + letter(1 + 2 * i));
    merge[i] = vertex("out:" + letter(1 + 2 * i));
  }
  const VertexId sink = vertex("sink");

  chain("A", source, split[0], o.tail_edges);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string b = letter(1 + 2 * i);
    chain(b + "1", split[i], merge[i], o.top_edges);
    chain(b + "2", split[i], merge[i], o.bottom_edges);
    if (i + 1 < n) chain(letter(2 + 2 * i), merge[i], split[i + 1], o.connector_edges);
  }
  chain(letter(2 * n), merge[n - 1], split[0], o.return_edges);
  chain(letter(2 * n + 1), merge[n - 1], sink, o.tail_edges);
  bg.graph = Digraph(bg.vertex_names.size(), std::move(ends));
  return bg;
}

}  // namespace asmlab
