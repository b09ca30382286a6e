#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "asmlab/digraph.hpp"

namespace asmlab {

struct BubbleOptions {
  std::size_t top_edges = 1;        // edges on the first branch of each bubble
  std::size_t bottom_edges = 2;     // edges on the second branch
  std::size_t connector_edges = 1;  // between consecutive bubbles
  std::size_t tail_edges = 1;       // entry path from the source and exit path to the sink
  std::size_t return_edges = 1;     // path from the last bubble back to the first
};

struct LabeledPath {
  std::string label;  // "A", "B1", "B2", "C", ...
  Walk edges;
};

/// Chain of two-branch bubbles with a return path, after the textbook
/// example of a graph with exponentially many shortest covering walks.
///
/// Layout for n = 3: source -A-> [B1|B2] -C-> [D1|D2] -E-> [F1|F2], then G
/// returns to the first bubble and H leads to the sink. Every shortest
/// covering walk runs A, crosses every bubble twice and exits through H, so
/// there are 2^n of them.
struct BubbleGraph {
  Digraph graph;
  std::vector<std::string> vertex_names;
  std::vector<LabeledPath> paths;

  /// Throws InvalidParameter for an unknown label.
  const LabeledPath& path(std::string_view label) const;
  /// Vertices of a labeled path including both endpoints.
  std::vector<VertexId> path_vertices(std::string_view label) const;
  /// Interior vertices of a labeled path.
  std::vector<VertexId> interior(std::string_view label) const;
};

/// Throws InvalidParameter unless 1 <= n <= 12 and every path has >= 1 edge.
BubbleGraph make_bubble_graph(std::size_t n, const BubbleOptions& options = {});

}  // namespace asmlab
