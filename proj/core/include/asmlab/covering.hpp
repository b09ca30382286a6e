#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "asmlab/digraph.hpp"
#include "asmlab/error.hpp"

namespace asmlab {

/// Raised when the edges split into several weakly connected components;
/// no single walk covers them. Each component is a sorted list of edge ids,
/// so the caller can solve the pieces separately.
class MultiComponentError : public Error {
 public:
  explicit MultiComponentError(std::vector<std::vector<EdgeId>> components);
  const std::vector<std::vector<EdgeId>>& components() const noexcept { return components_; }

 private:
  std::vector<std::vector<EdgeId>> components_;
};

struct CoveringWalkCheck {
  bool exists = false;
  std::size_t components = 0;  // weakly connected edge components
  std::string diagnosis;       // empty when a walk exists
};

/// A walk through every edge exists iff the strongly connected components of
/// the non-isolated vertices can be lined up s1 -> s2 -> ... -> st with every
/// edge between components joining consecutive ones, exactly one per pair.
/// A graph without edges trivially has the empty covering walk.
CoveringWalkCheck covering_walk_exists(const Digraph& g);

/// Minimum-length walk visiting every edge, open or closed.
///
/// Edge duplications come from a minimum-cost flow over shortest paths from
/// vertices with in-degree surplus to vertices with out-degree surplus; one
/// unit may bypass the graph through a zero-cost hub, which models leaving
/// the walk open between one start and one end vertex. The augmented
/// multigraph is then traversed as an Eulerian trail taking, at each vertex,
/// the smallest usable edge id. A closed walk starts at the tail of edge 0.
///
/// Returns the empty walk for a graph without edges. Throws
/// MultiComponentError for several components and NoCoveringWalk when the
/// component shape admits no covering walk.
Walk shortest_edge_covering_walk(const Digraph& g);

enum class OracleMode { one, count_all };

struct OracleResult {
  std::size_t length = 0;  // optimum number of edges
  std::uint64_t count = 0; // number of distinct optimal walks (count_all), saturating; 1 in `one` mode
  Walk walk;               // lexicographically smallest optimal edge sequence (`one` mode)
};

/// Exhaustive search over (current vertex, covered edge set) states.
/// Throws ResourceLimit above `max_edges` (itself capped at 16) and
/// NoCoveringWalk when no state covers every edge.
OracleResult oracle_shortest_edge_covering_walk(const Digraph& g, OracleMode mode,
                                                std::size_t max_edges = 16);

}  // namespace asmlab
