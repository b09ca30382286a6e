#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "asmlab/contig.hpp"
#include "asmlab/dbg.hpp"
#include "asmlab/digraph.hpp"

namespace asmlab {

using VertexPath = std::vector<VertexId>;

struct UnitigPartition {
  std::vector<VertexPath> unitigs;     // ordered by first vertex id
  std::vector<std::size_t> unitig_of;  // index into `unitigs` for every vertex
};

/// True when every vertex but the first has in-degree 1, every vertex but
/// the last has out-degree 1, and consecutive vertices are joined by an edge.
bool is_unitig(const Digraph& g, std::span<const VertexId> path);

/// The maximal unitigs. Vertex v continues into w when v has a single
/// out-edge, it leads to w != v and w has a single in-edge; chains of these
/// links are the unitigs. A cycle made only of such links is cut before its
/// smallest vertex id.
UnitigPartition maximal_unitigs(const Digraph& g);

/// One contig per maximal unitig, spelled from its vertex path. For a de
/// Bruijn graph the order by first vertex id equals lexicographic order of
/// the spelled strings.
ContigSet unitig_contigs(const DeBruijnGraph& g);

}  // namespace asmlab
