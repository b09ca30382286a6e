#include "asmlab/unitig.hpp"

#include <algorithm>
#include <limits>

namespace asmlab {

bool is_unitig(const Digraph& g, std::span<const VertexId> path) {
  if (path.empty()) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.num_vertices()) return false;
    if (i > 0 && g.in_degree(path[i]) != 1) return false;
    if (i + 1 < path.size()) {
      if (g.out_degree(path[i]) != 1) return false;
      if (g.head(g.out_edges(path[i]).front()) != path[i + 1]) return false;
    }
  }
  return true;
}

UnitigPartition maximal_unitigs(const Digraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> succ(n, kNone), pred(n, kNone);
  for (VertexId v = 0; v < n; ++v) {
    if (g.out_degree(v) != 1) continue;
    const VertexId w = g.head(g.out_edges(v).front());
    if (w != v && g.in_degree(w) == 1) {
      succ[v] = w;
      pred[w] = v;
    }
  }
  UnitigPartition p;
  p.unitig_of.assign(n, 0);
  std::vector<char> done(n, 0);
  auto walk_from = [&](VertexId start) {
    VertexPath path;
    for (VertexId v = start; v != kNone && !done[v]; v = succ[v]) {
      done[v] = 1;
      path.push_back(v);
    }
    p.unitigs.push_back(std::move(path));
  };
  for (VertexId v = 0; v < n; ++v) {
    if (pred[v] == kNone) walk_from(v);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!done[v]) walk_from(v);
  }
  std::sort(p.unitigs.begin(), p.unitigs.end(),
            [](const VertexPath& a, const VertexPath& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < p.unitigs.size(); ++i) {
    for (VertexId v : p.unitigs[i]) p.unitig_of[v] = i;
  }
  return p;
}

ContigSet unitig_contigs(const DeBruijnGraph& g) {
  ContigSet out;
  auto part = maximal_unitigs(g.graph());
  out.reserve(part.unitigs.size());
  for (std::size_t i = 0; i < part.unitigs.size(); ++i) {
    out.push_back(Contig{spell_path(g, part.unitigs[i]), "unitig:" + std::to_string(i), std::move(part.unitigs[i])});
  }
  return out;
}

}  // namespace asmlab
