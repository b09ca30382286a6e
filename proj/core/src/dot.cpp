#include "asmlab/dot.hpp"

#include <functional>
#include <sstream>

namespace asmlab {

namespace {

std::string render(const Digraph& g, const std::function<std::string(VertexId)>& vlabel,
                   const std::function<std::string(EdgeId)>& elabel, const DotHighlight& hl) {
  std::vector<char> on_walk(g.num_edges(), 0);
  if (const auto* w = std::get_if<Walk>(&hl)) {
    for (EdgeId e : *w) {
      if (e < g.num_edges()) on_walk[e] = 1;
    }
  }
  const auto* part = std::get_if<UnitigPartition>(&hl);
  std::ostringstream os;
  os << "digraph dbg {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    os << "  n" << v << " [label=\"" << vlabel(v) << '"';
    if (part && v < part->unitig_of.size()) {
      os << " style=filled fillcolor=\"/set312/" << part->unitig_of[v] % 12 + 1 << "\" unitig="
         << part->unitig_of[v];
    }
    os << "];\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    os << "  n" << g.tail(e) << " -> n" << g.head(e) << " [label=\"" << elabel(e) << '"';
    if (on_walk[e]) os << " color=red penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const DeBruijnGraph& g, const DotHighlight& highlight) {
  return render(
      g.graph(), [&](VertexId v) { return g.vertex(v).str(); }, [&](EdgeId e) { return g.edge(e).str(); },
      highlight);
}

std::string export_dot(const BubbleGraph& g, const DotHighlight& highlight) {
  std::vector<std::string> edge_label(g.graph.num_edges());
  for (const auto& p : g.paths) {
    for (EdgeId e : p.edges) edge_label[e] = p.label;
  }
  return render(
      g.graph, [&](VertexId v) { return g.vertex_names[v]; }, [&](EdgeId e) { return edge_label[e]; },
      highlight);
}

}  // namespace asmlab
