#pragma once

#include <string>
#include <variant>

#include "asmlab/bubble.hpp"
#include "asmlab/dbg.hpp"
#include "asmlab/unitig.hpp"

namespace asmlab {

/// Optional decoration: a walk (its edges drawn bold red) or a unitig
/// partition (vertices of one unitig share a fill color).
using DotHighlight = std::variant<std::monostate, Walk, UnitigPartition>;

/// Graphviz text. Vertices "n<id>" labeled with their (k-1)-mers, edges
/// labeled with their k-mers, both in id order. Deterministic bytes.
std::string export_dot(const DeBruijnGraph& g, const DotHighlight& highlight = {});

/// Same layout for a bubble graph; vertices carry their names and edges the
/// label of their path.
std::string export_dot(const BubbleGraph& g, const DotHighlight& highlight = {});

}  // namespace asmlab
