#pragma once

#include <string>
#include <vector>

#include "asmlab/digraph.hpp"
#include "asmlab/dna.hpp"

namespace asmlab {

struct Contig {
  DnaString sequence;
  std::string source;         // provenance, e.g. "unitig:3" or "walk:component0"
  std::vector<VertexId> path; // vertex path in the graph it came from; may be empty
};

using ContigSet = std::vector<Contig>;

}  // namespace asmlab
