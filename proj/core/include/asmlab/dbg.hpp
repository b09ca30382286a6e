#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asmlab/digraph.hpp"
#include "asmlab/dna.hpp"
#include "asmlab/kmer.hpp"
#include "asmlab/strings.hpp"

namespace asmlab {

struct BuildDiagnostics {
  std::vector<std::size_t> rejected_reads;  // indices of reads shorter than k-1
  std::vector<Kmer> isolated_vertices;      // (k-1)-mers touching no edge
};

/// Order-k de Bruijn graph: vertices are the distinct (k-1)-mers, edges the
/// distinct k-mers, each edge running from its prefix to its suffix. Vertex
/// and edge ids follow lexicographic order of their k-mers, so the out-edges
/// of a vertex are ordered by their last symbol.
class DeBruijnGraph {
 public:
  DeBruijnGraph() = default;

  /// Reads shorter than k-1 are skipped and listed in `diag`; reads of
  /// length exactly k-1 contribute a vertex only. Throws InvalidParameter
  /// for k < 2 or k > 31.
  static DeBruijnGraph build(const ReadSet& reads, int k, BuildDiagnostics* diag = nullptr,
                             unsigned threads = 1);

  /// Graph over the given k-mers plus extra (k-1)-mer vertices. Duplicates
  /// are merged; `multiplicities` (parallel to `edges`, optional) default to 1.
  static DeBruijnGraph from_edges(int k, std::vector<Kmer> edges, std::vector<Kmer> extra_vertices = {},
                                  std::vector<std::uint64_t> multiplicities = {});

  int k() const noexcept { return k_; }
  const Digraph& graph() const noexcept { return graph_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const Kmer& vertex(VertexId v) const noexcept { return vertices_[v]; }
  const Kmer& edge(EdgeId e) const noexcept { return edges_[e]; }
  const std::vector<Kmer>& vertices() const noexcept { return vertices_; }
  const std::vector<Kmer>& edges() const noexcept { return edges_; }
  /// Occurrences of the edge's k-mer in the source reads (annotation only).
  std::uint64_t multiplicity(EdgeId e) const noexcept { return mult_[e]; }

  std::optional<VertexId> find_vertex(Kmer x) const noexcept;
  std::optional<EdgeId> find_edge(Kmer x) const noexcept;

  /// Induced graph on a subset of edges (their endpoints become the vertices).
  DeBruijnGraph subgraph(std::span<const EdgeId> edges) const;

  /// One subgraph per weakly connected edge component, in the order of
  /// edge_components(); isolated vertices are dropped.
  std::vector<DeBruijnGraph> components() const;

 private:
  int k_ = 2;
  std::vector<Kmer> vertices_;
  std::vector<Kmer> edges_;
  std::vector<std::uint64_t> mult_;
  Digraph graph_;
};

/// First edge's k-mer followed by the last symbol of every later edge.
/// Throws InvalidParameter for an empty walk or one that does not chain.
DnaString spell(const DeBruijnGraph& g, std::span<const EdgeId> walk);

/// Spelling of a vertex path (a lone vertex spells its (k-1)-mer).
DnaString spell_path(const DeBruijnGraph& g, std::span<const VertexId> path);

struct WalkLookup {
  std::optional<Walk> walk;
  std::optional<KmerWitness> missing;  // first k-mer of the string absent from the graph
  explicit operator bool() const noexcept { return walk.has_value(); }
};

/// The unique walk spelling `s`, or the first missing k-mer.
/// Throws InvalidParameter when |s| < k.
WalkLookup walk_of(const DnaString& s, const DeBruijnGraph& g);

/// Walk spelled by the string's k-mers given as text; convenience for
/// fixtures. Throws InvalidParameter when a k-mer is missing.
Walk walk_from_kmers(const DeBruijnGraph& g, std::span<const std::string> kmers);

/// Convenience wrappers over the generic Digraph routines.
bool is_edge_covering(const DeBruijnGraph& g, std::span<const EdgeId> walk) noexcept;
Walk shortest_edge_covering_walk(const DeBruijnGraph& g);

}  // namespace asmlab
