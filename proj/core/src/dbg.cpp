#include "asmlab/dbg.hpp"

#include <algorithm>

#include "asmlab/covering.hpp"
#include "asmlab/error.hpp"

namespace asmlab {

namespace {

void check_order(int k) {
  if (k < 2) throw InvalidParameter("de Bruijn graph order k must be >= 2, got " + std::to_string(k));
  check_k(k);
}

bool packed_less(const Kmer& a, const Kmer& b) { return a.packed() < b.packed(); }

}  // namespace

DeBruijnGraph DeBruijnGraph::from_edges(int k, std::vector<Kmer> edges, std::vector<Kmer> extra_vertices,
                                        std::vector<std::uint64_t> multiplicities) {
  check_order(k);
  if (!multiplicities.empty() && multiplicities.size() != edges.size()) {
    throw InvalidParameter("multiplicities must parallel the edge list");
  }
  std::vector<std::pair<Kmer, std::uint64_t>> tagged;
  tagged.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].k() != k) throw InvalidParameter("edge " + edges[i].str() + " does not have length k");
    tagged.emplace_back(edges[i], multiplicities.empty() ? 1 : multiplicities[i]);
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return packed_less(a.first, b.first); });

  DeBruijnGraph g;
  g.k_ = k;
  for (const auto& [x, n] : tagged) {
    if (!g.edges_.empty() && g.edges_.back() == x) {
      g.mult_.back() += n;
    } else {
      g.edges_.push_back(x);
      g.mult_.push_back(n);
    }
  }
  g.vertices_.reserve(2 * g.edges_.size() + extra_vertices.size());
  for (const auto& x : g.edges_) {
    g.vertices_.push_back(x.prefix());
    g.vertices_.push_back(x.suffix());
  }
  for (const auto& v : extra_vertices) {
    if (v.k() != k - 1) throw InvalidParameter("vertex " + v.str() + " does not have length k-1");
    g.vertices_.push_back(v);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end(), packed_less);
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());

  auto id_of = [&](const Kmer& v) {
    return static_cast<VertexId>(std::lower_bound(g.vertices_.begin(), g.vertices_.end(), v, packed_less) -
                                 g.vertices_.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> ends;
  ends.reserve(g.edges_.size());
  for (const auto& x : g.edges_) ends.emplace_back(id_of(x.prefix()), id_of(x.suffix()));
  g.graph_ = Digraph(g.vertices_.size(), std::move(ends));
  return g;
}

DeBruijnGraph DeBruijnGraph::build(const ReadSet& reads, int k, BuildDiagnostics* diag, unsigned threads) {
  check_order(k);
  const std::size_t uk = static_cast<std::size_t>(k);
  std::vector<Kmer> extra;
  BuildDiagnostics local;
  for (std::size_t i = 0; i < reads.size(); ++i) {
    if (reads[i].size() + 1 < uk) {
      local.rejected_reads.push_back(i);
    } else if (reads[i].size() + 1 == uk) {
      extra.push_back(Kmer::from_string(reads[i].view()));
    }
  }
  const KmerSpectrum sp = spectrum_of_set(reads, k, threads);
  std::vector<Kmer> edges;
  std::vector<std::uint64_t> mult;
  edges.reserve(sp.distinct());
  mult.reserve(sp.distinct());
  for (const auto& [x, n] : sp) {
    edges.push_back(x);
    mult.push_back(n);
  }
  DeBruijnGraph g = from_edges(k, std::move(edges), std::move(extra), std::move(mult));
  if (diag) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.graph().isolated(v)) local.isolated_vertices.push_back(g.vertex(v));
    }
    *diag = std::move(local);
  }
  return g;
}

std::optional<VertexId> DeBruijnGraph::find_vertex(Kmer x) const noexcept {
  if (x.k() != k_ - 1) return std::nullopt;
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x, packed_less);
  if (it == vertices_.end() || *it != x) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> DeBruijnGraph::find_edge(Kmer x) const noexcept {
  if (x.k() != k_) return std::nullopt;
  auto it = std::lower_bound(edges_.begin(), edges_.end(), x, packed_less);
  if (it == edges_.end() || *it != x) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

DeBruijnGraph DeBruijnGraph::subgraph(std::span<const EdgeId> edges) const {
  std::vector<Kmer> xs;
  std::vector<std::uint64_t> ms;
  xs.reserve(edges.size());
  for (EdgeId e : edges) {
    if (e >= edges_.size()) throw InvalidParameter("edge id out of range");
    xs.push_back(edges_[e]);
    ms.push_back(mult_[e]);
  }
  return from_edges(k_, std::move(xs), {}, std::move(ms));
}

std::vector<DeBruijnGraph> DeBruijnGraph::components() const {
  std::vector<DeBruijnGraph> out;
  for (const auto& c : edge_components(graph_)) out.push_back(subgraph(c));
  return out;
}

DnaString spell(const DeBruijnGraph& g, std::span<const EdgeId> walk) {
  if (walk.empty()) throw InvalidParameter("cannot spell an empty walk");
  if (!is_walk(g.graph(), walk)) throw InvalidParameter("edge sequence is not a walk");
  std::string s = g.edge(walk.front()).str();
  s.reserve(s.size() + walk.size() - 1);
  for (std::size_t i = 1; i < walk.size(); ++i) s.push_back(g.edge(walk[i]).last());
  return DnaString(std::move(s));
}

DnaString spell_path(const DeBruijnGraph& g, std::span<const VertexId> path) {
  if (path.empty()) throw InvalidParameter("cannot spell an empty path");
  if (path.size() == 1) return g.vertex(path.front()).dna();
  return spell(g, walk_of_path(g.graph(), path));
}

WalkLookup walk_of(const DnaString& s, const DeBruijnGraph& g) {
  if (s.size() < static_cast<std::size_t>(g.k())) {
    throw InvalidParameter("string of length " + std::to_string(s.size()) + " is shorter than k = " +
                           std::to_string(g.k()));
  }
  WalkLookup out;
  Walk w;
  w.reserve(s.size() - g.k() + 1);
  bool ok = true;
  for_each_kmer(s.view(), g.k(), [&](std::size_t pos, Kmer x) {
    if (!ok) return;
    const auto e = g.find_edge(x);
    if (!e) {
      ok = false;
      out.missing = KmerWitness{x.dna(), pos};
      return;
    }
    w.push_back(*e);
  });
  if (ok) out.walk = std::move(w);
  return out;
}

Walk walk_from_kmers(const DeBruijnGraph& g, std::span<const std::string> kmers) {
  Walk w;
  for (const auto& text : kmers) {
    const auto e = g.find_edge(Kmer::from_string(text));
    if (!e) throw InvalidParameter("k-mer " + text + " is not an edge");
    w.push_back(*e);
  }
  if (!is_walk(g.graph(), w)) throw InvalidParameter("k-mers do not chain into a walk");
  return w;
}

bool is_edge_covering(const DeBruijnGraph& g, std::span<const EdgeId> walk) noexcept {
  return is_walk(g.graph(), walk) && is_edge_covering(g.graph(), walk);
}

Walk shortest_edge_covering_walk(const DeBruijnGraph& g) { return shortest_edge_covering_walk(g.graph()); }

}  // namespace asmlab
