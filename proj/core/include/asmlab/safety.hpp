#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "asmlab/contig.hpp"
#include "asmlab/digraph.hpp"
#include "asmlab/unitig.hpp"

namespace asmlab {

struct SafetyPreconditions {
  std::vector<VertexId> sources;  // non-isolated vertices without in-edges
  std::vector<VertexId> sinks;    // non-isolated vertices without out-edges
  bool covering_walk = false;
  std::string diagnosis;  // why the preconditions fail; empty when they hold

  bool has_source() const noexcept { return !sources.empty(); }
  bool has_sink() const noexcept { return !sinks.empty(); }
  bool holds() const noexcept { return has_source() && has_sink() && covering_walk; }
};

/// Source, sink and covering-walk preconditions under which unitigs spell
/// safe strings.
SafetyPreconditions check_safety_preconditions(const Digraph& g);

enum class Verdict { safe, unsafe, unknown };

struct SafetyResult {
  Verdict verdict = Verdict::unknown;
  Walk witness;               // covering walk avoiding the candidate (unsafe)
  std::size_t witness_length = 0;
  std::size_t states = 0;     // search states visited
  std::string note;
};

struct SafetyOptions {
  std::size_t max_states = std::size_t{1} << 22;
  std::size_t max_component_edges = 64;
};

/// Default walk-length bound: 2|E| + k.
inline std::size_t default_safety_bound(const Digraph& g, int k) {
  return 2 * g.num_edges() + static_cast<std::size_t>(k);
}

/// Does every edge-covering walk of the candidate's weakly connected
/// component contain `candidate` (a vertex path) as a contiguous subwalk?
///
/// Breadth-first search over (vertex, covered edges, matched candidate
/// prefix) for a covering walk that never completes the candidate. The
/// search is exact over all walk lengths: `safe` means no such walk exists
/// at all. A shortest avoiding walk of at most `bound` edges gives `unsafe`;
/// one longer than `bound`, or a search exceeding the option caps, gives
/// `unknown`. Never reports `safe` falsely.
///
/// For strings of length >= k-1 in a de Bruijn graph, being a substring of a
/// walk's spelling is the same as being a subwalk, so this decides safety of
/// the spelled string. Throws InvalidParameter when `bound` < |E| or the
/// candidate is not a vertex path.
SafetyResult is_safe_bounded(const Digraph& g, std::span<const VertexId> candidate, std::size_t bound,
                             const SafetyOptions& options = {});

struct SafetyEntry {
  std::size_t index = 0;  // position in the candidate list
  bool is_unitig = false;
  SafetyResult result;
  bool safety_violation = false;  // an unsafe unitig under the preconditions: a bug
};

struct SafetyReport {
  bool applicable = false;
  std::string reason;  // set when not applicable
  std::vector<SafetyEntry> entries;
  std::size_t safe = 0, unsafe = 0, unknown = 0, violations = 0;
};

/// Runs is_safe_bounded on every candidate. Declines (applicable = false)
/// when the preconditions fail.
SafetyReport safety_suite(const Digraph& g, std::span<const VertexPath> candidates, std::size_t bound,
                          const SafetyOptions& options = {});
SafetyReport safety_suite(const Digraph& g, const ContigSet& contigs, std::size_t bound,
                          const SafetyOptions& options = {});

struct SafeExtension {
  std::size_t unitig = 0;  // index into maximal_unitigs(g).unitigs
  VertexPath path;         // strictly longer than the unitig, certified safe
};

/// Grows every maximal unitig one vertex at a time, rightwards then
/// leftwards, keeping the smallest-id neighbour whose extension is still
/// certified safe. Reports the unitigs that grew.
std::vector<SafeExtension> safe_extensions(const Digraph& g, std::size_t bound,
                                           const SafetyOptions& options = {});

std::string to_string(Verdict v);

/// Tab-separated: contig id, source, verdict, witness length.
std::string format_safety_table(const SafetyReport& report, const ContigSet& contigs);

}  // namespace asmlab
