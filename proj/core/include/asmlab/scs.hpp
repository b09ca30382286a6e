#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "asmlab/dna.hpp"
#include "asmlab/strings.hpp"

namespace asmlab {

enum class ScsMethod { greedy, exact };

/// How one read entered the superstring.
enum class MergeKind {
  start,     // the initial string
  right,     // appended after the current string, overlapping its suffix
  left,      // prepended before the current string, overlapping its prefix
  absorbed,  // already a substring; no change
};

struct MergeStep {
  std::size_t read = 0;     // index into the input ReadSet
  MergeKind kind = MergeKind::start;
  std::size_t overlap = 0;  // overlap length for right/left steps
};

struct ScsResult {
  DnaString superstring;
  ScsMethod method = ScsMethod::greedy;
  std::vector<MergeStep> merge_order;
};

/// Replays `result.merge_order` against `reads`. Throws InvalidParameter if a
/// step is inconsistent (bad overlap, absorbed read not contained).
DnaString replay_merges(const ReadSet& reads, const std::vector<MergeStep>& steps);

/// Greedy heuristic growing a single string.
///
/// Starts from the lexicographically smallest read (lowest index on ties) and
/// repeatedly attaches the unused read with the largest overlap against either
/// end of the current string. Ties prefer the lexicographically smaller read,
/// then a right extension over a left one. Reads that already occur in the
/// current string are absorbed without extending it.
/// Throws InvalidParameter on an empty read set.
ScsResult greedy_scs(const ReadSet& reads);

struct ExactScsOptions {
  /// Maximum number of distinct reads left after removing those contained in
  /// another read. Hard upper bound 16.
  std::size_t max_reads = 12;
};

/// Exact shortest common superstring.
///
/// Reads contained in another read are absorbed; over all orders of the rest,
/// consecutive reads are merged with maximal overlap. The result is the
/// shortest such merge and, among equal lengths, the lexicographically
/// smallest string. Computed by dynamic programming over (used set, last read).
/// Throws ResourceLimit above `options.max_reads`, InvalidParameter on an
/// empty read set.
ScsResult exact_scs(const ReadSet& reads, const ExactScsOptions& options = {});

struct OvercollapseReport {
  std::optional<Repeat> longest;  // longest repeat of the superstring
  std::size_t repeat_length = 0;
  std::size_t bound = 0;          // 2l - 2
  bool exceeds_bound = false;     // informational for greedy output
  bool contradicts_optimality = false;  // exact output exceeding the bound: a solver bug
};

/// Compares the superstring's longest repeat against 2l - 2: a shortest common
/// superstring of reads of length l never repeats anything longer.
OvercollapseReport diagnose_overcollapse(const ScsResult& result, std::size_t read_length);

std::string to_string(ScsMethod m);
std::string to_string(MergeKind k);

/// Text provenance trace, one step per line: kind, read index, overlap.
std::string format_trace(const ScsResult& result);

}  // namespace asmlab
