#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "asmlab/contig.hpp"
#include "asmlab/dna.hpp"

namespace asmlab {

struct ContigMetrics {
  std::size_t length = 0;
  bool exact_substring = false;  // occurs verbatim in the truth
  double kmer_precision = 0.0;   // fraction of the contig's k-mer occurrences present in the truth
  std::size_t occurrences = 0;   // exact occurrences in the truth
};

struct EvalReport {
  bool has_truth = true;
  int k = 0;
  std::size_t truth_length = 0;
  std::vector<ContigMetrics> contigs;  // parallel to the evaluated ContigSet

  std::size_t contig_count = 0;
  std::size_t total_length = 0;
  std::size_t max_length = 0;
  double mean_length = 0.0;
  std::size_t n50 = 0;
  double genome_fraction = 0.0;       // truth positions inside some exact occurrence
  std::size_t misassembly_count = 0;  // contigs that are not exact substrings

  /// Free-form run description (stage, assembler, seed, rng, ...), emitted
  /// with the report in key order.
  std::map<std::string, std::string> metadata;
};

/// Largest L such that contigs of length >= L hold at least half of the
/// total length; 0 for no contigs or total length 0.
std::size_t n50(std::vector<std::size_t> lengths);

/// Full report against a reference. Every exact occurrence of every contig
/// counts towards genome_fraction (repeats are not penalized). A contig
/// shorter than k has precision 1 when it is an exact substring, else 0.
/// Throws InvalidParameter on an empty truth or k outside [1, 31].
EvalReport evaluate(const ContigSet& contigs, const DnaString& truth, int k);

/// Counts, lengths and N50 only; has_truth = false.
EvalReport evaluate_without_truth(const ContigSet& contigs);

std::string format_table(const EvalReport& report);
/// One "key=value" per line, aggregates first, then metadata as meta.<key>.
std::string format_key_values(const EvalReport& report);
std::string format_json(const EvalReport& report);

}  // namespace asmlab
