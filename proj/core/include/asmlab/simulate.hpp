#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asmlab/dna.hpp"

namespace asmlab {

/// Half-open genome interval [start, end) from which no read may be sampled.
struct GapInterval {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const GapInterval&, const GapInterval&) = default;
};

/// Declarative description of one sequencing experiment.
struct SimulationProfile {
  std::size_t genome_length = 10000;  // only used when a random genome is synthesized
  std::size_t num_reads = 1000;
  std::size_t read_length = 100;
  double error_rate = 0.0;  // per-base substitution probability, in [0, 1)
  std::vector<GapInterval> gaps;
  std::uint64_t seed = 1;

  /// Throws InvalidParameter on read_length 0, error_rate outside [0, 1),
  /// or gaps that are empty, overlapping or outside [0, genome_length).
  void validate() const;
};

struct PlantedRepeat {
  std::size_t length = 0;
  std::size_t copies = 2;
};

/// Uniform random genome; with `planted`, one random substring of the given
/// length is copied onto (copies - 1) further non-overlapping positions.
/// Throws InvalidParameter when length * copies exceeds the genome length.
DnaString random_genome(std::size_t length, std::optional<PlantedRepeat> planted, std::uint64_t seed);

/// Every window of length `read_length`, in genome order (duplicates kept).
ReadSet idealized_reads(const DnaString& genome, std::size_t read_length);

/// Reads plus the ground truth of how each was produced.
struct SimulatedReads {
  ReadSet reads;
  std::vector<std::size_t> starts;         // window start of read i
  std::vector<std::size_t> substitutions;  // number of substituted bases in read i
};

/// Uniformly placed reads avoiding the profile's gaps, then independent
/// per-base substitutions to one of the three other symbols. Deterministic in
/// (genome, profile). Throws InvalidParameter when no start position avoids
/// the gaps or the genome is shorter than the read length.
SimulatedReads simulate_uniform(const DnaString& genome, const SimulationProfile& profile);

inline ReadSet uniform_reads(const DnaString& genome, const SimulationProfile& profile) {
  return simulate_uniform(genome, profile).reads;
}

/// Coverage question: with `num_reads` reads of `read_length` placed
/// uniformly on a genome of `genome_length`, is some k-wide window spanned by
/// no read?
struct CoverageQuery {
  std::size_t genome_length = 0;
  std::size_t num_reads = 0;
  std::size_t read_length = 0;
  std::size_t k = 0;
};

struct AnalyticMode {};
struct MonteCarloMode {
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
};
using CoverageMode = std::variant<AnalyticMode, MonteCarloMode>;

struct CoverageEstimate {
  double probability = 0.0;
  double standard_error = 0.0;  // 0 for the analytic mode
  std::size_t trials = 0;
};

/// Analytic mode: union bound (L-k+1) * (1 - (l-k+1)/(L-l+1))^m, clamped to
/// [0, 1]. The per-read spanning rate (l-k+1)/(L-l+1) is exact for interior
/// windows, those at least l-k positions from either genome end.
///
/// Monte Carlo mode: draws m start positions uniformly from [0, L-l] per trial
/// and counts trials in which some interior window is unspanned. Windows
/// nearer the ends are under-sampled by any linear placement and are not part
/// of the event; when the genome has no interior window the estimate is 0.
///
/// Throws InvalidParameter when k is 0 or exceeds the read length, or the
/// genome is shorter than a read.
CoverageEstimate unspanned_probability(const CoverageQuery& query, const CoverageMode& mode);

struct CorrectionStats {
  std::size_t corrected_bases = 0;
  std::size_t corrected_reads = 0;
  std::size_t discarded_reads = 0;
};

struct CorrectionResult {
  ReadSet reads;
  std::vector<std::size_t> source_index;  // input index of each output read
  CorrectionStats stats;
};

/// One-pass k-mer frequency corrector.
///
/// A k-mer is weak when its multiplicity in spectrum_of_set(reads, k) is
/// below `min_multiplicity`. Scanning each read left to right, every base
/// covered by a weak k-mer gets the substitution that maximizes the minimum
/// multiplicity of the k-mers covering it, applied only when that strictly
/// improves on the current base. Reads that still hold a weak k-mer are
/// dropped. Reads shorter than k have no k-mers and are kept unchanged.
CorrectionResult correct_reads_detailed(const ReadSet& reads, int k, std::uint64_t min_multiplicity);

inline ReadSet correct_reads(const ReadSet& reads, int k, std::uint64_t min_multiplicity) {
  return correct_reads_detailed(reads, k, min_multiplicity).reads;
}

}  // namespace asmlab
