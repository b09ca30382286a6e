#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "asmlab/simulate.hpp"

namespace asmlab {

enum class Assembler { unitig, cpp_walk, scs_greedy, scs_exact };

/// Throws InvalidParameter for an unknown name. Names: unitig, cpp-walk,
/// scs-greedy, scs-exact.
Assembler parse_assembler(const std::string& name);
std::string to_string(Assembler a);

/// Everything a stage run needs.
struct RunConfig {
  SimulationProfile profile;
  std::optional<double> coverage;  // alternative to profile.num_reads
  std::optional<PlantedRepeat> planted;
  int k = 31;
  Assembler assembler = Assembler::unitig;
  std::uint64_t correct_min_multiplicity = 0;  // 0 disables correction
  std::string genome_fasta;  // truth genome; a random one is drawn when empty
  std::string reads_fasta;   // stage 3 input
  std::string truth_fasta;   // stage 3 reference, optional
  std::string artifact_dir;
  bool drop_ambiguous = false;
  unsigned threads = 1;

  /// num_reads for a genome of the given length: ceil(coverage * L / l)
  /// when coverage is set, else profile.num_reads.
  std::size_t reads_for(std::size_t genome_length) const;
};

/// "key = value" lines; '#' starts a comment; blank lines ignored.
///
/// Keys: genome_length, num_reads, coverage, read_length, error_rate, gaps
/// ("start:end,start:end"), seed, k, assembler, correct_min_multiplicity,
/// plant_repeat ("length,copies"), genome_fasta, reads_fasta, truth_fasta,
/// artifact_dir, drop_ambiguous (true/false), threads.
///
/// Throws ParseError naming the key and line for unknown or repeated keys,
/// malformed values and out-of-range values, and when both num_reads and
/// coverage are given.
RunConfig parse_config(const std::string& text);
RunConfig read_config_file(const std::filesystem::path& path);

}  // namespace asmlab
