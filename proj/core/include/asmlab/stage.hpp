#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "asmlab/config.hpp"
#include "asmlab/contig.hpp"
#include "asmlab/dbg.hpp"
#include "asmlab/eval.hpp"
#include "asmlab/scs.hpp"
#include "asmlab/simulate.hpp"

namespace asmlab {

struct AssemblyOutput {
  ContigSet contigs;
  std::optional<DeBruijnGraph> graph;  // de Bruijn assemblers only
  BuildDiagnostics diagnostics;
  std::optional<ScsResult> scs;        // superstring assemblers only
};

/// unitig: one contig per maximal unitig. cpp-walk: one contig per weakly
/// connected component, spelled by its shortest covering walk (throws
/// NoCoveringWalk naming the component when one has none). scs-*: a single
/// superstring contig.
AssemblyOutput assemble(const ReadSet& reads, int k, Assembler assembler, unsigned threads = 1);

struct StageResult {
  EvalReport report;
  std::optional<DnaString> truth;
  ReadSet reads;  // reads handed to the assembler (after correction)
  ContigSet contigs;
  CorrectionStats correction;
  std::vector<std::filesystem::path> artifacts;
};

/// Runs one evaluation stage.
///
/// Stage 1 takes every window of the genome as a read; stage 2 samples
/// uniformly with the configured errors and gaps and, when
/// correct_min_multiplicity > 0, corrects with the assembly k; stage 3 reads
/// reads_fasta and evaluates against truth_fasta when given, otherwise
/// reports truth-free metrics. Stages 1 and 2 use genome_fasta (first
/// record) or draw a random genome from the seed.
///
/// With artifact_dir set, writes genome.fa (when a truth exists), reads.fa,
/// contigs.fa, graph.dot (de Bruijn assemblers), report.txt, report.kv and
/// report.json there. Throws InvalidParameter for a stage outside 1..3.
StageResult run_stage(int stage, const RunConfig& config);

}  // namespace asmlab
