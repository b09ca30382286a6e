#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "asmlab/contig.hpp"
#include "asmlab/dbg.hpp"
#include "asmlab/dna.hpp"

namespace asmlab {

struct FastaRecord {
  std::string id;           // nonempty, no whitespace
  std::string description;  // may be empty
  DnaString sequence;
  friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

struct FastaReadOptions {
  /// Drop records holding a symbol outside ACGT (after uppercasing) instead
  /// of failing.
  bool drop_ambiguous = false;
};

struct FastaReadStats {
  std::size_t dropped = 0;  // records removed by drop_ambiguous
};

/// FASTA, or FASTQ when the first nonblank line starts with '@' (quality
/// lines are skipped). Symbols are uppercased; blank lines and '\r' are
/// ignored. Throws ParseError carrying the 1-based line for a symbol outside
/// ACGT (N included), an empty sequence, an empty id or malformed FASTQ.
std::vector<FastaRecord> read_fasta(std::istream& in, const FastaReadOptions& options = {},
                                    FastaReadStats* stats = nullptr);
std::vector<FastaRecord> read_fasta_file(const std::filesystem::path& path, const FastaReadOptions& options = {},
                                         FastaReadStats* stats = nullptr);

/// '>' id [' ' description], then the sequence in lines of 60. Throws
/// InvalidParameter on a duplicate or malformed id.
void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records);
void write_fasta_file(const std::filesystem::path& path, const std::vector<FastaRecord>& records);

ReadSet to_read_set(const std::vector<FastaRecord>& records);
/// Records "<prefix><i>" for i = 0, 1, ...
std::vector<FastaRecord> to_records(const ReadSet& reads, const std::string& prefix = "read");
/// Records "contig<i>" described by their provenance and length.
std::vector<FastaRecord> to_records(const ContigSet& contigs);

/// Edge-list fixture: "k=<int>" then one k-mer per line in sorted order.
/// Isolated vertices are not represented.
std::string format_edge_list(const DeBruijnGraph& g);
/// Accepts '#' comments and blank lines; k-mers in any order, duplicates
/// merged. Throws ParseError with the line number on bad input.
DeBruijnGraph read_edge_list(std::istream& in);

/// Whole file as text; throws Error naming the path when unreadable.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace asmlab
