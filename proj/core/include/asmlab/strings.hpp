#pragma once

#include <cstddef>
#include <optional>

#include "asmlab/dna.hpp"
#include "asmlab/kmer.hpp"

namespace asmlab {

/// True iff every read occurs contiguously in `g`.
bool is_common_superstring(const DnaString& g, const ReadSet& reads);

/// A k-mer of a candidate string that is absent from the reads.
struct KmerWitness {
  DnaString kmer;
  std::size_t position = 0;  // 0-based offset in the checked string
};

struct SubsetCheck {
  bool holds = true;
  std::optional<KmerWitness> witness;  // the leftmost offending k-mer when !holds

  explicit operator bool() const noexcept { return holds; }
};

/// Checks sp^k(g) ⊆ sp^k(reads). Throws InvalidParameter unless 1 <= k <= 31.
SubsetCheck spectrum_subset_check(const DnaString& g, const ReadSet& reads, int k);

/// A string occurring at two distinct offsets (occurrences may overlap).
struct Repeat {
  std::size_t length = 0;
  std::size_t first = 0;   // smallest occurrence offset
  std::size_t second = 0;  // next smallest occurrence offset
};

/// A longest repeat of `g`, or nullopt when no symbol occurs twice.
///
/// Among repeats of maximal length the lexicographically smallest is
/// reported, at its two leftmost occurrences. Runs in O(n log n) using a
/// suffix array and LCP array.
std::optional<Repeat> longest_repeat(const DnaString& g);

/// Length of the longest suffix of `a` that equals a prefix of `b`, up to
/// min(|a|, |b|) (a full overlap counts).
std::size_t max_overlap(std::string_view a, std::string_view b);
inline std::size_t max_overlap(const DnaString& a, const DnaString& b) {
  return max_overlap(a.view(), b.view());
}

}  // namespace asmlab
