#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asmlab/dna.hpp"

namespace asmlab {

inline constexpr int kMaxK = 31;

/// A k-mer (1 <= k <= 31) packed two bits per symbol, first symbol in the
/// most significant position. For equal k the packed value orders k-mers
/// lexicographically.
class Kmer {
 public:
  Kmer() = default;
  Kmer(std::uint64_t packed, int k) noexcept : packed_(packed), k_(static_cast<std::uint8_t>(k)) {}

  /// Throws InvalidParameter if |text| is not in [1, 31] or holds a non-ACGT byte.
  static Kmer from_string(std::string_view text);

  std::uint64_t packed() const noexcept { return packed_; }
  int k() const noexcept { return k_; }

  std::string str() const;
  DnaString dna() const { return DnaString(str()); }

  char symbol(int i) const noexcept {
    return nucleotide_symbol(static_cast<int>(packed_ >> (2 * (k_ - 1 - i))));
  }
  char first() const noexcept { return symbol(0); }
  char last() const noexcept { return nucleotide_symbol(static_cast<int>(packed_)); }

  /// Leading (k-1)-mer. Requires k >= 2.
  Kmer prefix() const noexcept { return Kmer(packed_ >> 2, k_ - 1); }
  /// Trailing (k-1)-mer. Requires k >= 2.
  Kmer suffix() const noexcept { return Kmer(packed_ & mask(k_ - 1), k_ - 1); }
  /// Drop the first symbol and append `c` (a valid nucleotide).
  Kmer shifted(char c) const noexcept {
    return Kmer(((packed_ << 2) | static_cast<std::uint64_t>(nucleotide_code(c))) & mask(k_), k_);
  }
  /// Append `c`, producing a (k+1)-mer.
  Kmer extended(char c) const noexcept {
    return Kmer((packed_ << 2) | static_cast<std::uint64_t>(nucleotide_code(c)), k_ + 1);
  }

  static constexpr std::uint64_t mask(int k) noexcept {
    return k >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * k)) - 1;
  }

  friend bool operator==(const Kmer&, const Kmer&) = default;
  /// Lexicographic on symbols; across different k a shorter prefix sorts first.
  friend std::strong_ordering operator<=>(const Kmer& a, const Kmer& b) noexcept;

 private:
  std::uint64_t packed_ = 0;
  std::uint8_t k_ = 0;
};

struct KmerHash {
  std::size_t operator()(const Kmer& x) const noexcept {
    std::uint64_t h = x.packed() * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(x.k());
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

/// Throws InvalidParameter unless 1 <= k <= 31.
void check_k(int k);

/// Calls `fn(offset, kmer)` for every k-long window of `text`, left to right.
/// `text` must be over ACGT; nothing is called when |text| < k.
void for_each_kmer(std::string_view text, int k,
                   const std::function<void(std::size_t, Kmer)>& fn);

/// The k-mers of `text` in order of occurrence (with repeats).
std::vector<Kmer> kmers_of(std::string_view text, int k);

/// Distinct k-mers of a string or read collection, each with the total number
/// of occurrences. Iteration is in lexicographic order. The set-level
/// operations use only the set view (`contains`, `set_equals`); the counts
/// feed the read corrector.
class KmerSpectrum {
 public:
  using Entry = std::pair<Kmer, std::uint64_t>;

  explicit KmerSpectrum(int k = 1) : k_(k) {}
  /// `entries` need not be sorted or unique; counts of repeated k-mers add up.
  KmerSpectrum(int k, std::vector<Entry> entries);

  int k() const noexcept { return k_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// Sum of multiplicities.
  std::uint64_t total() const noexcept;

  bool contains(Kmer x) const noexcept { return multiplicity(x) > 0; }
  std::uint64_t multiplicity(Kmer x) const noexcept;

  std::span<const Entry> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::vector<Kmer> members() const;

  /// Equality of the distinct-member sets, ignoring multiplicity.
  bool set_equals(const KmerSpectrum& other) const noexcept;
  bool set_subset_of(const KmerSpectrum& other) const noexcept;

 private:
  int k_;
  std::vector<Entry> entries_;
};

/// sp^k(s) with occurrence counts. Throws InvalidParameter unless 1 <= k <= 31.
KmerSpectrum spectrum(const DnaString& s, int k);

/// Union of per-read spectra; multiplicities sum across reads. `threads` > 1
/// splits counting across worker threads; the result does not depend on it.
KmerSpectrum spectrum_of_set(const ReadSet& reads, int k, unsigned threads = 1);

}  // namespace asmlab
