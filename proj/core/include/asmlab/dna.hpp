#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asmlab {

/// 2-bit code of a nucleotide: A=0, C=1, G=2, T=3. Returns -1 for any other
/// byte. The numeric order of codes matches the lexicographic order of symbols.
constexpr int nucleotide_code(char c) noexcept {
  switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return -1;
  }
}

constexpr char nucleotide_symbol(int code) noexcept { return "ACGT"[code & 3]; }

/// A validated sequence over {A, C, G, T}. The empty string is valid.
///
/// Construction from text checks every byte and throws InvalidParameter on the
/// first symbol outside the alphabet. Lowercase input is rejected here; the
/// FASTA reader uppercases before constructing.
class DnaString {
 public:
  DnaString() = default;
  explicit DnaString(std::string_view text);
  explicit DnaString(std::string&& text);
  DnaString(const char* text) : DnaString(std::string_view(text)) {}

  /// Offset of the first byte outside the alphabet, if any.
  static std::optional<std::size_t> first_invalid(std::string_view text) noexcept;

  std::size_t size() const noexcept { return seq_.size(); }
  bool empty() const noexcept { return seq_.empty(); }
  char operator[](std::size_t i) const noexcept { return seq_[i]; }

  std::string_view view() const noexcept { return seq_; }
  const std::string& str() const noexcept { return seq_; }

  /// Substring [pos, pos + len); clipped at the end like std::string::substr.
  DnaString substr(std::size_t pos, std::size_t len = std::string::npos) const;

  bool contains(std::string_view needle) const noexcept {
    return seq_.find(needle) != std::string::npos;
  }

  friend bool operator==(const DnaString&, const DnaString&) = default;
  friend auto operator<=>(const DnaString& a, const DnaString& b) {
    return a.seq_.compare(b.seq_) <=> 0;
  }

 private:
  struct Trusted {};
  DnaString(Trusted, std::string s) : seq_(std::move(s)) {}

  std::string seq_;
};

/// An ordered collection of reads; duplicates are kept.
class ReadSet {
 public:
  ReadSet() = default;
  explicit ReadSet(std::vector<DnaString> reads,
                   std::optional<std::size_t> declared_read_length = std::nullopt);
  ReadSet(std::initializer_list<DnaString> reads) : ReadSet(std::vector<DnaString>(reads)) {}

  std::size_t size() const noexcept { return reads_.size(); }
  bool empty() const noexcept { return reads_.empty(); }
  const DnaString& operator[](std::size_t i) const noexcept { return reads_[i]; }
  auto begin() const noexcept { return reads_.begin(); }
  auto end() const noexcept { return reads_.end(); }
  const std::vector<DnaString>& reads() const noexcept { return reads_; }

  /// The uniform read length when one was declared (the simulators declare it).
  std::optional<std::size_t> declared_read_length() const noexcept { return declared_; }

  /// Total number of nucleotides over all reads.
  std::size_t total_length() const noexcept;

 private:
  std::vector<DnaString> reads_;
  std::optional<std::size_t> declared_;
};

}  // namespace asmlab
