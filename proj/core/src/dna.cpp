#include "asmlab/dna.hpp"

#include <numeric>

#include "asmlab/error.hpp"

namespace asmlab {

namespace {

[[noreturn]] void throw_invalid_symbol(std::string_view text, std::size_t pos) {
  throw InvalidParameter("invalid nucleotide '" + std::string(1, text[pos]) +
                         "' at offset " + std::to_string(pos));
}

}  // namespace

std::optional<std::size_t> DnaString::first_invalid(std::string_view text) noexcept {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (nucleotide_code(text[i]) < 0) return i;
  }
  return std::nullopt;
}

DnaString::DnaString(std::string_view text) : seq_(text) {
  if (auto bad = first_invalid(seq_)) throw_invalid_symbol(seq_, *bad);
}

DnaString::DnaString(std::string&& text) : seq_(std::move(text)) {
  if (auto bad = first_invalid(seq_)) throw_invalid_symbol(seq_, *bad);
}

DnaString DnaString::substr(std::size_t pos, std::size_t len) const {
  return DnaString(Trusted{}, seq_.substr(pos, len));
}

ReadSet::ReadSet(std::vector<DnaString> reads, std::optional<std::size_t> declared_read_length)
    : reads_(std::move(reads)), declared_(declared_read_length) {
  if (declared_) {
    for (std::size_t i = 0; i < reads_.size(); ++i) {
      if (reads_[i].size() != *declared_) {
        throw InvalidParameter("read " + std::to_string(i) + " has length " +
                               std::to_string(reads_[i].size()) + ", declared read length is " +
                               std::to_string(*declared_));
      }
    }
  }
}

std::size_t ReadSet::total_length() const noexcept {
  return std::accumulate(reads_.begin(), reads_.end(), std::size_t{0},
                         [](std::size_t acc, const DnaString& r) { return acc + r.size(); });
}

}  // namespace asmlab
