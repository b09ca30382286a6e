#include "asmlab/kmer.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "asmlab/error.hpp"

namespace asmlab {

std::strong_ordering operator<=>(const Kmer& a, const Kmer& b) noexcept {
  if (a.k_ == b.k_) return a.packed_ <=> b.packed_;
  const int common = std::min(a.k_, b.k_);
  const std::uint64_t pa = a.packed_ >> (2 * (a.k_ - common));
  const std::uint64_t pb = b.packed_ >> (2 * (b.k_ - common));
  if (pa != pb) return pa <=> pb;
  return a.k_ <=> b.k_;
}

void check_k(int k) {
  if (k < 1 || k > kMaxK) {
    throw InvalidParameter("k must be in [1, " + std::to_string(kMaxK) + "], got " +
                           std::to_string(k));
  }
}

Kmer Kmer::from_string(std::string_view text) {
  check_k(static_cast<int>(text.size()));
  std::uint64_t packed = 0;
  for (char c : text) {
    const int code = nucleotide_code(c);
    if (code < 0) throw InvalidParameter("invalid nucleotide '" + std::string(1, c) + "' in k-mer");
    packed = (packed << 2) | static_cast<std::uint64_t>(code);
  }
  return Kmer(packed, static_cast<int>(text.size()));
}

std::string Kmer::str() const {
  std::string out(k_, 'A');
  std::uint64_t p = packed_;
  for (int i = k_ - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = nucleotide_symbol(static_cast<int>(p & 3));
    p >>= 2;
  }
  return out;
}

void for_each_kmer(std::string_view text, int k,
                   const std::function<void(std::size_t, Kmer)>& fn) {
  check_k(k);
  const std::size_t uk = static_cast<std::size_t>(k);
  if (text.size() < uk) return;
  const std::uint64_t m = Kmer::mask(k);
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    packed = ((packed << 2) | static_cast<std::uint64_t>(nucleotide_code(text[i]))) & m;
    if (i + 1 >= uk) fn(i + 1 - uk, Kmer(packed, k));
  }
}

std::vector<Kmer> kmers_of(std::string_view text, int k) {
  std::vector<Kmer> out;
  if (text.size() >= static_cast<std::size_t>(k)) out.reserve(text.size() - static_cast<std::size_t>(k) + 1);
  for_each_kmer(text, k, [&](std::size_t, Kmer x) { out.push_back(x); });
  return out;
}

KmerSpectrum::KmerSpectrum(int k, std::vector<Entry> entries) : k_(k), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (out > 0 && entries_[out - 1].first == entries_[i].first) {
      entries_[out - 1].second += entries_[i].second;
    } else {
      entries_[out++] = entries_[i];
    }
  }
  entries_.resize(out);
}

std::uint64_t KmerSpectrum::total() const noexcept {
  std::uint64_t t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

std::uint64_t KmerSpectrum::multiplicity(Kmer x) const noexcept {
  if (x.k() != k_) return 0;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const Entry& e, const Kmer& v) { return e.first < v; });
  return (it != entries_.end() && it->first == x) ? it->second : 0;
}

std::vector<Kmer> KmerSpectrum::members() const {
  std::vector<Kmer> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

bool KmerSpectrum::set_equals(const KmerSpectrum& other) const noexcept {
  if (k_ != other.k_ || entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first != other.entries_[i].first) return false;
  }
  return true;
}

bool KmerSpectrum::set_subset_of(const KmerSpectrum& other) const noexcept {
  if (empty()) return true;
  if (k_ != other.k_) return false;
  std::size_t j = 0;
  for (const auto& e : entries_) {
    while (j < other.entries_.size() && other.entries_[j].first < e.first) ++j;
    if (j == other.entries_.size() || other.entries_[j].first != e.first) return false;
  }
  return true;
}

namespace {

using CountMap = std::unordered_map<std::uint64_t, std::uint64_t>;

void count_reads(const ReadSet& reads, int k, std::size_t begin, std::size_t end, CountMap& counts) {
  for (std::size_t i = begin; i < end; ++i) {
    for_each_kmer(reads[i].view(), k, [&](std::size_t, Kmer x) { ++counts[x.packed()]; });
  }
}

KmerSpectrum from_counts(int k, const CountMap& counts) {
  std::vector<KmerSpectrum::Entry> entries;
  entries.reserve(counts.size());
  for (const auto& [packed, n] : counts) entries.emplace_back(Kmer(packed, k), n);
  return KmerSpectrum(k, std::move(entries));
}

}  // namespace

KmerSpectrum spectrum(const DnaString& s, int k) {
  check_k(k);
  std::vector<KmerSpectrum::Entry> entries;
  for_each_kmer(s.view(), k, [&](std::size_t, Kmer x) { entries.emplace_back(x, 1); });
  return KmerSpectrum(k, std::move(entries));
}

KmerSpectrum spectrum_of_set(const ReadSet& reads, int k, unsigned threads) {
  check_k(k);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reads.size())));
  if (threads <= 1) {
    CountMap counts;
    count_reads(reads, k, 0, reads.size(), counts);
    return from_counts(k, counts);
  }
  std::vector<CountMap> partial(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (reads.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t b = std::min(reads.size(), t * chunk);
    const std::size_t e = std::min(reads.size(), b + chunk);
    workers.emplace_back([&, t, b, e] { count_reads(reads, k, b, e, partial[t]); });
  }
  for (auto& w : workers) w.join();
  for (unsigned t = 1; t < threads; ++t) {
    for (const auto& [packed, n] : partial[t]) partial[0][packed] += n;
  }
  return from_counts(k, partial[0]);
}

}  // namespace asmlab
