#include "asmlab/strings.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace asmlab {

bool is_common_superstring(const DnaString& g, const ReadSet& reads) {
  return std::all_of(reads.begin(), reads.end(),
                     [&](const DnaString& r) { return g.contains(r.view()); });
}

SubsetCheck spectrum_subset_check(const DnaString& g, const ReadSet& reads, int k) {
  check_k(k);
  const KmerSpectrum have = spectrum_of_set(reads, k);
  SubsetCheck result;
  for_each_kmer(g.view(), k, [&](std::size_t pos, Kmer x) {
    if (result.holds && !have.contains(x)) {
      result.holds = false;
      result.witness = KmerWitness{x.dna(), pos};
    }
  });
  return result;
}

namespace {

// Prefix-doubling suffix array; fine for the string sizes handled here.
std::vector<std::size_t> suffix_array(std::string_view s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> sa(n), rank(n), tmp(n);
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(s[i]);
  for (std::size_t gap = 1;; gap <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair<std::size_t, std::size_t>(rank[i], i + gap < n ? rank[i + gap] + 1 : 0);
    };
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    if (n == 0) break;
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    rank = tmp;
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

// Kasai: lcp[i] = LCP(suffix sa[i-1], suffix sa[i]), lcp[0] = 0.
std::vector<std::size_t> lcp_array(std::string_view s, const std::vector<std::size_t>& sa) {
  const std::size_t n = s.size();
  std::vector<std::size_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = i;
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace

std::optional<Repeat> longest_repeat(const DnaString& g) {
  const std::string_view s = g.view();
  if (s.size() < 2) return std::nullopt;
  const auto sa = suffix_array(s);
  const auto lcp = lcp_array(s, sa);
  std::size_t best = 0, at = 0;
  for (std::size_t i = 1; i < lcp.size(); ++i) {
    if (lcp[i] > best) {
      best = lcp[i];
      at = i;
    }
  }
  if (best == 0) return std::nullopt;
  // The occurrences of the chosen repeat form the SA block around `at` whose
  // adjacent LCPs are all >= best.
  std::size_t lo = at - 1, hi = at;
  while (lo > 0 && lcp[lo] >= best) --lo;
  while (hi + 1 < lcp.size() && lcp[hi + 1] >= best) ++hi;
  std::vector<std::size_t> starts(sa.begin() + static_cast<std::ptrdiff_t>(lo),
                                  sa.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  std::partial_sort(starts.begin(), starts.begin() + 2, starts.end());
  return Repeat{best, starts[0], starts[1]};
}

std::size_t max_overlap(std::string_view a, std::string_view b) {
  const std::size_t cap = std::min(a.size(), b.size());
  if (cap == 0) return 0;
  // Prefix function of b over the tail of a: the border reached after the last
  // symbol of a is the overlap.
  const std::string_view pat = b.substr(0, cap);
  std::vector<std::size_t> fail(pat.size(), 0);
  for (std::size_t i = 1, q = 0; i < pat.size(); ++i) {
    while (q > 0 && pat[i] != pat[q]) q = fail[q - 1];
    if (pat[i] == pat[q]) ++q;
    fail[i] = q;
  }
  std::size_t q = 0;
  for (char c : a.substr(a.size() - cap)) {
    while (q > 0 && (q == pat.size() || c != pat[q])) q = fail[q - 1];
    if (c == pat[q]) ++q;
  }
  return q;
}

}  // namespace asmlab
