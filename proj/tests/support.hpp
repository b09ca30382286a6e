#pragma once

// Fixtures and brute-force oracles shared by the unit and acceptance tests.
// Nothing here calls into the library's algorithms; each oracle is the
// slowest obvious implementation of its definition.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

namespace asmlab::testing {

inline const std::string g_true = "AATTCCAGCTGATTCCAGT";
inline const std::string g_scs = "AATTCCAGCTGATAGT";
inline const std::string g_sol = "AATTCCAGCTGATGAGT";

inline std::vector<std::string> windows(const std::string& s, std::size_t len) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + len <= s.size(); ++i) out.push_back(s.substr(i, len));
  return out;
}

inline std::map<std::string, std::uint64_t> kmer_counts(const std::string& s, std::size_t k) {
  std::map<std::string, std::uint64_t> m;
  for (auto& w : windows(s, k)) ++m[w];
  return m;
}

inline std::string random_dna(std::mt19937_64& rng, std::size_t len) {
  std::string s(len, 'A');
  for (auto& c : s) c = "ACGT"[rng() % 4];
  return s;
}

// Longest length of a substring occurring at two distinct offsets.
inline std::size_t brute_longest_repeat(const std::string& s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      std::size_t l = 0;
      while (j + l < s.size() && s[i + l] == s[j + l]) ++l;
      best = std::max(best, l);
    }
  }
  return best;
}

inline std::size_t brute_overlap(const std::string& a, const std::string& b) {
  for (std::size_t l = std::min(a.size(), b.size()); l > 0; --l) {
    if (a.compare(a.size() - l, l, b, 0, l) == 0) return l;
  }
  return 0;
}

// Shortest superstring over all read orders with maximal-overlap merging,
// lexicographically smallest among ties. Exhaustive; keep inputs tiny.
inline std::string brute_scs(std::vector<std::string> reads) {
  std::sort(reads.begin(), reads.end());
  reads.erase(std::unique(reads.begin(), reads.end()), reads.end());
  std::vector<std::string> kept;
  for (const auto& r : reads) {
    bool inside = false;
    for (const auto& o : reads) inside |= o != r && o.find(r) != std::string::npos;
    if (!inside) kept.push_back(r);
  }
  // Every remaining read adds at least one symbol, which bounds the search.
  std::string best;
  bool have = false;
  std::vector<bool> used(kept.size(), false);
  auto extend = [&](auto&& self, const std::string& s, std::size_t depth) -> void {
    if (have && s.size() + (kept.size() - depth) > best.size()) return;
    if (depth == kept.size()) {
      if (!have || s.size() < best.size() || s < best) best = s, have = true;
      return;
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      self(self, depth == 0 ? kept[i] : s + kept[i].substr(brute_overlap(s, kept[i])), depth + 1);
      used[i] = false;
    }
  };
  extend(extend, std::string(), 0);
  return best;
}

// Fraction of truth positions inside some exact occurrence of some contig.
inline double marked_fraction(const std::vector<std::string>& contigs, const std::string& truth) {
  std::vector<bool> mark(truth.size(), false);
  for (const auto& c : contigs) {
    if (c.empty()) continue;
    for (std::size_t i = 0; i + c.size() <= truth.size(); ++i) {
      if (truth.compare(i, c.size(), c) == 0) {
        for (std::size_t j = i; j < i + c.size(); ++j) mark[j] = true;
      }
    }
  }
  return truth.empty() ? 0.0 : static_cast<double>(std::count(mark.begin(), mark.end(), true)) / truth.size();
}

inline std::size_t scan_n50(std::vector<std::size_t> lengths) {
  std::sort(lengths.rbegin(), lengths.rend());
  const std::size_t total = std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
  if (total == 0) return 0;
  std::size_t run = 0;
  for (auto l : lengths) {
    run += l;
    if (2 * run >= total) return l;
  }
  return 0;
}

// Small edge-labelled digraph described by its k-mer strings, independent of
// the library types. Vertices are (k-1)-mers.
struct TinyGraph {
  std::vector<std::string> edges;  // sorted distinct k-mers
  std::string from(std::size_t e) const { return edges[e].substr(0, edges[e].size() - 1); }
  std::string to(std::size_t e) const { return edges[e].substr(1); }
};

inline TinyGraph tiny_graph(const std::vector<std::string>& reads, std::size_t k) {
  std::set<std::string> s;
  for (const auto& r : reads) {
    for (auto& w : windows(r, k)) s.insert(w);
  }
  return TinyGraph{{s.begin(), s.end()}};
}

// Enumerates every edge-covering walk of at most `max_len` edges (depth-first
// over raw edge sequences) and hands each to `visit`. Walks are
// edge-index sequences. Use on graphs of a handful of edges only.
inline void enumerate_covering_walks(const TinyGraph& g, std::size_t max_len,
                                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const std::size_t m = g.edges.size();
  std::vector<std::size_t> walk;
  std::vector<std::size_t> used(m, 0);
  std::size_t covered = 0;
  std::function<void()> rec = [&] {
    if (covered == m) visit(walk);
    if (walk.size() == max_len) return;
    // a walk needs at least (m - covered) more steps to finish
    if (walk.size() + (m - covered) > max_len) return;
    for (std::size_t e = 0; e < m; ++e) {
      if (!walk.empty() && g.to(walk.back()) != g.from(e)) continue;
      walk.push_back(e);
      if (used[e]++ == 0) ++covered;
      rec();
      if (--used[e] == 0) --covered;
      walk.pop_back();
    }
  };
  rec();
}

struct BruteOptimum {
  std::size_t length = 0;
  std::size_t count = 0;
};

// Shortest covering-walk length and the number of distinct shortest walks,
// found by trying lengths m, m+1, ... up to `max_len`.
inline BruteOptimum brute_shortest_covering(const TinyGraph& g, std::size_t max_len) {
  for (std::size_t len = g.edges.size(); len <= max_len; ++len) {
    std::size_t count = 0;
    enumerate_covering_walks(g, len, [&](const std::vector<std::size_t>& w) { count += w.size() == len; });
    if (count > 0) return {len, count};
  }
  return {0, 0};
}

inline std::string tiny_spell(const TinyGraph& g, const std::vector<std::size_t>& walk) {
  std::string s = g.edges[walk.front()];
  for (std::size_t i = 1; i < walk.size(); ++i) s += g.edges[walk[i]].back();
  return s;
}

inline std::filesystem::path scratch_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  auto dir = std::filesystem::temp_directory_path() /
             ("asmlab_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace asmlab::testing
