#include "asmlab/scs.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "asmlab/error.hpp"

namespace asmlab {

std::string to_string(ScsMethod m) { return m == ScsMethod::greedy ? "greedy" : "exact"; }

std::string to_string(MergeKind k) {
  switch (k) {
    case MergeKind::start: return "start";
    case MergeKind::right: return "right";
    case MergeKind::left: return "left";
    case MergeKind::absorbed: return "absorbed";
  }
  return "?";
}

DnaString replay_merges(const ReadSet& reads, const std::vector<MergeStep>& steps) {
  std::string cur;
  bool started = false;
  for (const auto& s : steps) {
    if (s.read >= reads.size()) throw InvalidParameter("merge step names unknown read " + std::to_string(s.read));
    const std::string_view r = reads[s.read].view();
    switch (s.kind) {
      case MergeKind::start:
        if (started) throw InvalidParameter("merge trace has two start steps");
        cur = std::string(r);
        started = true;
        break;
      case MergeKind::right:
        if (s.overlap > r.size() || s.overlap > cur.size() ||
            cur.compare(cur.size() - s.overlap, s.overlap, r.substr(0, s.overlap)) != 0) {
          throw InvalidParameter("inconsistent right merge of read " + std::to_string(s.read));
        }
        cur.append(r.substr(s.overlap));
        break;
      case MergeKind::left:
        if (s.overlap > r.size() || s.overlap > cur.size() ||
            cur.compare(0, s.overlap, r.substr(r.size() - s.overlap)) != 0) {
          throw InvalidParameter("inconsistent left merge of read " + std::to_string(s.read));
        }
        cur.insert(0, r.substr(0, r.size() - s.overlap));
        break;
      case MergeKind::absorbed:
        if (cur.find(r) == std::string::npos) {
          throw InvalidParameter("absorbed read " + std::to_string(s.read) + " is not contained");
        }
        break;
    }
  }
  return DnaString(std::move(cur));
}

ScsResult greedy_scs(const ReadSet& reads) {
  if (reads.empty()) throw InvalidParameter("greedy_scs needs at least one read");
  const std::size_t n = reads.size();
  std::size_t longest = 0;
  for (const auto& r : reads) longest = std::max(longest, r.size());

  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (reads[i] < reads[first]) first = i;
  }

  ScsResult result;
  result.method = ScsMethod::greedy;
  result.merge_order.push_back({first, MergeKind::start, 0});
  std::string cur = reads[first].str();
  std::vector<char> used(n, 0);
  used[first] = 1;
  std::size_t remaining = n - 1;

  // Absorbs unused reads occurring in cur[from, to).
  auto absorb = [&](std::size_t from, std::size_t to) {
    const std::string_view region = std::string_view(cur).substr(from, to - from);
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && region.find(reads[i].view()) != std::string_view::npos) {
        used[i] = 1;
        --remaining;
        result.merge_order.push_back({i, MergeKind::absorbed, 0});
      }
    }
  };
  absorb(0, cur.size());

  while (remaining > 0) {
    std::size_t best = n, best_ov = 0;
    bool best_right = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const std::string_view r = reads[i].view();
      const std::size_t right = max_overlap(cur, r);
      const std::size_t left = max_overlap(r, cur);
      const bool take_right = right >= left;
      const std::size_t ov = take_right ? right : left;
      const bool better = best == n || ov > best_ov ||
                          (ov == best_ov && reads[i] < reads[best]);
      if (better) {
        best = i;
        best_ov = ov;
        best_right = take_right;
      }
    }
    const std::string_view r = reads[best].view();
    used[best] = 1;
    --remaining;
    std::size_t from = 0, to = 0;
    if (best_right) {
      const std::size_t old = cur.size();
      cur.append(r.substr(best_ov));
      from = old >= best_ov + longest ? old - best_ov - longest : 0;
      to = cur.size();
      result.merge_order.push_back({best, MergeKind::right, best_ov});
    } else {
      const std::size_t added = r.size() - best_ov;
      cur.insert(0, r.substr(0, added));
      from = 0;
      to = std::min(cur.size(), added + best_ov + longest);
      result.merge_order.push_back({best, MergeKind::left, best_ov});
    }
    absorb(from, to);
  }
  result.superstring = DnaString(std::move(cur));
  return result;
}

ScsResult exact_scs(const ReadSet& reads, const ExactScsOptions& options) {
  if (reads.empty()) throw InvalidParameter("exact_scs needs at least one read");
  constexpr std::size_t kHardCap = 16;
  const std::size_t cap = std::min(options.max_reads, kHardCap);

  // Keep the first copy of each read that is not contained in another read.
  std::vector<std::size_t> keep;
  std::vector<std::size_t> dropped;
  for (std::size_t i = 0; i < reads.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < reads.size() && !redundant; ++j) {
      if (i == j) continue;
      if (reads[j] == reads[i]) {
        redundant = j < i;
      } else if (reads[j].size() > reads[i].size() && reads[j].contains(reads[i].view())) {
        redundant = true;
      }
    }
    (redundant ? dropped : keep).push_back(i);
  }
  if (keep.size() > cap) {
    throw ResourceLimit("exact_scs handles at most " + std::to_string(cap) +
                        " non-redundant reads, got " + std::to_string(keep.size()));
  }

  const std::size_t n = keep.size();
  std::vector<std::string_view> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = reads[keep[i]].view();
  std::vector<std::vector<std::size_t>> ov(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) ov[i][j] = max_overlap(r[i], r[j]);

  // cost[mask][last]: shortest extension that appends every read outside
  // `mask`, given the merge so far ends with read `last`.
  const std::size_t full = (std::size_t{1} << n) - 1;
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;
  std::vector<std::size_t> cost((full + 1) * n, kInf);
  auto at = [n](std::size_t mask, std::size_t last) { return mask * n + last; };
  for (std::size_t last = 0; last < n; ++last) cost[at(full, last)] = 0;
  for (std::size_t mask = full; mask-- > 0;) {
    for (std::size_t last = 0; last < n; ++last) {
      if (!(mask >> last & 1)) continue;
      std::size_t best = kInf;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask >> j & 1) continue;
        best = std::min(best, r[j].size() - ov[last][j] + cost[at(mask | (std::size_t{1} << j), j)]);
      }
      cost[at(mask, last)] = best;
    }
  }

  // Lexicographically smallest optimal completion, memoized on the states
  // that lie on optimal paths. Every optimal completion of a state has the
  // same length, so plain string comparison orders them.
  struct Choice {
    bool done = false;
    std::size_t next = 0;
    std::string tail;
  };
  std::vector<Choice> memo((full + 1) * n);
  auto completion = [&](auto&& self, std::size_t mask, std::size_t last) -> const Choice& {
    Choice& c = memo[at(mask, last)];
    if (c.done) return c;
    c.done = true;
    if (mask == full) return c;
    bool found = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) continue;
      const std::size_t nm = mask | (std::size_t{1} << j);
      if (r[j].size() - ov[last][j] + cost[at(nm, j)] != cost[at(mask, last)]) continue;
      std::string cand(r[j].substr(ov[last][j]));
      cand += self(self, nm, j).tail;
      if (!found || cand < c.tail) {
        c.tail = std::move(cand);
        c.next = j;
        found = true;
      }
    }
    return c;
  };

  std::size_t best_len = kInf;
  for (std::size_t i = 0; i < n; ++i) best_len = std::min(best_len, r[i].size() + cost[at(std::size_t{1} << i, i)]);
  std::string best;
  std::size_t best_first = n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = std::size_t{1} << i;
    if (r[i].size() + cost[at(m, i)] != best_len) continue;
    std::string cand(r[i]);
    cand += completion(completion, m, i).tail;
    if (best_first == n || cand < best) {
      best = std::move(cand);
      best_first = i;
    }
  }

  ScsResult result;
  result.method = ScsMethod::exact;
  result.merge_order.push_back({keep[best_first], MergeKind::start, 0});
  std::size_t mask = std::size_t{1} << best_first, last = best_first;
  while (mask != full) {
    const std::size_t j = memo[at(mask, last)].next;
    result.merge_order.push_back({keep[j], MergeKind::right, ov[last][j]});
    mask |= std::size_t{1} << j;
    last = j;
  }
  for (std::size_t d : dropped) result.merge_order.push_back({d, MergeKind::absorbed, 0});
  result.superstring = DnaString(std::move(best));
  return result;
}

OvercollapseReport diagnose_overcollapse(const ScsResult& result, std::size_t read_length) {
  OvercollapseReport rep;
  rep.longest = longest_repeat(result.superstring);
  rep.repeat_length = rep.longest ? rep.longest->length : 0;
  rep.bound = read_length >= 1 ? 2 * read_length - 2 : 0;
  rep.exceeds_bound = rep.repeat_length > rep.bound;
  // A lone read is its own shortest superstring whatever its repeats.
  const auto merged = std::count_if(result.merge_order.begin(), result.merge_order.end(),
                                    [](const MergeStep& s) { return s.kind != MergeKind::absorbed; });
  rep.contradicts_optimality = rep.exceeds_bound && result.method == ScsMethod::exact && merged > 1;
  return rep;
}

std::string format_trace(const ScsResult& result) {
  std::ostringstream os;
  os << "# method=" << to_string(result.method) << " length=" << result.superstring.size() << '\n';
  for (const auto& s : result.merge_order) {
    os << to_string(s.kind) << '\t' << s.read << '\t' << s.overlap << '\n';
  }
  return os.str();
}

}  // namespace asmlab
