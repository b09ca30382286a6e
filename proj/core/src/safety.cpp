#include "asmlab/safety.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "asmlab/covering.hpp"
#include "asmlab/error.hpp"

namespace asmlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::safe: return "safe";
    case Verdict::unsafe: return "unsafe";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

SafetyPreconditions check_safety_preconditions(const Digraph& g) {
  SafetyPreconditions r;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.isolated(v)) continue;
    if (g.in_degree(v) == 0) r.sources.push_back(v);
    if (g.out_degree(v) == 0) r.sinks.push_back(v);
  }
  const auto cw = covering_walk_exists(g);
  r.covering_walk = cw.exists && g.num_edges() > 0;
  std::string why;
  auto add = [&](const std::string& s) { why += (why.empty() ? "" : "; ") + s; };
  if (g.num_edges() == 0) add("graph has no edges");
  if (!r.has_source()) add("no source vertex");
  if (!r.has_sink()) add("no sink vertex");
  if (!cw.exists) add(cw.diagnosis);
  r.diagnosis = why;
  return r;
}

namespace {

struct StateKey {
  std::uint64_t mask;
  std::uint32_t v;
  std::uint32_t j;
  bool operator==(const StateKey&) const = default;
};

struct StateHash {
  std::size_t operator()(const StateKey& s) const noexcept {
    std::uint64_t h = s.mask * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::uint64_t>(s.v) << 32 | s.j) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace

SafetyResult is_safe_bounded(const Digraph& g, std::span<const VertexId> candidate, std::size_t bound,
                             const SafetyOptions& options) {
  if (bound < g.num_edges()) {
    throw InvalidParameter("safety bound " + std::to_string(bound) + " is below the edge count " +
                           std::to_string(g.num_edges()));
  }
  if (candidate.empty()) throw InvalidParameter("candidate path is empty");
  walk_of_path(g, candidate);  // validates

  SafetyResult res;
  const auto comp = vertex_components(g);
  const std::size_t c = comp[candidate.front()];
  std::vector<int> bit(g.num_edges(), -1);
  int nbits = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (comp[g.tail(e)] == c) bit[e] = nbits++;
  }
  if (nbits == 0) {
    res.verdict = Verdict::safe;
    res.note = "isolated vertex";
    return res;
  }
  if (static_cast<std::size_t>(nbits) > std::min<std::size_t>(options.max_component_edges, 64)) {
    res.note = "component has " + std::to_string(nbits) + " edges, above the search cap";
    return res;
  }
  const std::uint64_t full = nbits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nbits) - 1;

  // Prefix function over the candidate's vertex sequence.
  const std::size_t m = candidate.size();
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, q = 0; i < m; ++i) {
    while (q > 0 && candidate[i] != candidate[q]) q = fail[q - 1];
    if (candidate[i] == candidate[q]) ++q;
    fail[i] = q;
  }
  auto step = [&](std::uint32_t j, VertexId v) -> std::uint32_t {
    while (j > 0 && candidate[j] != v) j = static_cast<std::uint32_t>(fail[j - 1]);
    return candidate[j] == v ? j + 1 : j;
  };

  struct Node {
    StateKey key;
    std::uint32_t parent;
    EdgeId edge;
    std::uint32_t depth;
  };
  std::vector<Node> nodes;
  std::unordered_map<StateKey, std::uint32_t, StateHash> seen;
  constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (comp[v] != c || g.isolated(v)) continue;
    const std::uint32_t j = step(0, v);
    if (j == m) continue;
    const StateKey key{0, v, j};
    seen.emplace(key, static_cast<std::uint32_t>(nodes.size()));
    nodes.push_back({key, kRoot, 0, 0});
  }

  std::optional<std::uint32_t> found;
  for (std::size_t qi = 0; qi < nodes.size() && !found; ++qi) {
    const Node cur = nodes[qi];
    for (EdgeId e : g.out_edges(cur.key.v)) {
      const VertexId w = g.head(e);
      const std::uint32_t j = step(cur.key.j, w);
      if (j == m) continue;
      const StateKey key{cur.key.mask | (std::uint64_t{1} << bit[e]), w, j};
      if (seen.count(key)) continue;
      if (nodes.size() >= options.max_states) {
        res.states = nodes.size();
        res.note = "state space exceeds " + std::to_string(options.max_states) + " states";
        return res;
      }
      seen.emplace(key, static_cast<std::uint32_t>(nodes.size()));
      nodes.push_back({key, static_cast<std::uint32_t>(qi), e, cur.depth + 1});
      if (key.mask == full) {
        found = static_cast<std::uint32_t>(nodes.size() - 1);
        break;
      }
    }
  }
  res.states = nodes.size();
  if (!found) {
    res.verdict = Verdict::safe;
    return res;
  }
  for (std::uint32_t i = *found; nodes[i].parent != kRoot; i = nodes[i].parent) res.witness.push_back(nodes[i].edge);
  std::reverse(res.witness.begin(), res.witness.end());
  res.witness_length = res.witness.size();
  if (res.witness_length <= bound) {
    res.verdict = Verdict::unsafe;
  } else {
    res.note = "shortest avoiding covering walk has " + std::to_string(res.witness_length) +
               " edges, beyond the bound";
    res.witness.clear();
  }
  return res;
}

SafetyReport safety_suite(const Digraph& g, std::span<const VertexPath> candidates, std::size_t bound,
                          const SafetyOptions& options) {
  SafetyReport rep;
  const auto pre = check_safety_preconditions(g);
  if (!pre.holds()) {
    rep.reason = "preconditions fail: " + pre.diagnosis;
    return rep;
  }
  rep.applicable = true;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    SafetyEntry entry;
    entry.index = i;
    if (candidates[i].empty()) {
      entry.result.note = "no vertex path";
      ++rep.unknown;
      rep.entries.push_back(std::move(entry));
      continue;
    }
    entry.is_unitig = is_unitig(g, candidates[i]);
    entry.result = is_safe_bounded(g, candidates[i], bound, options);
    switch (entry.result.verdict) {
      case Verdict::safe: ++rep.safe; break;
      case Verdict::unsafe: ++rep.unsafe; break;
      case Verdict::unknown: ++rep.unknown; break;
    }
    entry.safety_violation = entry.is_unitig && entry.result.verdict == Verdict::unsafe;
    rep.violations += entry.safety_violation;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

SafetyReport safety_suite(const Digraph& g, const ContigSet& contigs, std::size_t bound,
                          const SafetyOptions& options) {
  std::vector<VertexPath> paths;
  paths.reserve(contigs.size());
  for (const auto& c : contigs) paths.push_back(c.path);
  return safety_suite(g, paths, bound, options);
}

std::vector<SafeExtension> safe_extensions(const Digraph& g, std::size_t bound, const SafetyOptions& options) {
  std::vector<SafeExtension> out;
  const auto part = maximal_unitigs(g);
  for (std::size_t u = 0; u < part.unitigs.size(); ++u) {
    VertexPath path = part.unitigs[u];
    if (is_safe_bounded(g, path, bound, options).verdict != Verdict::safe) continue;
    for (bool right : {true, false}) {
      // A safe string never exceeds the shortest covering walk; the cap
      // only guards against cycling on pathological inputs.
      while (path.size() <= bound + 1) {
        std::vector<VertexId> next;
        if (right) {
          for (EdgeId e : g.out_edges(path.back())) next.push_back(g.head(e));
        } else {
          for (EdgeId e : g.in_edges(path.front())) next.push_back(g.tail(e));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        bool grown = false;
        for (VertexId w : next) {
          VertexPath trial = path;
          if (right) {
            trial.push_back(w);
          } else {
            trial.insert(trial.begin(), w);
          }
          if (is_safe_bounded(g, trial, bound, options).verdict == Verdict::safe) {
            path = std::move(trial);
            grown = true;
            break;
          }
        }
        if (!grown) break;
      }
    }
    if (path.size() > part.unitigs[u].size()) out.push_back({u, std::move(path)});
  }
  return out;
}

std::string format_safety_table(const SafetyReport& report, const ContigSet& contigs) {
  std::ostringstream os;
  os << "contig\tsource\tverdict\twitness_length\n";
  if (!report.applicable) {
    os << "# not applicable: " << report.reason << '\n';
    return os.str();
  }
  for (const auto& e : report.entries) {
    os << "contig" << e.index << '\t' << (e.index < contigs.size() ? contigs[e.index].source : "") << '\t'
       << to_string(e.result.verdict) << '\t' << e.result.witness_length << '\n';
  }
  return os.str();
}

}  // namespace asmlab
