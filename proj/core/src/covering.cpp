#include "asmlab/covering.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>

namespace asmlab {

MultiComponentError::MultiComponentError(std::vector<std::vector<EdgeId>> components)
    : Error("graph has " + std::to_string(components.size()) +
            " weakly connected components; no single walk covers every edge"),
      components_(std::move(components)) {}

namespace {

// Iterative Tarjan; returns the component index of each vertex (components
// numbered in reverse topological order).
std::vector<std::size_t> strong_components(const Digraph& g, std::size_t& count) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;  // vertex, next out-edge position
  std::size_t next = 0;
  count = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto out = g.out_edges(v);
      if (pos < out.size()) {
        const VertexId w = g.head(out[pos++]);
        if (index[w] == kUnset) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const VertexId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

// Successive shortest paths with Dijkstra over reduced costs.
class MinCostFlow {
 public:
  explicit MinCostFlow(std::size_t n) : adj_(n) {}

  std::size_t add(std::size_t from, std::size_t to, std::int64_t cap, std::int64_t cost) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap, cost});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0, -cost});
    return arcs_.size() - 2;
  }

  std::int64_t flow(std::size_t arc) const { return arcs_[arc ^ 1].cap; }

  // Pushes up to `want` units from s to t; returns the amount pushed.
  std::int64_t run(std::size_t s, std::size_t t, std::int64_t want) {
    const std::size_t n = adj_.size();
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> pot(n, 0), dist(n);
    std::vector<std::size_t> via(n);
    std::int64_t pushed = 0;
    while (pushed < want) {
      std::fill(dist.begin(), dist.end(), kInf);
      dist[s] = 0;
      using Item = std::pair<std::int64_t, std::size_t>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      pq.emplace(0, s);
      while (!pq.empty()) {
        const auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;
        for (std::size_t a : adj_[v]) {
          const Arc& arc = arcs_[a];
          if (arc.cap <= 0) continue;
          const std::int64_t nd = d + arc.cost + pot[v] - pot[arc.to];
          if (nd < dist[arc.to]) {
            dist[arc.to] = nd;
            via[arc.to] = a;
            pq.emplace(nd, arc.to);
          }
        }
      }
      if (dist[t] >= kInf) break;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] < kInf) pot[v] += dist[v];
      }
      std::int64_t push = want - pushed;
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].cap);
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].cap -= push;
        arcs_[via[v] ^ 1].cap += push;
      }
      pushed += push;
    }
    return pushed;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    std::int64_t cost;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

// Lexicographically smallest Eulerian trail of the multigraph in which edge
// e occurs copies[e] times, from `start`. Degrees must admit such a trail.
Walk euler_trail(const Digraph& g, std::vector<std::size_t> copies, VertexId start) {
  std::size_t remaining = 0;
  for (auto c : copies) remaining += c;
  Walk trail;
  trail.reserve(remaining);

  std::vector<std::size_t> seen_stamp(g.num_vertices(), 0);
  std::size_t stamp = 0;
  std::vector<VertexId> queue;
  // After removing one copy of `e` (already done), is every remaining edge
  // weakly connected to head(e)?
  auto connected_after = [&](EdgeId e) {
    if (remaining == 0) return true;
    ++stamp;
    queue.clear();
    queue.push_back(g.head(e));
    seen_stamp[g.head(e)] = stamp;
    std::size_t reached = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const VertexId v = queue[qi];
      for (EdgeId f : g.out_edges(v)) {
        if (!copies[f]) continue;
        reached += copies[f];
        if (seen_stamp[g.head(f)] != stamp) {
          seen_stamp[g.head(f)] = stamp;
          queue.push_back(g.head(f));
        }
      }
      for (EdgeId f : g.in_edges(v)) {
        if (copies[f] && seen_stamp[g.tail(f)] != stamp) {
          seen_stamp[g.tail(f)] = stamp;
          queue.push_back(g.tail(f));
        }
      }
    }
    return reached == remaining;
  };

  VertexId v = start;
  while (remaining > 0) {
    const auto out = g.out_edges(v);
    std::size_t options = 0;
    for (EdgeId e : out) options += copies[e] > 0;
    if (options == 0) throw Error("internal: Eulerian trail got stuck");
    EdgeId chosen = 0;
    bool found = false;
    for (EdgeId e : out) {
      if (!copies[e]) continue;
      --copies[e];
      --remaining;
      if (options == 1 || connected_after(e)) {
        chosen = e;
        found = true;
        break;
      }
      ++copies[e];
      ++remaining;
    }
    if (!found) throw Error("internal: no usable edge in Eulerian trail");
    trail.push_back(chosen);
    v = g.head(chosen);
  }
  return trail;
}

}  // namespace

CoveringWalkCheck covering_walk_exists(const Digraph& g) {
  CoveringWalkCheck r;
  if (g.num_edges() == 0) {
    r.exists = true;
    return r;
  }
  r.components = edge_components(g).size();
  if (r.components > 1) {
    r.diagnosis = "edges form " + std::to_string(r.components) + " weakly connected components";
    return r;
  }
  std::size_t count = 0;
  const auto comp = strong_components(g, count);
  // Only components holding non-isolated vertices take part.
  std::vector<char> active(count, 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.isolated(v)) active[comp[v]] = 1;
  }
  const std::size_t t = static_cast<std::size_t>(std::count(active.begin(), active.end(), 1));
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> succ(count, kNone), in_deg(count, 0);
  std::size_t crossing = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const std::size_t a = comp[g.tail(e)], b = comp[g.head(e)];
    if (a == b) continue;
    ++crossing;
    if (succ[a] != kNone && succ[a] != b) {
      r.diagnosis = "a strongly connected component is left towards two different components";
      return r;
    }
    if (succ[a] == b) {
      r.diagnosis = "two edges join the same pair of strongly connected components";
      return r;
    }
    succ[a] = b;
    ++in_deg[b];
  }
  if (crossing != t - 1) {
    r.diagnosis = "strongly connected components do not form a single chain";
    return r;
  }
  std::size_t heads = 0;
  for (std::size_t c = 0; c < count; ++c) {
    if (!active[c]) continue;
    if (in_deg[c] > 1) {
      r.diagnosis = "a strongly connected component is entered from two different components";
      return r;
    }
    heads += in_deg[c] == 0;
  }
  if (heads != 1) {
    r.diagnosis = "strongly connected components do not form a single chain";
    return r;
  }
  r.exists = true;
  return r;
}

Walk shortest_edge_covering_walk(const Digraph& g) {
  if (g.num_edges() == 0) return {};
  auto comps = edge_components(g);
  if (comps.size() > 1) throw MultiComponentError(std::move(comps));
  const auto check = covering_walk_exists(g);
  if (!check.exists) throw NoCoveringWalk("no edge-covering walk: " + check.diagnosis);

  const std::size_t n = g.num_vertices();
  const std::size_t src = n, snk = n + 1, hub_in = n + 2, hub_out = n + 3;
  MinCostFlow mcf(n + 4);
  std::int64_t supply = 0;
  std::vector<std::int64_t> balance(n);
  for (VertexId v = 0; v < n; ++v) {
    // Extra copies must leave vertices entered more often than left.
    balance[v] = static_cast<std::int64_t>(g.in_degree(v)) - static_cast<std::int64_t>(g.out_degree(v));
    if (balance[v] > 0) supply += balance[v];
  }
  std::vector<std::size_t> edge_arc(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) edge_arc[e] = mcf.add(g.tail(e), g.head(e), supply + 1, 1);
  for (VertexId v = 0; v < n; ++v) {
    if (balance[v] > 0) mcf.add(src, v, balance[v], 0);
    if (balance[v] < 0) mcf.add(v, snk, -balance[v], 0);
  }
  std::vector<std::size_t> to_hub(n), from_hub(n);
  const bool open = supply > 0;
  if (open) {
    for (VertexId v = 0; v < n; ++v) {
      if (g.isolated(v)) continue;
      to_hub[v] = mcf.add(v, hub_in, 1, 0);
      from_hub[v] = mcf.add(hub_out, v, 1, 0);
    }
    mcf.add(hub_in, hub_out, 1, 0);
  }
  if (mcf.run(src, snk, supply) != supply) {
    throw NoCoveringWalk("no edge-covering walk: duplication flow is infeasible");
  }

  std::vector<std::size_t> copies(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) copies[e] = 1 + static_cast<std::size_t>(mcf.flow(edge_arc[e]));
  VertexId start = g.tail(0);
  if (open) {
    for (VertexId v = 0; v < n; ++v) {
      if (!g.isolated(v) && mcf.flow(from_hub[v]) > 0) start = v;
    }
  }
  return euler_trail(g, std::move(copies), start);
}

OracleResult oracle_shortest_edge_covering_walk(const Digraph& g, OracleMode mode, std::size_t max_edges) {
  const std::size_t cap = std::min<std::size_t>(max_edges, 16);
  const std::size_t m = g.num_edges();
  if (m > cap) {
    throw ResourceLimit("covering-walk oracle handles at most " + std::to_string(cap) + " edges, got " +
                        std::to_string(m));
  }
  OracleResult result;
  if (m == 0) {
    result.count = 1;
    return result;
  }
  const std::size_t n = g.num_vertices();
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();
  auto at = [n](std::uint32_t mask, VertexId v) { return static_cast<std::size_t>(mask) * n + v; };

  // dist[state]: fewest further edges needed to cover everything.
  std::vector<std::uint16_t> dist((static_cast<std::size_t>(full) + 1) * n, kInf);
  std::deque<std::pair<std::uint32_t, VertexId>> q;
  for (VertexId v = 0; v < n; ++v) {
    dist[at(full, v)] = 0;
    q.emplace_back(full, v);
  }
  while (!q.empty()) {
    const auto [mask, w] = q.front();
    q.pop_front();
    const std::uint16_t d = dist[at(mask, w)];
    for (EdgeId e : g.in_edges(w)) {
      const std::uint32_t bit = std::uint32_t{1} << e;
      if (!(mask & bit)) continue;
      for (std::uint32_t pm : {mask, mask ^ bit}) {
        auto& slot = dist[at(pm, g.tail(e))];
        if (slot == kInf) {
          slot = static_cast<std::uint16_t>(d + 1);
          q.emplace_back(pm, g.tail(e));
        }
      }
    }
  }

  std::size_t best = kInf;
  for (EdgeId e = 0; e < m; ++e) {
    const auto d = dist[at(std::uint32_t{1} << e, g.head(e))];
    if (d != kInf) best = std::min<std::size_t>(best, 1 + d);
  }
  if (best == kInf) throw NoCoveringWalk("no edge-covering walk exists");
  result.length = best;

  if (mode == OracleMode::one) {
    result.count = 1;
    EdgeId first = 0;
    while (std::size_t{1} + dist[at(std::uint32_t{1} << first, g.head(first))] != best) ++first;
    result.walk.push_back(first);
    std::uint32_t mask = std::uint32_t{1} << first;
    VertexId v = g.head(first);
    while (dist[at(mask, v)] > 0) {
      const auto d = dist[at(mask, v)];
      for (EdgeId e : g.out_edges(v)) {
        const std::uint32_t nm = mask | (std::uint32_t{1} << e);
        if (dist[at(nm, g.head(e))] == d - 1) {
          result.walk.push_back(e);
          mask = nm;
          v = g.head(e);
          break;
        }
      }
    }
    return result;
  }

  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  std::vector<std::uint64_t> ways(dist.size(), 0);
  std::vector<char> known(dist.size(), 0);
  std::function<std::uint64_t(std::uint32_t, VertexId)> count = [&](std::uint32_t mask, VertexId v) {
    const std::size_t s = at(mask, v);
    if (known[s]) return ways[s];
    std::uint64_t total = 0;
    if (dist[s] == 0) {
      total = 1;
    } else {
      for (EdgeId e : g.out_edges(v)) {
        const std::uint32_t nm = mask | (std::uint32_t{1} << e);
        if (dist[at(nm, g.head(e))] == dist[s] - 1) total = add(total, count(nm, g.head(e)));
      }
    }
    known[s] = 1;
    ways[s] = total;
    return total;
  };
  for (EdgeId e = 0; e < m; ++e) {
    const std::uint32_t mask = std::uint32_t{1} << e;
    if (std::size_t{1} + dist[at(mask, g.head(e))] == best) result.count = add(result.count, count(mask, g.head(e)));
  }
  return result;
}

}  // namespace asmlab
