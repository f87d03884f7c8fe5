#include "spancore/min_community.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "spancore/errors.hpp"

namespace spancore {

namespace {

bool contains(std::span<const VertexId> sorted, VertexId v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

// Adjacency of E_span restricted to `community`, over local indices.
struct LocalGraph {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> targets;

  std::span<const std::uint32_t> neighbors(std::uint32_t u) const {
    return {targets.data() + offsets[u], offsets[u + 1] - offsets[u]};
  }
};

LocalGraph build_local(const TemporalGraph& g, const Interval& span, std::span<const VertexId> community) {
  auto local = [&](VertexId v) {
    return static_cast<std::uint32_t>(std::lower_bound(community.begin(), community.end(), v) - community.begin());
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (const auto& e : interval_edges(g, span)) {
    if (contains(community, e.u) && contains(community, e.v)) {
      arcs.emplace_back(local(e.u), local(e.v));
      arcs.emplace_back(local(e.v), local(e.u));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  LocalGraph lg;
  lg.offsets.assign(community.size() + 1, 0);
  for (const auto& a : arcs) ++lg.offsets[a.first + 1];
  for (std::size_t i = 1; i < lg.offsets.size(); ++i) lg.offsets[i] += lg.offsets[i - 1];
  lg.targets.reserve(arcs.size());
  for (const auto& a : arcs) lg.targets.push_back(a.second);
  return lg;
}

}  // namespace

long candidate_score(const TemporalGraph& g, const Interval& span, std::span<const VertexId> current, VertexId v,
                     Order target) {
  g.check_interval(span);
  const EdgeSet edges = interval_edges(g, span);
  std::vector<std::size_t> degree(current.size(), 0);
  std::size_t own = 0;
  for (const auto& e : edges) {
    const bool u_in = contains(current, e.u), v_in = contains(current, e.v);
    if (u_in && v_in) {
      ++degree[static_cast<std::size_t>(std::lower_bound(current.begin(), current.end(), e.u) - current.begin())];
      ++degree[static_cast<std::size_t>(std::lower_bound(current.begin(), current.end(), e.v) - current.begin())];
    }
  }
  long gain = 0;
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (g.has_edge(span.ts, v, current[i])) {
      bool all = true;
      for (Timestamp t = span.ts + 1; t <= span.te && all; ++t) all = g.has_edge(t, v, current[i]);
      if (all) {
        ++own;
        if (degree[i] < target) ++gain;
      }
    }
  }
  const long deficit = std::max<long>(0, static_cast<long>(target) - static_cast<long>(own));
  return gain - deficit;
}

VertexSet greedy_minimum_community(const TemporalGraph& g, std::span<const VertexId> query, const Interval& span,
                                   std::span<const VertexId> community, Order target) {
  g.check_interval(span);
  VertexSet q(query.begin(), query.end());
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  for (auto v : q) {
    if (!contains(community, v)) throw ArgumentError("query vertex " + std::to_string(v) + " is not in the community");
  }
  if (target == 0) return q;
  if (q.empty()) throw ArgumentError("query must be non-empty");

  const std::size_t n = community.size();
  const LocalGraph lg = build_local(g, span, community);
  constexpr long kQueryPriority = std::numeric_limits<long>::max();

  std::vector<std::uint8_t> in_set(n, 0), queued(n, 0), is_query(n, 0);
  std::vector<std::uint32_t> degree(n, 0);  // neighbours inside the growing set
  std::vector<long> cached(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);

  struct Entry {
    long priority;
    std::uint32_t degree;
    std::uint32_t vertex;
    std::uint32_t stamp;
  };
  auto lower = [](const Entry& a, const Entry& b) {
    if (a.priority != b.priority) return a.priority < b.priority;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.vertex > b.vertex;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);
  auto push = [&](std::uint32_t v) { heap.push({cached[v], degree[v], v, ++stamp[v]}); };
  auto score = [&](std::uint32_t v) {
    long gain = 0;
    for (auto w : lg.neighbors(v)) {
      if (in_set[w] && degree[w] < target) ++gain;
    }
    return gain - std::max<long>(0, static_cast<long>(target) - static_cast<long>(degree[v]));
  };

  for (auto v : q) {
    const auto local = static_cast<std::uint32_t>(std::lower_bound(community.begin(), community.end(), v) -
                                                  community.begin());
    is_query[local] = 1;
    queued[local] = 1;
    cached[local] = kQueryPriority;
    push(local);
  }

  std::size_t deficient = 0;  // members with fewer than `target` neighbours inside
  std::size_t queries_in = 0;
  std::vector<std::uint32_t> members;
  std::vector<std::uint32_t> saturated;
  while (members.empty() || deficient > 0 || queries_in < q.size()) {
    std::uint32_t u = 0;
    for (;;) {
      if (heap.empty()) throw std::logic_error("candidate queue exhausted before the degree target was met");
      const Entry top = heap.top();
      heap.pop();
      if (queued[top.vertex] && top.stamp == stamp[top.vertex]) {
        u = top.vertex;
        break;
      }
    }
    queued[u] = 0;
    in_set[u] = 1;
    members.push_back(u);
    if (is_query[u]) ++queries_in;
    if (degree[u] < target) ++deficient;

    saturated.clear();
    for (auto v : lg.neighbors(u)) {
      if (++degree[v] == target && in_set[v]) {
        --deficient;
        saturated.push_back(v);
      }
    }
    // A member that just reached the target no longer adds to its queued neighbours' gain.
    for (auto v : saturated) {
      for (auto w : lg.neighbors(v)) {
        if (queued[w] && !is_query[w]) {
          --cached[w];
          push(w);
        }
      }
    }
    for (auto v : lg.neighbors(u)) {
      if (!in_set[v] && !queued[v]) {
        queued[v] = 1;
        cached[v] = score(v);
        push(v);
      }
    }
  }

  VertexSet out;
  out.reserve(members.size());
  for (auto v : members) out.push_back(community[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spancore
