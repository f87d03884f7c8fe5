#include "spancore/temporal_graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "spancore/errors.hpp"

namespace spancore {

TemporalGraph TemporalGraph::from_snapshots(std::vector<std::string> labels,
                                            std::vector<std::vector<Edge>> snapshots, Timing timing) {
  if (snapshots.empty()) throw ArgumentError("temporal graph needs at least one timestamp");
  if (timing.window <= 0) throw ArgumentError("window must be positive");

  TemporalGraph g;
  g.timing_ = timing;
  g.labels_ = std::move(labels);
  g.index_.reserve(g.labels_.size());
  for (VertexId i = 0; i < g.labels_.size(); ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw ArgumentError("duplicate vertex label '" + g.labels_[i] + "'");
    }
  }

  const auto n = static_cast<VertexId>(g.labels_.size());
  g.snapshots_.reserve(snapshots.size());
  g.adjacency_.reserve(snapshots.size());
  for (auto& raw : snapshots) {
    EdgeSet edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
      if (e.u >= n || e.v >= n) throw ArgumentError("edge endpoint out of range");
      if (e.u == e.v) throw ArgumentError("self-loop on vertex '" + g.labels_[e.u] + "'");
      edges.push_back(Edge::make(e.u, e.v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.total_edges_ += edges.size();

    Adjacency adj;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    arcs.reserve(edges.size() * 2);
    for (const auto& e : edges) {
      arcs.emplace_back(e.u, e.v);
      arcs.emplace_back(e.v, e.u);
    }
    std::sort(arcs.begin(), arcs.end());
    adj.targets.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (i == 0 || arcs[i].first != arcs[i - 1].first) {
        adj.active.push_back(arcs[i].first);
        adj.offsets.push_back(static_cast<std::uint32_t>(i));
      }
      adj.targets.push_back(arcs[i].second);
    }
    adj.offsets.push_back(static_cast<std::uint32_t>(arcs.size()));

    g.snapshots_.push_back(std::move(edges));
    g.adjacency_.push_back(std::move(adj));
  }
  return g;
}

std::span<const VertexId> TemporalGraph::neighbors(Timestamp t, VertexId u) const {
  const Adjacency& adj = adjacency_.at(t);
  auto it = std::lower_bound(adj.active.begin(), adj.active.end(), u);
  if (it == adj.active.end() || *it != u) return {};
  const auto i = static_cast<std::size_t>(it - adj.active.begin());
  return std::span<const VertexId>(adj.targets).subspan(adj.offsets[i], adj.offsets[i + 1] - adj.offsets[i]);
}

bool TemporalGraph::has_edge(Timestamp t, VertexId u, VertexId v) const {
  if (u == v) return false;
  const auto& edges = snapshots_.at(t);
  return std::binary_search(edges.begin(), edges.end(), Edge::make(u, v));
}

std::optional<VertexId> TemporalGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void TemporalGraph::check_interval(const Interval& span) const {
  if (span.ts > span.te || span.te > t_max()) {
    throw ArgumentError("interval [" + std::to_string(span.ts) + "," + std::to_string(span.te) +
                        "] outside [0," + std::to_string(t_max()) + "]");
  }
}

EdgeSet intersect_edges(std::span<const Edge> a, std::span<const Edge> b) {
  if (a.size() > b.size()) std::swap(a, b);
  EdgeSet out;
  if (a.empty()) return out;
  out.reserve(a.size());
  if (a.size() * 16 < b.size()) {
    // Skewed sizes: probe the larger side.
    auto lo = b.begin();
    for (const auto& e : a) {
      lo = std::lower_bound(lo, b.end(), e);
      if (lo == b.end()) break;
      if (*lo == e) out.push_back(e);
    }
    return out;
  }
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet interval_edges(const TemporalGraph& g, const Interval& span) {
  g.check_interval(span);
  auto first = g.snapshot(span.ts);
  EdgeSet acc(first.begin(), first.end());
  for (Timestamp t = span.ts + 1; t <= span.te && !acc.empty(); ++t) {
    acc = intersect_edges(acc, g.snapshot(t));
  }
  return acc;
}

std::size_t induced_degree(const TemporalGraph& g, const Interval& span, std::span<const VertexId> members,
                           VertexId u) {
  g.check_interval(span);
  const std::unordered_set<VertexId> inside(members.begin(), members.end());
  if (!inside.contains(u)) throw ArgumentError("vertex is not a member of the given set");
  std::size_t degree = 0;
  for (VertexId v : g.neighbors(span.ts, u)) {
    if (!inside.contains(v)) continue;
    bool everywhere = true;
    for (Timestamp t = span.ts + 1; t <= span.te && everywhere; ++t) everywhere = g.has_edge(t, u, v);
    if (everywhere) ++degree;
  }
  return degree;
}

EdgeSet DeltaMinusFamily::edges_at(Timestamp te) const {
  if (!t_star || te < ts || te > *t_star) throw ArgumentError("timestamp outside the family's range");
  EdgeSet acc = tail;
  for (Timestamp t = *t_star; t > te; --t) {
    const EdgeSet& m = minus[t - 1 - ts];
    EdgeSet merged;
    merged.reserve(acc.size() + m.size());
    std::merge(acc.begin(), acc.end(), m.begin(), m.end(), std::back_inserter(merged));
    acc = std::move(merged);
  }
  return acc;
}

DeltaMinusFamily delta_minus_sets(const TemporalGraph& g, Timestamp ts) {
  if (ts > g.t_max()) throw ArgumentError("start timestamp beyond t_max");
  DeltaMinusFamily family;
  family.ts = ts;
  auto first = g.snapshot(ts);
  if (first.empty()) return family;

  EdgeSet current(first.begin(), first.end());
  Timestamp te = ts;
  while (te < g.t_max()) {
    EdgeSet next = intersect_edges(current, g.snapshot(te + 1));
    if (next.empty()) break;
    EdgeSet removed;
    removed.reserve(current.size() - next.size());
    std::set_difference(current.begin(), current.end(), next.begin(), next.end(), std::back_inserter(removed));
    family.minus.push_back(std::move(removed));
    current = std::move(next);
    ++te;
  }
  family.t_star = te;
  family.tail = std::move(current);
  return family;
}

}  // namespace spancore
