#include "spancore/span_cores.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "spancore/static_core.hpp"
#include "spancore/vertex_mask.hpp"

namespace spancore {

void sort_by_width(SpanCoreSet& cores) {
  std::sort(cores.begin(), cores.end(), [](const SpanCore& a, const SpanCore& b) {
    return std::tuple(a.span.length(), a.span.ts, a.k) < std::tuple(b.span.length(), b.span.ts, b.k);
  });
}

void sort_by_start(SpanCoreSet& cores) {
  std::sort(cores.begin(), cores.end(), [](const SpanCore& a, const SpanCore& b) {
    return std::tuple(a.span.ts, a.span.te, a.k) < std::tuple(b.span.ts, b.span.te, b.k);
  });
}

namespace {

void emit_all_orders(CorePeeler& peeler, Order k_max, const Interval& span, SpanCoreSet& out) {
  for (Order k = 1; k <= k_max; ++k) out.push_back({k, span, peeler.members_at_least(k)});
}

VertexSet all_vertices(const TemporalGraph& g) {
  VertexSet all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  return all;
}

}  // namespace

SpanCoreSet naive_span_cores(const TemporalGraph& g, DecompositionStats* stats) {
  SpanCoreSet out;
  DecompositionStats local;
  CorePeeler peeler(g.num_vertices());
  const VertexSet everyone = all_vertices(g);

  for (Timestamp ts = 0; ts <= g.t_max(); ++ts) {
    auto first = g.snapshot(ts);
    EdgeSet edges(first.begin(), first.end());
    for (Timestamp te = ts; !edges.empty(); ++te) {
      const Order k_max = peeler.peel(everyone, edges);
      ++local.peeled_intervals;
      emit_all_orders(peeler, k_max, {ts, te}, out);
      if (te == g.t_max()) break;
      edges = intersect_edges(edges, g.snapshot(te + 1));
    }
  }
  local.processed_vertices = peeler.processed_vertices();
  local.enqueued_intervals = local.peeled_intervals;
  sort_by_width(out);
  if (stats != nullptr) *stats = local;
  return out;
}

namespace {

// Seed for an interval: the candidate vertex set (absent = all of V) and its
// edge set, provided by the first father.
struct Seed {
  bool whole_graph = false;
  VertexMask vertices;
  EdgeSet edges;
};

}  // namespace

void visit_interval_cores(const TemporalGraph& g, const IntervalVisitor& visit, DecompositionStats* stats) {
  DecompositionStats local;
  const std::size_t n = g.num_vertices();
  CorePeeler peeler(n);
  const VertexSet everyone = all_vertices(g);

  std::unordered_map<Interval, Seed> seeds;
  std::deque<Interval> queue;
  for (Timestamp t = 0; t <= g.t_max(); ++t) {
    auto snap = g.snapshot(t);
    seeds[{t, t}] = Seed{true, {}, EdgeSet(snap.begin(), snap.end())};
    queue.push_back({t, t});
    ++local.enqueued_intervals;
  }

  VertexSet candidates;
  EdgeSet induced;
  VertexMask outer(n);
  while (!queue.empty()) {
    const Interval span = queue.front();
    queue.pop_front();
    auto node = seeds.extract(span);
    Seed& seed = node.mapped();

    // Every edge of E_span has both endpoints in both fathers' 1-cores, so the
    // seed edges already lie inside the candidate set.
    induced = std::move(seed.edges);
    if (induced.empty()) continue;
    if (!seed.whole_graph) seed.vertices.members_into(candidates);

    const VertexSet& feed = seed.whole_graph ? everyone : candidates;
    const Order k_max = peeler.peel(feed, induced);
    ++local.peeled_intervals;
    visit(span, feed, peeler, k_max);

    // Order-1 core of the interval: every candidate that kept an edge.
    outer.clear();
    const auto core = peeler.coreness();
    for (std::size_t i = 0; i < feed.size(); ++i) {
      if (core[i] > 0) outer.set(feed[i]);
    }
    const Interval left{span.ts == 0 ? 0 : span.ts - 1, span.te};
    const Interval right{span.ts, std::min<Timestamp>(span.te + 1, g.t_max())};
    for (const Interval& child : {left, right}) {
      if (child == span) continue;
      auto it = seeds.find(child);
      if (it != seeds.end()) {
        // Second father: the child is ready unless it can no longer hold an edge.
        Seed& pending = it->second;
        const std::size_t remaining = pending.vertices.intersect(outer);
        if (remaining >= 2 && !pending.edges.empty()) {
          queue.push_back(child);
          ++local.enqueued_intervals;
        } else {
          seeds.erase(it);
        }
      } else {
        const Timestamp added = child.ts < span.ts ? child.ts : child.te;
        seeds.emplace(child, Seed{false, outer, intersect_edges(induced, g.snapshot(added))});
      }
    }
  }

  local.processed_vertices = peeler.processed_vertices();
  if (stats != nullptr) *stats = local;
}

SpanCoreSet span_cores(const TemporalGraph& g, DecompositionStats* stats) {
  SpanCoreSet out;
  visit_interval_cores(
      g,
      [&out](const Interval& span, std::span<const VertexId>, CorePeeler& peeler, Order k_max) {
        emit_all_orders(peeler, k_max, span, out);
      },
      stats);
  sort_by_width(out);
  return out;
}

}  // namespace spancore
