#include "spancore/maximal_cores.hpp"

#include <algorithm>
#include <map>

#include "spancore/degree_buckets.hpp"
#include "spancore/static_core.hpp"

namespace spancore {

SpanCoreSet filter_maximal(const SpanCoreSet& all) {
  std::map<Interval, const SpanCore*> top;
  for (const auto& c : all) {
    auto [it, inserted] = top.try_emplace(c.span, &c);
    if (!inserted && it->second->k < c.k) it->second = &c;
  }
  std::vector<const SpanCore*> candidates;
  candidates.reserve(top.size());
  for (const auto& [span, core] : top) candidates.push_back(core);
  // Highest order first: a core can only be dominated by one of order >= its own.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const SpanCore* a, const SpanCore* b) { return a->k > b->k; });

  SpanCoreSet out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const SpanCore& c = *candidates[i];
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && candidates[j]->k >= c.k; ++j) {
      if (i != j && dominated_by(c, *candidates[j])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(c);
  }
  sort_by_width(out);
  return out;
}

namespace {

SpanCoreSet top_down_scan(const TemporalGraph& g, std::span<const VertexId> query, DecompositionStats* stats) {
  SpanCoreSet out;
  DecompositionStats local;
  const std::size_t n = g.num_vertices();
  CorePeeler peeler(n);
  DegreeBuckets buckets(n);
  std::vector<Order> left_order(g.num_timestamps(), 0);  // innermost order of [ts-1, t], per t
  std::vector<std::uint8_t> in_bound(n, 0);
  std::vector<const EdgeSet*> chunks;
  VertexSet bounded;
  EdgeSet induced;

  for (Timestamp ts = 0; ts <= g.t_max(); ++ts) {
    const DeltaMinusFamily family = delta_minus_sets(g, ts);
    if (!family.t_star) continue;
    const Timestamp t_star = *family.t_star;

    buckets.reset();
    chunks.clear();
    chunks.push_back(&family.tail);
    buckets.add_edges(family.tail);
    Order right_order = 0;  // innermost order of [ts, te+1]

    for (Timestamp te = t_star + 1; te-- > ts;) {
      if (te < t_star) {
        const EdgeSet& removed = family.minus[te - ts];
        chunks.push_back(&removed);
        buckets.add_edges(removed);
      }
      const Order lb = std::max(left_order[te], right_order);
      auto above = buckets.above(static_cast<long>(lb));
      bounded.assign(above.begin(), above.end());
      std::sort(bounded.begin(), bounded.end());

      Order found = 0;
      bool query_inside = true;
      for (auto q : query) {
        if (!std::binary_search(bounded.begin(), bounded.end(), q)) {
          query_inside = false;
          break;
        }
      }
      if (query_inside && !bounded.empty()) {
        for (auto v : bounded) in_bound[v] = 1;
        induced.clear();
        for (const EdgeSet* chunk : chunks) {
          for (const auto& e : *chunk) {
            if (in_bound[e.u] && in_bound[e.v]) induced.push_back(e);
          }
        }
        for (auto v : bounded) in_bound[v] = 0;

        if (!induced.empty()) {
          const Order k_max = peeler.peel(bounded, induced);
          ++local.peeled_intervals;
          found = k_max;
          if (!query.empty()) {
            auto core = peeler.coreness();
            for (auto q : query) {
              const auto idx = static_cast<std::size_t>(std::lower_bound(bounded.begin(), bounded.end(), q) -
                                                        bounded.begin());
              found = std::min(found, core[idx]);
            }
          }
          if (found > lb) {
            out.push_back({found, {ts, te}, peeler.members_at_least(found)});
          }
        }
      }
      right_order = std::max(right_order, found);
      left_order[te] = std::max(left_order[te], right_order);
    }
  }
  local.processed_vertices = peeler.processed_vertices();
  local.enqueued_intervals = local.peeled_intervals;
  sort_by_width(out);
  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace

SpanCoreSet maximal_span_cores(const TemporalGraph& g, DecompositionStats* stats) {
  return top_down_scan(g, {}, stats);
}

SpanCoreSet q_constrained_maximal_cores(const TemporalGraph& g, std::span<const VertexId> query,
                                        DecompositionStats* stats) {
  return top_down_scan(g, query, stats);
}

}  // namespace spancore
