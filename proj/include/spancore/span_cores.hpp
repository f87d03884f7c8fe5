#pragma once

#include <functional>
#include <span>
#include <vector>

#include "spancore/static_core.hpp"
#include "spancore/temporal_graph.hpp"

namespace spancore {

/// A (k, Δ)-core: the maximal non-empty vertex set whose members each have at
/// least k neighbours inside the set at every timestamp of `span`.
struct SpanCore {
  Order k = 0;
  Interval span;
  VertexSet members;  // ascending

  bool operator==(const SpanCore&) const = default;
};

using SpanCoreSet = std::vector<SpanCore>;

/// Work counters used to compare enumeration strategies.
struct DecompositionStats {
  std::size_t processed_vertices = 0;  // vertices handed to the peeling routine
  std::size_t peeled_intervals = 0;
  std::size_t enqueued_intervals = 0;
};

/// Orders cores by (|Δ|, ts, k): the library's emission order.
void sort_by_width(SpanCoreSet& cores);

/// Orders cores by (ts, te, k): the record order used for output files.
void sort_by_start(SpanCoreSet& cores);

/// Reference enumeration: full core decomposition of G_Δ = (V, E_Δ) for every
/// interval with a non-empty edge set.
SpanCoreSet naive_span_cores(const TemporalGraph& g, DecompositionStats* stats = nullptr);

/// Enumeration by increasing span width. Each interval wider than one is
/// seeded with the intersection of the order-1 cores of its two immediate
/// sub-intervals and queued only once both are known. Output equals
/// naive_span_cores().
SpanCoreSet span_cores(const TemporalGraph& g, DecompositionStats* stats = nullptr);

/// Called once per peeled interval with the candidate vertices handed to the
/// peeler; coreness() of the peeler is parallel to `vertices`.
using IntervalVisitor =
    std::function<void(const Interval& span, std::span<const VertexId> vertices, CorePeeler& peeler, Order k_max)>;

/// The traversal behind span_cores(): every interval whose edge set survives
/// the father intersection is peeled once, narrowest first.
void visit_interval_cores(const TemporalGraph& g, const IntervalVisitor& visit, DecompositionStats* stats = nullptr);

}  // namespace spancore
