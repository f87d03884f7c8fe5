#pragma once

#include <span>
#include <vector>

#include "spancore/span_cores.hpp"

namespace spancore {

/// Sorted, duplicate-free copy of `query`; throws ArgumentError when a vertex
/// is outside the graph.
VertexSet normalize_query(const TemporalGraph& g, std::span<const VertexId> query);

/// Highest-order span-core of span `span` containing the query, and its order.
/// Order 0 with every vertex when no core of G_span holds the whole query.
OrderedCore single_tcs(const TemporalGraph& g, std::span<const VertexId> query, const Interval& span);

/// Penalty lookup v*(Δ): the largest k such that the (k, Δ)-core contains the
/// query, 0 if none. Either a dense table over every interval or a dominance
/// query over the query-constrained maximal span-cores. Immutable once built.
class PenaltyTable {
 public:
  PenaltyTable() = default;

  /// Dense form; `values` is indexed by dense_index().
  static PenaltyTable dense(VertexSet query, std::size_t timestamps, std::vector<Order> values);
  /// Dominance form over query-constrained maximal cores.
  static PenaltyTable from_maximal(VertexSet query, std::size_t timestamps, const SpanCoreSet& maximal);

  /// v*(span); throws ArgumentError when span is outside the domain.
  Order at(const Interval& span) const;

  const VertexSet& query() const noexcept { return query_; }
  bool materialized() const noexcept { return !dense_.empty(); }
  std::size_t timestamps() const noexcept { return timestamps_; }

  /// Position of [ts, te] in the dense layout (rows by ts, te >= ts).
  static std::size_t dense_index(std::size_t timestamps, const Interval& span) {
    return span.ts * timestamps - span.ts * (span.ts + 1) / 2 + span.te;
  }

 private:
  struct Dominator {
    Interval span;
    Order k;
  };

  VertexSet query_;
  std::size_t timestamps_ = 0;
  std::vector<Order> dense_;
  std::vector<Dominator> dominators_;  // ascending ts
};

/// v* for every interval through the width-ordered traversal; intervals the
/// traversal never peels get 0.
PenaltyTable penalty_table_full(const TemporalGraph& g, std::span<const VertexId> query);

struct QueryMaximal {
  SpanCoreSet cores;  // query-constrained maximal span-cores
  PenaltyTable penalties;
};

QueryMaximal q_constrained_maximal(const TemporalGraph& g, std::span<const VertexId> query);

struct Segment {
  Interval span;
  Order min_degree = 0;  // v* of the span
  VertexSet members;     // contains the query; the query alone when min_degree is 0
};

/// h contiguous segments covering [0, t_max] in order.
struct Segmentation {
  std::vector<Segment> segments;
  long objective = 0;  // sum of min_degree
};

/// Wall time spent computing penalties and running the dynamic program.
struct SearchTimings {
  double precompute_ms = 0.0;
  double solve_ms = 0.0;
};

/// Exact segmentation by dynamic programming over every timestamp with a
/// dense penalty table. Among optimal segmentations the one with the earliest
/// split points is returned. Throws ArgumentError unless 1 <= h <= |T|.
Segmentation tcs_basic(const TemporalGraph& g, std::span<const VertexId> query, std::size_t h,
                       SearchTimings* timings = nullptr);

/// Timestamps the reduced dynamic program runs over, with the part each
/// source contributes.
struct ReducedDomain {
  std::vector<Timestamp> points;  // ascending, always ends with t_max
  std::vector<Timestamp> covered;  // inside some maximal span
  std::vector<Timestamp> after;    // min(te + 1, t_max) per maximal span
  std::vector<Timestamp> before;   // max(ts - 1, 0) per maximal span
  std::vector<Timestamp> padding;  // earliest remaining timestamps, added until h + 1 points exist
};

ReducedDomain reduced_domain(const TemporalGraph& g, std::size_t h, const SpanCoreSet& query_maximal);

enum class PenaltyBackend { maximal_cores, full_decomposition };

/// Same optimum as tcs_basic, computed over the reduced domain. Boundaries are
/// restricted to its points; each segment spans from just after the previous
/// boundary through its own. Throws ArgumentError unless 1 <= h <= |T|.
Segmentation tcs_efficient(const TemporalGraph& g, std::span<const VertexId> query, std::size_t h,
                           PenaltyBackend backend = PenaltyBackend::maximal_cores,
                           SearchTimings* timings = nullptr);

}  // namespace spancore
