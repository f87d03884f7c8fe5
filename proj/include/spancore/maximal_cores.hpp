#pragma once

#include <span>

#include "spancore/span_cores.hpp"

namespace spancore {

/// True when (k, span) of `a` is dominated by `b`: a.k <= b.k and a.span ⊑ b.span.
inline bool dominated_by(const SpanCore& a, const SpanCore& b) {
  return a.k <= b.k && a.span.within(b.span);
}

/// Non-dominated elements of a span-core collection. Only the highest order
/// per span survives, then any core dominated by another is dropped.
SpanCoreSet filter_maximal(const SpanCoreSet& all);

/// Maximal span-cores computed directly, top-down: start times ascending, end
/// times descending from the last non-empty one. Each interval is peeled from
/// the vertices whose degree exceeds the best order already seen on its two
/// immediate super-intervals, and its innermost core is kept only if it beats
/// that bound. Output equals filter_maximal(span_cores(g)).
SpanCoreSet maximal_span_cores(const TemporalGraph& g, DecompositionStats* stats = nullptr);

/// Maximal elements among the span-cores that contain every query vertex,
/// by the same top-down scan with the query-containment constraint. An empty
/// query gives maximal_span_cores().
SpanCoreSet q_constrained_maximal_cores(const TemporalGraph& g, std::span<const VertexId> query,
                                        DecompositionStats* stats = nullptr);

}  // namespace spancore
