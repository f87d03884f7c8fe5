#pragma once

#include <span>

#include "spancore/temporal_graph.hpp"

namespace spancore {

/// score(v) = score⁺(v) − score⁻(v) for a candidate v outside `current`:
/// score⁺ counts neighbours of v in `current` whose degree there is below
/// `target`, score⁻ = max(0, target − neighbours of v in `current`).
/// Adjacency is that of E_span. `current` must be ascending.
long candidate_score(const TemporalGraph& g, const Interval& span, std::span<const VertexId> current, VertexId v,
                     Order target);

/// Greedy shrink of a community: grows a set from the query, always adding
/// the candidate with the best cached score (query vertices first), until
/// every member has at least `target` neighbours inside it over `span`.
/// Candidates are restricted to `community`, which must contain the query and
/// reach `target` itself. Returns the query when target is 0.
/// Throws ArgumentError when the query is not inside `community` and
/// std::logic_error when the candidates run out first.
VertexSet greedy_minimum_community(const TemporalGraph& g, std::span<const VertexId> query, const Interval& span,
                                   std::span<const VertexId> community, Order target);

}  // namespace spancore
