#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spancore/span_cores.hpp"
#include "spancore/temporal_graph.hpp"

namespace spancore::testing {

/// Four vertices a..d over three timestamps:
/// E0 = {ab, ac, bc, cd}, E1 = {ab, ac, bc}, E2 = {ab}.
TemporalGraph fix1();

/// Vertex id of a label; fails loudly when absent.
VertexId id(const TemporalGraph& g, const std::string& label);
VertexSet ids(const TemporalGraph& g, const std::vector<std::string>& labels);

/// Every pair is present independently at every timestamp with probability p.
TemporalGraph random_temporal_graph(std::size_t vertices, std::size_t timestamps, double p, std::uint64_t seed);

/// Edges switch on with probability p_on and, once present, persist with
/// probability p_stay, over `pairs` candidate pairs drawn uniformly.
TemporalGraph markov_temporal_graph(std::size_t vertices, std::size_t timestamps, std::size_t pairs, double p_on,
                                    double p_stay, std::uint64_t seed);

/// Background edges that each live one or two consecutive timestamps, plus one
/// planted pair (x, y) present at [plant_start, plant_start + plant_length).
struct PlantedGraph {
  TemporalGraph graph;
  VertexId x = 0;
  VertexId y = 0;
  Interval planted;
};
PlantedGraph planted_anomaly_graph(std::size_t vertices, std::size_t timestamps, std::size_t background_per_step,
                                   Timestamp plant_start, std::size_t plant_length, std::uint64_t seed);

/// Same graph with vertex ids permuted by `perm` (new id = perm[old id]);
/// labels travel with their vertices.
TemporalGraph relabel(const TemporalGraph& g, const std::vector<VertexId>& perm);

/// Canonical ordering for set comparison.
SpanCoreSet canonical(SpanCoreSet cores);

}  // namespace spancore::testing
