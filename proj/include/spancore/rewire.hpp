#pragma once

#include <cstdint>

#include "spancore/temporal_graph.hpp"

namespace spancore {

struct RewireOptions {
  /// Swap attempts per snapshot = attempts_per_edge * |E_t|.
  std::size_t attempts_per_edge = 10;
};

/// Degree-preserving null model applied independently to every snapshot:
/// pick two edges (u,v), (w,z) with four distinct endpoints and replace them
/// by (u,z), (w,v) when neither new edge is already present. Per-timestamp
/// vertex degrees and edge counts are preserved exactly.
TemporalGraph rewire_null_model(const TemporalGraph& g, std::uint64_t seed, const RewireOptions& options = {});

}  // namespace spancore
