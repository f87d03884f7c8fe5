#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spancore/types.hpp"

namespace spancore {

/// How raw times were bucketed into timestamps: t = (raw - origin) / window.
struct GraphTiming {
  std::int64_t origin = 0;
  std::int64_t window = 1;
};

/// Immutable discrete-time graph: a vertex table and one undirected simple
/// snapshot E_t per timestamp t in [0, t_max]. Safe for concurrent reads.
class TemporalGraph {
 public:
  using Timing = GraphTiming;

  TemporalGraph() = default;

  /// Builds a graph from labels and per-timestamp edge lists. Edges are
  /// canonicalised (u < v) and deduplicated; self-loops are rejected.
  /// Throws ArgumentError on an out-of-range endpoint, a self-loop, a
  /// duplicate label, or an empty snapshot list.
  static TemporalGraph from_snapshots(std::vector<std::string> labels,
                                      std::vector<std::vector<Edge>> snapshots, Timing timing = {});

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_timestamps() const noexcept { return snapshots_.size(); }
  Timestamp t_max() const noexcept { return static_cast<Timestamp>(snapshots_.size() - 1); }
  Interval domain() const noexcept { return {0, t_max()}; }
  const Timing& timing() const noexcept { return timing_; }

  /// Sorted canonical edges of snapshot t.
  std::span<const Edge> snapshot(Timestamp t) const { return snapshots_.at(t); }
  std::size_t total_edges() const noexcept { return total_edges_; }

  /// Neighbours of u in snapshot t, ascending.
  std::span<const VertexId> neighbors(Timestamp t, VertexId u) const;
  std::size_t degree(Timestamp t, VertexId u) const { return neighbors(t, u).size(); }
  bool has_edge(Timestamp t, VertexId u, VertexId v) const;

  const std::string& label(VertexId u) const { return labels_.at(u); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  /// Validates that `span` lies inside [0, t_max]; throws ArgumentError otherwise.
  void check_interval(const Interval& span) const;

 private:
  struct Adjacency {
    // Per snapshot: vertices that have neighbours, their offsets, and the
    // concatenated neighbour lists (both directions).
    std::vector<VertexId> active;
    std::vector<std::uint32_t> offsets;
    std::vector<VertexId> targets;
  };

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<EdgeSet> snapshots_;
  std::vector<Adjacency> adjacency_;
  std::size_t total_edges_ = 0;
  Timing timing_{};
};

/// E_Δ: edges present in every snapshot of `span`.
EdgeSet interval_edges(const TemporalGraph& g, const Interval& span);

/// d_Δ(S, u): neighbours of u inside S over every timestamp of `span`.
/// Throws ArgumentError when u is not in S.
std::size_t induced_degree(const TemporalGraph& g, const Interval& span, std::span<const VertexId> members,
                           VertexId u);

/// Sorted intersection a ∩ b.
EdgeSet intersect_edges(std::span<const Edge> a, std::span<const Edge> b);

/// The family E⁻(t_e) = E_[ts,te] \ E_[ts,te+1] for te in [ts, t*-1], where t*
/// is the largest te with E_[ts,te] non-empty, plus E_[ts,t*] itself.
struct DeltaMinusFamily {
  Timestamp ts = 0;
  std::optional<Timestamp> t_star;  // empty when E_ts is empty
  std::vector<EdgeSet> minus;       // minus[te - ts]
  EdgeSet tail;                     // E_[ts, t*]

  /// E_[ts,te] rebuilt by folding the family back; te must be in [ts, t*].
  EdgeSet edges_at(Timestamp te) const;
};

DeltaMinusFamily delta_minus_sets(const TemporalGraph& g, Timestamp ts);

}  // namespace spancore
