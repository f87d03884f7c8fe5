#pragma once

#include <span>
#include <vector>

#include "spancore/types.hpp"

namespace spancore {

/// Coreness of every vertex of a static graph.
struct CoreLabeling {
  VertexSet vertices;           // ascending
  std::vector<Order> coreness;  // parallel to `vertices`
  Order k_max = 0;

  /// Coreness of u; throws ArgumentError when u is not a vertex.
  Order of(VertexId u) const;
  /// The k-core {u | coreness(u) >= k}, ascending.
  VertexSet core(Order k) const;
};

/// An order together with the core of that order.
struct OrderedCore {
  Order order = 0;
  VertexSet members;

  bool operator==(const OrderedCore&) const = default;
};

/// Reusable bucket-peeling engine. Scratch storage is sized to the vertex
/// universe once, so repeated peels of subgraphs avoid reallocations.
/// Not thread-safe; use one instance per thread.
class CorePeeler {
 public:
  explicit CorePeeler(std::size_t universe);

  /// Peels (vertices, edges). `vertices` must be ascending and duplicate-free;
  /// every edge endpoint must be among them (ArgumentError otherwise).
  /// Returns k_max; per-vertex coreness is available through coreness().
  Order peel(std::span<const VertexId> vertices, std::span<const Edge> edges);

  /// Coreness from the last peel, parallel to the vertices passed in.
  std::span<const Order> coreness() const noexcept { return {core_.data(), count_}; }

  /// Vertices of the last peel with coreness >= k, ascending.
  VertexSet members_at_least(Order k);

  /// Total number of vertices fed to peel() since construction.
  std::size_t processed_vertices() const noexcept { return processed_; }

 private:
  std::size_t universe_;
  std::vector<std::uint32_t> local_of_;
  std::span<const VertexId> last_vertices_;
  std::size_t count_ = 0;
  std::size_t processed_ = 0;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::uint32_t> local_edges_;  // endpoint pairs in local ids
  std::vector<std::uint32_t> bin_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> order_;
  std::vector<Order> core_;
  std::vector<std::uint32_t> select_;
};

/// Full core decomposition by bucketed peeling, linear in |V| + |E|.
/// Vertices without edges get coreness 0.
CoreLabeling core_decomposition(std::span<const VertexId> vertices, std::span<const Edge> edges);

/// The non-empty core of highest order; (0, vertices) for an edgeless graph.
OrderedCore innermost_core(std::span<const VertexId> vertices, std::span<const Edge> edges);

/// Highest k whose k-core contains every vertex of `query`, and that core.
/// Returns (0, vertices) when some query vertex is outside the 1-core; an
/// empty query gives the innermost core. Throws ArgumentError when the query
/// is not a subset of the vertices.
OrderedCore q_constrained_decomposition(std::span<const VertexId> vertices, std::span<const Edge> edges,
                                        std::span<const VertexId> query);

}  // namespace spancore
