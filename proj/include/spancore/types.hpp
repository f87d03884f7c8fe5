#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace spancore {

using VertexId = std::uint32_t;
using Timestamp = std::uint32_t;
using Order = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Closed discrete interval [ts, te] of timestamp indices.
struct Interval {
  Timestamp ts = 0;
  Timestamp te = 0;

  constexpr std::uint32_t length() const { return te - ts + 1; }
  constexpr bool contains(Timestamp t) const { return ts <= t && t <= te; }
  /// True when *this is a sub-interval of `other` (this ⊑ other).
  constexpr bool within(const Interval& other) const {
    return other.ts <= ts && te <= other.te;
  }
  constexpr auto operator<=>(const Interval&) const = default;
};

/// Undirected edge, always stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static constexpr Edge make(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free list of canonical edges.
using EdgeSet = std::vector<Edge>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

}  // namespace spancore

template <>
struct std::hash<spancore::Interval> {
  std::size_t operator()(const spancore::Interval& i) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{i.ts} << 32) | i.te);
  }
};

template <>
struct std::hash<spancore::Edge> {
  std::size_t operator()(const spancore::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.u} << 32) | e.v);
  }
};
