#pragma once

#include <span>
#include <vector>

#include "spancore/types.hpp"

namespace spancore {

/// Degree-indexed vertex buckets for a growing edge set: bucket(k) holds every
/// vertex whose degree exceeds k. A vertex of degree d is stored in buckets
/// 0..d-1, so total storage is twice the number of edges added.
///
/// Degrees only grow; reset() clears the touched state in time proportional to
/// what was added.
class DegreeBuckets {
 public:
  explicit DegreeBuckets(std::size_t universe = 0) : degree_(universe, 0) {}

  void add_edge(const Edge& e) {
    bump(e.u);
    bump(e.v);
  }
  void add_edges(std::span<const Edge> edges) {
    for (const auto& e : edges) add_edge(e);
  }

  /// Vertices with degree > k, in insertion order. Throws ArgumentError for k < 0.
  std::span<const VertexId> above(long k) const;

  std::uint32_t degree(VertexId u) const { return degree_.at(u); }
  std::size_t stored_entries() const noexcept { return stored_; }
  std::size_t max_degree() const noexcept { return buckets_in_use_; }

  void reset();

 private:
  void bump(VertexId u) {
    const std::uint32_t d = degree_[u]++;
    if (d == 0) touched_.push_back(u);
    if (d >= buckets_.size()) buckets_.resize(d + 1);
    if (d >= buckets_in_use_) buckets_in_use_ = d + 1;
    buckets_[d].push_back(u);
    ++stored_;
  }

  std::vector<std::uint32_t> degree_;
  std::vector<std::vector<VertexId>> buckets_;
  std::vector<VertexId> touched_;
  std::size_t buckets_in_use_ = 0;
  std::size_t stored_ = 0;
};

}  // namespace spancore
