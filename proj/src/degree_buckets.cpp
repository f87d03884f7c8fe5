#include "spancore/degree_buckets.hpp"

#include "spancore/errors.hpp"

namespace spancore {

std::span<const VertexId> DegreeBuckets::above(long k) const {
  if (k < 0) throw ArgumentError("degree threshold must be non-negative");
  const auto idx = static_cast<std::size_t>(k);
  if (idx >= buckets_in_use_) return {};
  return buckets_[idx];
}

void DegreeBuckets::reset() {
  for (VertexId u : touched_) degree_[u] = 0;
  touched_.clear();
  for (std::size_t k = 0; k < buckets_in_use_; ++k) buckets_[k].clear();
  buckets_in_use_ = 0;
  stored_ = 0;
}

}  // namespace spancore
