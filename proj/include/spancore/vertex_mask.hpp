#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "spancore/kernels.hpp"
#include "spancore/types.hpp"

namespace spancore {

/// Fixed-universe bitset over vertex ids.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexMask from(std::size_t universe, std::span<const VertexId> members) {
    VertexMask m(universe);
    for (auto v : members) m.set(v);
    return m;
  }

  std::size_t universe() const noexcept { return universe_; }
  bool test(VertexId v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(VertexId v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VertexId v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const { return kernels::popcount(words_); }

  /// In-place intersection; returns the resulting cardinality.
  std::size_t intersect(const VertexMask& other) { return kernels::and_count(words_, other.words_); }

  /// Members in ascending order.
  VertexSet members() const {
    VertexSet out;
    members_into(out);
    return out;
  }

  /// Overwrites `out` with the members in ascending order, reusing its storage.
  void members_into(VertexSet& out) const {
    out.clear();
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        out.push_back(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace spancore
