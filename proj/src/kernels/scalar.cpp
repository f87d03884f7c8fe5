#include "spancore/kernels.hpp"

#include <bit>

namespace spancore::kernels::scalar {

std::size_t and_count(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] &= src[i];
    count += static_cast<std::size_t>(std::popcount(dst[i]));
  }
  return count;
}

std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t count = 0;
  for (auto w : words) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::size_t select_greater(std::span<const std::uint32_t> values, std::uint32_t threshold,
                           std::uint32_t* out) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > threshold) out[n++] = static_cast<std::uint32_t>(i);
  }
  return n;
}

ArgMin argmin_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  ArgMin best{0, a[0] - b[0]};
  for (std::size_t i = 1; i < a.size(); ++i) {
    const std::int32_t d = a[i] - b[i];
    if (d < best.value) best = {i, d};
  }
  return best;
}

}  // namespace spancore::kernels::scalar
