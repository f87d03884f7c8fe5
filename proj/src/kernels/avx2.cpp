// AVX2 variants. This translation unit is compiled with -mavx2 -mpopcnt and
// must only be entered after avx2::supported() returned true.

#include "spancore/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace spancore::kernels::avx2 {

bool supported() noexcept {
#if defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

namespace {

inline std::size_t popcount4(__m256i v) {
  return static_cast<std::size_t>(_mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0))) +
                                  _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1))) +
                                  _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2))) +
                                  _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3))));
}

}  // namespace

std::size_t and_count(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  const std::size_t n = dst.size();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    const __m256i r = _mm256_and_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s));
    _mm256_storeu_si256(d, r);
    count += popcount4(r);
  }
  for (; i < n; ++i) {
    dst[i] &= src[i];
    count += static_cast<std::size_t>(_mm_popcnt_u64(dst[i]));
  }
  return count;
}

std::size_t popcount(std::span<const std::uint64_t> words) {
  const std::size_t n = words.size();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    count += popcount4(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + i)));
  }
  for (; i < n; ++i) count += static_cast<std::size_t>(_mm_popcnt_u64(words[i]));
  return count;
}

std::size_t select_greater(std::span<const std::uint32_t> values, std::uint32_t threshold,
                           std::uint32_t* out) {
  const std::size_t n = values.size();
  // Unsigned compare through the signed one: flip the sign bit on both sides.
  const __m256i bias = _mm256_set1_epi32(static_cast<int>(0x80000000u));
  const __m256i thr = _mm256_xor_si256(_mm256_set1_epi32(static_cast<int>(threshold)), bias);
  std::size_t written = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_xor_si256(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i)), bias);
    auto mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(v, thr))));
    while (mask != 0) {
      const int bit = std::countr_zero(mask);
      out[written++] = static_cast<std::uint32_t>(i + static_cast<std::size_t>(bit));
      mask &= mask - 1;
    }
  }
  for (; i < n; ++i) {
    if (values[i] > threshold) out[written++] = static_cast<std::uint32_t>(i);
  }
  return written;
}

ArgMin argmin_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  const std::size_t n = a.size();
  if (n < 8) {
    ArgMin best{0, a[0] - b[0]};
    for (std::size_t i = 1; i < n; ++i) {
      const std::int32_t d = a[i] - b[i];
      if (d < best.value) best = {i, d};
    }
    return best;
  }

  __m256i vmin = _mm256_sub_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data())),
                                  _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data())));
  __m256i vidx = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  __m256i cur = vidx;
  const __m256i step = _mm256_set1_epi32(8);
  std::size_t i = 8;
  for (; i + 8 <= n; i += 8) {
    cur = _mm256_add_epi32(cur, step);
    const __m256i d = _mm256_sub_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i)));
    // Strictly smaller only: each lane keeps its earliest minimum.
    const __m256i lt = _mm256_cmpgt_epi32(vmin, d);
    vmin = _mm256_blendv_epi8(vmin, d, lt);
    vidx = _mm256_blendv_epi8(vidx, cur, lt);
  }

  alignas(32) std::int32_t mins[8];
  alignas(32) std::int32_t idxs[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(mins), vmin);
  _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), vidx);
  ArgMin best{static_cast<std::size_t>(idxs[0]), mins[0]};
  for (int lane = 1; lane < 8; ++lane) {
    const auto idx = static_cast<std::size_t>(idxs[lane]);
    if (mins[lane] < best.value || (mins[lane] == best.value && idx < best.index)) {
      best = {idx, mins[lane]};
    }
  }
  for (; i < n; ++i) {
    const std::int32_t d = a[i] - b[i];
    if (d < best.value) best = {i, d};
  }
  return best;
}

}  // namespace spancore::kernels::avx2
