#pragma once

// Data-parallel inner loops used by the decomposition and segmentation code.
//
// Every kernel has a portable scalar reference in `kernels::scalar` and, on
// x86-64, an AVX2 variant in `kernels::avx2`. The unqualified entry points
// dispatch at runtime to the best variant the CPU supports. Set the
// environment variable SPANCORE_ISA=scalar to pin the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace spancore::kernels {

enum class Isa { scalar, avx2 };

struct ArgMin {
  std::size_t index = 0;
  std::int32_t value = 0;
};

namespace scalar {
std::size_t and_count(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
std::size_t popcount(std::span<const std::uint64_t> words);
std::size_t select_greater(std::span<const std::uint32_t> values, std::uint32_t threshold,
                           std::uint32_t* out);
ArgMin argmin_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
}  // namespace scalar

namespace avx2 {
bool supported() noexcept;
std::size_t and_count(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
std::size_t popcount(std::span<const std::uint64_t> words);
std::size_t select_greater(std::span<const std::uint32_t> values, std::uint32_t threshold,
                           std::uint32_t* out);
ArgMin argmin_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
}  // namespace avx2

/// ISA currently selected by the dispatcher.
Isa active_isa() noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// Override the dispatcher. Requesting an ISA the CPU lacks falls back to scalar.
/// Returns the ISA actually selected.
Isa select_isa(Isa isa) noexcept;

/// dst &= src word-wise; returns the popcount of the result.
/// Both spans must have the same length.
std::size_t and_count(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

std::size_t popcount(std::span<const std::uint64_t> words);

/// Writes every index i with values[i] > threshold to `out` (ascending) and
/// returns how many were written. `out` needs room for values.size() entries.
std::size_t select_greater(std::span<const std::uint32_t> values, std::uint32_t threshold,
                           std::uint32_t* out);

/// Minimum of a[i] - b[i] over i, reporting the smallest index on ties.
/// Requires a non-empty input with a.size() == b.size().
ArgMin argmin_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

}  // namespace spancore::kernels
