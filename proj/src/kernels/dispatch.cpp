#include <atomic>
#include <cstdlib>
#include <string_view>

#include "spancore/kernels.hpp"

namespace spancore::kernels {

#if !defined(SPANCORE_HAVE_AVX2)
// Non-x86 builds: the AVX2 entry points exist but are never selected.
namespace avx2 {
bool supported() noexcept { return false; }
std::size_t and_count(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  return scalar::and_count(dst, src);
}
std::size_t popcount(std::span<const std::uint64_t> words) { return scalar::popcount(words); }
std::size_t select_greater(std::span<const std::uint32_t> values, std::uint32_t threshold,
                           std::uint32_t* out) {
  return scalar::select_greater(values, threshold, out);
}
ArgMin argmin_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return scalar::argmin_diff(a, b);
}
}  // namespace avx2
#endif

namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("SPANCORE_ISA"); env != nullptr && std::string_view(env) == "scalar") {
    return Isa::scalar;
  }
  return avx2::supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

Isa select_isa(Isa isa) noexcept {
  if (isa == Isa::avx2 && !avx2::supported()) isa = Isa::scalar;
  current().store(isa, std::memory_order_relaxed);
  return isa;
}

std::size_t and_count(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  return active_isa() == Isa::avx2 ? avx2::and_count(dst, src) : scalar::and_count(dst, src);
}

std::size_t popcount(std::span<const std::uint64_t> words) {
  return active_isa() == Isa::avx2 ? avx2::popcount(words) : scalar::popcount(words);
}

std::size_t select_greater(std::span<const std::uint32_t> values, std::uint32_t threshold,
                           std::uint32_t* out) {
  return active_isa() == Isa::avx2 ? avx2::select_greater(values, threshold, out)
                                   : scalar::select_greater(values, threshold, out);
}

ArgMin argmin_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  return active_isa() == Isa::avx2 ? avx2::argmin_diff(a, b) : scalar::argmin_diff(a, b);
}

}  // namespace spancore::kernels
