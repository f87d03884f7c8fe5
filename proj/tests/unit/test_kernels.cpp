#include <doctest.h>

#include <random>
#include <vector>

#include "spancore/kernels.hpp"
#include "spancore/vertex_mask.hpp"

using namespace spancore;
namespace k = spancore::kernels;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng();
  return w;
}

}  // namespace

TEST_CASE("popcount and and_count agree between scalar and avx2 across lengths") {
  if (!k::avx2::supported()) return;
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n < 70; ++n) {
    auto a = random_words(rng, n), b = random_words(rng, n);
    CHECK(k::scalar::popcount(a) == k::avx2::popcount(a));
    auto a1 = a, a2 = a;
    const auto c1 = k::scalar::and_count(a1, b);
    const auto c2 = k::avx2::and_count(a2, b);
    CHECK(c1 == c2);
    CHECK(a1 == a2);
  }
}

TEST_CASE("select_greater agrees between scalar and avx2, including sign-bit values") {
  if (!k::avx2::supported()) return;
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n < 80; ++n) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = (rng() & 1) ? static_cast<std::uint32_t>(rng() % 6) : static_cast<std::uint32_t>(rng());
    for (std::uint32_t thr : {0u, 2u, 5u, 0x7fffffffu, 0x80000000u, 0xfffffffeu}) {
      std::vector<std::uint32_t> o1(n + 1), o2(n + 1);
      const auto c1 = k::scalar::select_greater(v, thr, o1.data());
      const auto c2 = k::avx2::select_greater(v, thr, o2.data());
      REQUIRE(c1 == c2);
      o1.resize(c1);
      o2.resize(c2);
      CHECK(o1 == o2);
    }
  }
}

TEST_CASE("argmin_diff agrees between scalar and avx2 and reports the first index on ties") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n < 90; ++n) {
    std::vector<std::int32_t> a(n), b(n);
    for (auto& x : a) x = static_cast<std::int32_t>(rng() % 5) - 2;
    for (auto& x : b) x = static_cast<std::int32_t>(rng() % 3);
    const auto ref = k::scalar::argmin_diff(a, b);
    std::size_t first = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (a[i] - b[i] < a[first] - b[first]) first = i;
    }
    CHECK(ref.index == first);
    CHECK(ref.value == a[first] - b[first]);
    if (k::avx2::supported()) {
      const auto simd = k::avx2::argmin_diff(a, b);
      CHECK(simd.index == ref.index);
      CHECK(simd.value == ref.value);
    }
  }
}

TEST_CASE("argmin_diff handles extreme values without overflow in the unset sentinel") {
  std::vector<std::int32_t> a = {2147483647, 5, 2147483647, -3, -3};
  std::vector<std::int32_t> b = {0, 1, 2, 0, 0};
  const auto r = k::argmin_diff(a, b);
  CHECK(r.index == 3);
  CHECK(r.value == -3);
}

TEST_CASE("select_isa falls back and reports the active variant") {
  const auto before = k::active_isa();
  CHECK(k::select_isa(k::Isa::scalar) == k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  CHECK(k::isa_name(k::Isa::scalar) == "scalar");
  const auto chosen = k::select_isa(k::Isa::avx2);
  CHECK(chosen == (k::avx2::supported() ? k::Isa::avx2 : k::Isa::scalar));
  k::select_isa(before);
}

TEST_CASE("VertexMask intersection and members") {
  auto a = VertexMask::from(130, std::vector<VertexId>{0, 5, 64, 65, 129});
  auto b = VertexMask::from(130, std::vector<VertexId>{5, 64, 100, 129});
  CHECK(a.count() == 5);
  CHECK(a.intersect(b) == 3);
  CHECK(a.members() == VertexSet{5, 64, 129});
  a.reset(64);
  CHECK_FALSE(a.test(64));
  CHECK(a.count() == 2);
}
