#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "spancore/errors.hpp"
#include "spancore/static_core.hpp"

using namespace spancore;
using namespace spancore::testing;

namespace {

VertexSet range(VertexId n) {
  VertexSet v(n);
  for (VertexId i = 0; i < n; ++i) v[i] = i;
  return v;
}

EdgeSet snapshot_edges(const TemporalGraph& g, Timestamp t) { return EdgeSet(g.snapshot(t).begin(), g.snapshot(t).end()); }

}  // namespace

TEST_CASE("FIX-1 snapshot 0 coreness") {
  const auto g = fix1();
  const auto lab = core_decomposition(range(4), snapshot_edges(g, 0));
  CHECK(lab.of(id(g, "a")) == 2);
  CHECK(lab.of(id(g, "b")) == 2);
  CHECK(lab.of(id(g, "c")) == 2);
  CHECK(lab.of(id(g, "d")) == 1);
  CHECK(lab.k_max == 2);
  CHECK(lab.core(2) == ids(g, {"a", "b", "c"}));
  CHECK_THROWS_AS(lab.of(9), ArgumentError);
}

TEST_CASE("small static shapes") {
  CHECK(core_decomposition(range(3), EdgeSet{{0, 1}, {1, 2}, {0, 2}}).coreness == std::vector<Order>{2, 2, 2});
  const auto empty = core_decomposition(range(2), EdgeSet{});
  CHECK(empty.coreness == std::vector<Order>{0, 0});
  CHECK(innermost_core(range(2), EdgeSet{}) == OrderedCore{0, {0, 1}});
  CHECK(innermost_core(range(4), EdgeSet{{0, 1}, {0, 2}, {0, 3}}) == OrderedCore{1, {0, 1, 2, 3}});
  CHECK(innermost_core(range(4), EdgeSet{{0, 1}}) == OrderedCore{1, {0, 1}});
}

TEST_CASE("innermost and query-constrained cores on FIX-1") {
  const auto g = fix1();
  const auto e0 = snapshot_edges(g, 0);
  CHECK(innermost_core(range(4), e0) == OrderedCore{2, ids(g, {"a", "b", "c"})});
  CHECK(q_constrained_decomposition(range(4), e0, ids(g, {"d"})) == OrderedCore{1, ids(g, {"a", "b", "c", "d"})});
  CHECK(q_constrained_decomposition(range(4), e0, ids(g, {"a"})) == OrderedCore{2, ids(g, {"a", "b", "c"})});
  const auto e01 = interval_edges(g, {0, 1});
  CHECK(q_constrained_decomposition(range(4), e01, ids(g, {"d"})) == OrderedCore{0, range(4)});
  CHECK(q_constrained_decomposition(range(4), e0, VertexSet{}) == innermost_core(range(4), e0));
  CHECK_THROWS_AS(q_constrained_decomposition(range(3), EdgeSet{{0, 1}}, VertexSet{3}), ArgumentError);
}

TEST_CASE("endpoints outside the vertex set are rejected") {
  CHECK_THROWS_AS(core_decomposition(range(2), EdgeSet{{0, 2}}), ArgumentError);
  CorePeeler p(10);
  CHECK_THROWS_AS(p.peel(VertexSet{1, 2}, EdgeSet{{1, 3}}), ArgumentError);
  // The peeler stays usable after a rejected call.
  CHECK(p.peel(VertexSet{1, 2, 3}, EdgeSet{{1, 2}, {2, 3}, {1, 3}}) == 2);
}

TEST_CASE("peeling matches the deletion fixed point on random graphs") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 150; ++round) {
    const VertexId n = static_cast<VertexId>(2 + rng() % 11);
    const double p = 0.1 + 0.15 * static_cast<double>(rng() % 5);
    std::bernoulli_distribution coin(p);
    EdgeSet edges;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    // A sparse, shifted vertex universe checks local/global index mapping.
    VertexSet verts;
    EdgeSet shifted;
    for (VertexId u = 0; u < n; ++u) verts.push_back(3 * u + 1);
    for (const auto& e : edges) shifted.push_back({3 * e.u + 1, 3 * e.v + 1});
    const auto lab = core_decomposition(verts, shifted);
    for (Order k = 0; k <= lab.k_max + 1; ++k) {
      const auto expected = oracle::k_core(verts, shifted, k);
      CHECK(lab.core(k) == expected);
      if (k > 0) {
        const auto prev = lab.core(k - 1);
        const auto cur = lab.core(k);
        CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
      }
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::size_t deg = 0;
      for (const auto& e : shifted) deg += (e.u == verts[i]) + (e.v == verts[i]);
      CHECK(lab.coreness[i] <= deg);
    }
  }
}
