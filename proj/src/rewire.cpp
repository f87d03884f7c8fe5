#include "spancore/rewire.hpp"

#include <random>
#include <unordered_set>

namespace spancore {

TemporalGraph rewire_null_model(const TemporalGraph& g, std::uint64_t seed, const RewireOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Edge>> snapshots;
  snapshots.reserve(g.num_timestamps());

  for (Timestamp t = 0; t <= g.t_max(); ++t) {
    auto snap = g.snapshot(t);
    std::vector<Edge> edges(snap.begin(), snap.end());
    const std::size_t m = edges.size();
    if (m >= 2) {
      std::unordered_set<Edge> present(edges.begin(), edges.end());
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      std::bernoulli_distribution flip(0.5);
      const std::size_t attempts = options.attempts_per_edge * m;
      for (std::size_t a = 0; a < attempts; ++a) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        if (i == j) continue;
        VertexId u = edges[i].u, v = edges[i].v;
        VertexId w = edges[j].u, z = edges[j].v;
        if (flip(rng)) std::swap(w, z);
        if (u == w || u == z || v == w || v == z) continue;
        const Edge uz = Edge::make(u, z);
        const Edge wv = Edge::make(w, v);
        if (present.contains(uz) || present.contains(wv)) continue;
        present.erase(edges[i]);
        present.erase(edges[j]);
        present.insert(uz);
        present.insert(wv);
        edges[i] = uz;
        edges[j] = wv;
      }
    }
    snapshots.push_back(std::move(edges));
  }
  return TemporalGraph::from_snapshots(g.labels(), std::move(snapshots), g.timing());
}

}  // namespace spancore
