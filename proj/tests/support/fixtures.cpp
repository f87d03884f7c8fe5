#include "fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace spancore::testing {

TemporalGraph fix1() {
  // a=0 b=1 c=2 d=3
  return TemporalGraph::from_snapshots({"a", "b", "c", "d"}, {
                                                                 {{0, 1}, {0, 2}, {1, 2}, {2, 3}},
                                                                 {{0, 1}, {0, 2}, {1, 2}},
                                                                 {{0, 1}},
                                                             });
}

VertexId id(const TemporalGraph& g, const std::string& label) {
  auto v = g.find(label);
  if (!v) throw std::out_of_range("no vertex labelled " + label);
  return *v;
}

VertexSet ids(const TemporalGraph& g, const std::vector<std::string>& labels) {
  VertexSet out;
  for (const auto& l : labels) out.push_back(id(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

TemporalGraph random_temporal_graph(std::size_t vertices, std::size_t timestamps, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<Edge>> snaps(timestamps);
  for (auto& s : snaps) {
    for (VertexId u = 0; u < vertices; ++u) {
      for (VertexId v = u + 1; v < vertices; ++v) {
        if (coin(rng)) s.push_back({u, v});
      }
    }
  }
  return TemporalGraph::from_snapshots(numbered(vertices), std::move(snaps));
}

TemporalGraph markov_temporal_graph(std::size_t vertices, std::size_t timestamps, std::size_t pairs, double p_on,
                                    double p_stay, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(vertices - 1));
  std::set<Edge> chosen;
  while (chosen.size() < pairs) {
    const VertexId a = pick(rng), b = pick(rng);
    if (a != b) chosen.insert(Edge::make(a, b));
  }
  const std::vector<Edge> candidates(chosen.begin(), chosen.end());
  std::bernoulli_distribution on(p_on), stay(p_stay);
  std::vector<char> alive(candidates.size(), 0);
  std::vector<std::vector<Edge>> snaps(timestamps);
  for (auto& s : snaps) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      alive[i] = alive[i] ? stay(rng) : on(rng);
      if (alive[i]) s.push_back(candidates[i]);
    }
  }
  return TemporalGraph::from_snapshots(numbered(vertices), std::move(snaps));
}

PlantedGraph planted_anomaly_graph(std::size_t vertices, std::size_t timestamps, std::size_t background_per_step,
                                   Timestamp plant_start, std::size_t plant_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlantedGraph out;
  out.x = static_cast<VertexId>(vertices);
  out.y = static_cast<VertexId>(vertices + 1);
  out.planted = {plant_start, static_cast<Timestamp>(plant_start + plant_length - 1)};
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(vertices - 1));
  std::bernoulli_distribution second(0.5);
  std::vector<std::set<Edge>> snaps(timestamps);
  for (Timestamp t = 0; t < timestamps; ++t) {
    std::size_t added = 0;
    while (added < background_per_step) {
      const VertexId a = pick(rng), b = pick(rng);
      if (a == b) continue;
      const Edge e = Edge::make(a, b);
      // Lifetimes stay within two steps: skip pairs live in either neighbouring step.
      if (snaps[t].count(e) || (t > 0 && snaps[t - 1].count(e))) continue;
      if (t + 1 < timestamps && snaps[t + 1].count(e)) continue;
      snaps[t].insert(e);
      ++added;
      if (t + 1 < timestamps && second(rng) && !(t + 2 < timestamps && snaps[t + 2].count(e))) snaps[t + 1].insert(e);
    }
  }
  for (Timestamp t = out.planted.ts; t <= out.planted.te; ++t) snaps[t].insert(Edge::make(out.x, out.y));

  auto labels = numbered(vertices);
  labels.push_back("x");
  labels.push_back("y");
  std::vector<std::vector<Edge>> lists;
  for (auto& s : snaps) lists.emplace_back(s.begin(), s.end());
  out.graph = TemporalGraph::from_snapshots(std::move(labels), std::move(lists));
  return out;
}

TemporalGraph relabel(const TemporalGraph& g, const std::vector<VertexId>& perm) {
  std::vector<std::string> labels(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u) labels[perm[u]] = g.label(u);
  std::vector<std::vector<Edge>> snaps(g.num_timestamps());
  for (Timestamp t = 0; t <= g.t_max(); ++t) {
    for (const auto& e : g.snapshot(t)) snaps[t].push_back(Edge::make(perm[e.u], perm[e.v]));
  }
  return TemporalGraph::from_snapshots(std::move(labels), std::move(snaps), g.timing());
}

SpanCoreSet canonical(SpanCoreSet cores) {
  std::sort(cores.begin(), cores.end(), [](const SpanCore& a, const SpanCore& b) {
    return std::tie(a.span, a.k, a.members) < std::tie(b.span, b.k, b.members);
  });
  return cores;
}

}  // namespace spancore::testing
