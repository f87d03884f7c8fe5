#include "spancore/static_core.hpp"

#include <algorithm>
#include <limits>

#include "spancore/errors.hpp"
#include "spancore/kernels.hpp"

namespace spancore {

namespace {
constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

VertexSet sorted_unique(std::span<const VertexId> vertices) {
  VertexSet out(vertices.begin(), vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t universe_for(std::span<const VertexId> vertices) {
  return vertices.empty() ? 0 : static_cast<std::size_t>(vertices.back()) + 1;
}
}  // namespace

Order CoreLabeling::of(VertexId u) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
  if (it == vertices.end() || *it != u) throw ArgumentError("vertex not in labeling");
  return coreness[static_cast<std::size_t>(it - vertices.begin())];
}

VertexSet CoreLabeling::core(Order k) const {
  VertexSet out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (coreness[i] >= k) out.push_back(vertices[i]);
  }
  return out;
}

CorePeeler::CorePeeler(std::size_t universe) : universe_(universe), local_of_(universe, kAbsent) {}

Order CorePeeler::peel(std::span<const VertexId> vertices, std::span<const Edge> edges) {
  const std::size_t n = vertices.size();
  count_ = n;
  last_vertices_ = vertices;
  processed_ += n;
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i] >= universe_) throw ArgumentError("vertex id beyond peeler universe");
    local_of_[vertices[i]] = static_cast<std::uint32_t>(i);
  }
  struct Cleanup {
    CorePeeler* self;
    std::span<const VertexId> vs;
    ~Cleanup() {
      for (auto v : vs) self->local_of_[v] = kAbsent;
    }
  } cleanup{this, vertices};

  degree_.assign(n, 0);
  local_edges_.resize(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const auto a = e.u < universe_ ? local_of_[e.u] : kAbsent;
    const auto b = e.v < universe_ ? local_of_[e.v] : kAbsent;
    if (a == kAbsent || b == kAbsent) throw ArgumentError("edge endpoint outside the vertex set");
    ++degree_[a];
    ++degree_[b];
    local_edges_[2 * i] = a;
    local_edges_[2 * i + 1] = b;
  }

  offsets_.resize(n + 1);
  offsets_[0] = 0;
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree_[i];
  adjacency_.resize(offsets_[n]);
  pos_.assign(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto a = local_edges_[2 * i];
    const auto b = local_edges_[2 * i + 1];
    adjacency_[pos_[a]++] = b;
    adjacency_[pos_[b]++] = a;
  }

  // Bucket sort by degree; within a bucket vertices keep ascending id order.
  std::uint32_t max_degree = 0;
  for (std::size_t i = 0; i < n; ++i) max_degree = std::max(max_degree, degree_[i]);
  bin_.assign(max_degree + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++bin_[degree_[i]];
  std::uint32_t start = 0;
  for (auto& b : bin_) {
    const std::uint32_t size = b;
    b = start;
    start += size;
  }
  order_.resize(n);
  pos_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    pos_[i] = bin_[degree_[i]]++;
    order_[pos_[i]] = static_cast<std::uint32_t>(i);
  }
  for (std::size_t d = bin_.size(); d-- > 1;) bin_[d] = bin_[d - 1];
  if (!bin_.empty()) bin_[0] = 0;

  core_.resize(n);
  Order k_max = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = order_[i];
    core_[v] = degree_[v];
    k_max = std::max(k_max, core_[v]);
    for (std::uint32_t j = offsets_[v]; j < offsets_[v + 1]; ++j) {
      const std::uint32_t u = adjacency_[j];
      if (degree_[u] > degree_[v]) {
        const std::uint32_t du = degree_[u];
        const std::uint32_t pu = pos_[u];
        const std::uint32_t pw = bin_[du];
        const std::uint32_t w = order_[pw];
        if (u != w) {
          pos_[u] = pw;
          order_[pu] = w;
          pos_[w] = pu;
          order_[pw] = u;
        }
        ++bin_[du];
        --degree_[u];
      }
    }
  }
  return k_max;
}

VertexSet CorePeeler::members_at_least(Order k) {
  VertexSet out;
  if (k == 0) {
    out.assign(last_vertices_.begin(), last_vertices_.end());
    return out;
  }
  select_.resize(count_);
  const std::size_t m = kernels::select_greater(coreness(), k - 1, select_.data());
  out.resize(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = last_vertices_[select_[i]];
  return out;
}

CoreLabeling core_decomposition(std::span<const VertexId> vertices, std::span<const Edge> edges) {
  CoreLabeling labeling;
  labeling.vertices = sorted_unique(vertices);
  CorePeeler peeler(universe_for(labeling.vertices));
  labeling.k_max = peeler.peel(labeling.vertices, edges);
  auto c = peeler.coreness();
  labeling.coreness.assign(c.begin(), c.end());
  return labeling;
}

OrderedCore innermost_core(std::span<const VertexId> vertices, std::span<const Edge> edges) {
  const VertexSet vs = sorted_unique(vertices);
  CorePeeler peeler(universe_for(vs));
  const Order k = peeler.peel(vs, edges);
  if (k == 0) return {0, vs};
  return {k, peeler.members_at_least(k)};
}

OrderedCore q_constrained_decomposition(std::span<const VertexId> vertices, std::span<const Edge> edges,
                                        std::span<const VertexId> query) {
  const VertexSet vs = sorted_unique(vertices);
  for (auto q : query) {
    if (!std::binary_search(vs.begin(), vs.end(), q)) throw ArgumentError("query vertex outside the vertex set");
  }
  CorePeeler peeler(universe_for(vs));
  const Order k_max = peeler.peel(vs, edges);
  Order best = k_max;
  if (!query.empty()) {
    auto core = peeler.coreness();
    for (auto q : query) {
      const auto idx = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), q) - vs.begin());
      best = std::min(best, core[idx]);
    }
  }
  if (best == 0) return {0, vs};
  return {best, peeler.members_at_least(best)};
}

}  // namespace spancore
