#include "spancore/community_search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "spancore/errors.hpp"
#include "spancore/kernels.hpp"
#include "spancore/maximal_cores.hpp"

namespace spancore {

VertexSet normalize_query(const TemporalGraph& g, std::span<const VertexId> query) {
  VertexSet q(query.begin(), query.end());
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  if (!q.empty() && q.back() >= g.num_vertices()) {
    throw ArgumentError("query vertex " + std::to_string(q.back()) + " is not in the graph");
  }
  return q;
}

OrderedCore single_tcs(const TemporalGraph& g, std::span<const VertexId> query, const Interval& span) {
  g.check_interval(span);
  const VertexSet q = normalize_query(g, query);
  VertexSet everyone(g.num_vertices());
  std::iota(everyone.begin(), everyone.end(), VertexId{0});
  const EdgeSet edges = interval_edges(g, span);
  return q_constrained_decomposition(everyone, edges, q);
}

PenaltyTable PenaltyTable::dense(VertexSet query, std::size_t timestamps, std::vector<Order> values) {
  if (values.size() != timestamps * (timestamps + 1) / 2) throw ArgumentError("dense penalty table has wrong size");
  PenaltyTable t;
  t.query_ = std::move(query);
  t.timestamps_ = timestamps;
  t.dense_ = std::move(values);
  return t;
}

PenaltyTable PenaltyTable::from_maximal(VertexSet query, std::size_t timestamps, const SpanCoreSet& maximal) {
  PenaltyTable t;
  t.query_ = std::move(query);
  t.timestamps_ = timestamps;
  for (const auto& c : maximal) t.dominators_.push_back({c.span, c.k});
  std::sort(t.dominators_.begin(), t.dominators_.end(),
            [](const Dominator& a, const Dominator& b) { return a.span < b.span; });
  return t;
}

Order PenaltyTable::at(const Interval& span) const {
  if (span.ts > span.te || span.te >= timestamps_) {
    throw ArgumentError("interval [" + std::to_string(span.ts) + "," + std::to_string(span.te) +
                        "] outside the penalty domain");
  }
  if (!dense_.empty()) return dense_[dense_index(timestamps_, span)];
  Order best = 0;
  for (const auto& d : dominators_) {
    if (d.span.ts > span.ts) break;
    if (d.span.te >= span.te) best = std::max(best, d.k);
  }
  return best;
}

PenaltyTable penalty_table_full(const TemporalGraph& g, std::span<const VertexId> query) {
  VertexSet q = normalize_query(g, query);
  const std::size_t nt = g.num_timestamps();
  std::vector<Order> values(nt * (nt + 1) / 2, 0);
  visit_interval_cores(g, [&](const Interval& span, std::span<const VertexId> vertices, CorePeeler& peeler,
                              Order k_max) {
    Order v = k_max;
    const auto core = peeler.coreness();
    for (auto u : q) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
      if (it == vertices.end() || *it != u) {
        v = 0;
        break;
      }
      v = std::min(v, core[static_cast<std::size_t>(it - vertices.begin())]);
    }
    values[PenaltyTable::dense_index(nt, span)] = v;
  });
  return PenaltyTable::dense(std::move(q), nt, std::move(values));
}

QueryMaximal q_constrained_maximal(const TemporalGraph& g, std::span<const VertexId> query) {
  VertexSet q = normalize_query(g, query);
  QueryMaximal out;
  out.cores = q_constrained_maximal_cores(g, q);
  out.penalties = PenaltyTable::from_maximal(std::move(q), g.num_timestamps(), out.cores);
  return out;
}

namespace {

void check_segments(const TemporalGraph& g, std::size_t h) {
  if (h < 1 || h > g.num_timestamps()) {
    throw ArgumentError("h must be in [1, " + std::to_string(g.num_timestamps()) + "], got " + std::to_string(h));
  }
}

// Start of the segment closed by boundary r when the previous one is l (-1 for none).
Timestamp segment_start(std::span<const Timestamp> points, std::ptrdiff_t l) {
  return l < 0 ? 0 : points[static_cast<std::size_t>(l)] + 1;
}

// Optimal split of [0, t_max] into h segments whose right ends are points.
// Returns the right-end indices of each segment.
std::vector<std::size_t> segment_dp(std::span<const Timestamp> points, std::size_t h, const PenaltyTable& pen,
                                    long& objective) {
  const std::size_t n = points.size();
  constexpr std::int32_t kUnset = std::numeric_limits<std::int32_t>::max();
  // cost[i][r]: best negated score of i+1 segments ending at points[r].
  std::vector<std::vector<std::int32_t>> cost(h, std::vector<std::int32_t>(n, kUnset));
  std::vector<std::vector<std::uint32_t>> split(h, std::vector<std::uint32_t>(n, 0));
  std::vector<std::int32_t> row(n);

  for (std::size_t r = 0; r < n; ++r) {
    cost[0][r] = -static_cast<std::int32_t>(pen.at({0, points[r]}));
    for (std::size_t l = 0; l < r; ++l) {
      row[l] = static_cast<std::int32_t>(pen.at({segment_start(points, static_cast<std::ptrdiff_t>(l)), points[r]}));
    }
    for (std::size_t i = 1; i < h && i <= r; ++i) {
      const std::size_t first = i - 1;
      const auto best = kernels::argmin_diff(std::span<const std::int32_t>(cost[i - 1]).subspan(first, r - first),
                                             std::span<const std::int32_t>(row).subspan(first, r - first));
      cost[i][r] = best.value;
      split[i][r] = static_cast<std::uint32_t>(first + best.index);
    }
  }

  objective = -static_cast<long>(cost[h - 1][n - 1]);
  std::vector<std::size_t> ends(h);
  std::size_t ub = n - 1;
  for (std::size_t i = h; i-- > 0;) {
    ends[i] = ub;
    if (i > 0) ub = split[i][ub];
  }
  return ends;
}

Segmentation materialize(const TemporalGraph& g, const VertexSet& q, std::span<const Timestamp> points,
                         const std::vector<std::size_t>& ends, long objective) {
  Segmentation out;
  out.objective = objective;
  std::ptrdiff_t prev = -1;
  for (std::size_t r : ends) {
    Segment s;
    s.span = {segment_start(points, prev), points[r]};
    auto best = single_tcs(g, q, s.span);
    s.min_degree = best.order;
    s.members = best.order == 0 ? q : std::move(best.members);
    out.segments.push_back(std::move(s));
    prev = static_cast<std::ptrdiff_t>(r);
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::vector<Timestamp> whole_domain(const TemporalGraph& g) {
  std::vector<Timestamp> points(g.num_timestamps());
  std::iota(points.begin(), points.end(), Timestamp{0});
  return points;
}

}  // namespace

Segmentation tcs_basic(const TemporalGraph& g, std::span<const VertexId> query, std::size_t h,
                       SearchTimings* timings) {
  check_segments(g, h);
  const VertexSet q = normalize_query(g, query);
  auto start = std::chrono::steady_clock::now();
  const PenaltyTable pen = penalty_table_full(g, q);
  SearchTimings local;
  local.precompute_ms = elapsed_ms(start);
  start = std::chrono::steady_clock::now();
  const auto points = whole_domain(g);
  long objective = 0;
  const auto ends = segment_dp(points, h, pen, objective);
  Segmentation out = materialize(g, q, points, ends, objective);
  local.solve_ms = elapsed_ms(start);
  if (timings != nullptr) *timings = local;
  return out;
}

ReducedDomain reduced_domain(const TemporalGraph& g, std::size_t h, const SpanCoreSet& query_maximal) {
  const Timestamp t_max = g.t_max();
  std::vector<char> in_covered(g.num_timestamps(), 0), in_union(g.num_timestamps(), 0);
  ReducedDomain d;
  for (const auto& c : query_maximal) {
    for (Timestamp t = c.span.ts; t <= c.span.te; ++t) in_covered[t] = 1;
    d.after.push_back(std::min<Timestamp>(c.span.te + 1, t_max));
    d.before.push_back(c.span.ts == 0 ? 0 : c.span.ts - 1);
  }
  auto tidy = [](std::vector<Timestamp>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(d.after);
  tidy(d.before);
  for (Timestamp t = 0; t <= t_max; ++t) {
    if (in_covered[t]) {
      d.covered.push_back(t);
      in_union[t] = 1;
    }
  }
  for (auto t : d.after) in_union[t] = 1;
  for (auto t : d.before) in_union[t] = 1;
  in_union[t_max] = 1;

  std::size_t size = static_cast<std::size_t>(std::count(in_union.begin(), in_union.end(), 1));
  for (Timestamp t = 0; t <= t_max && size < h + 1; ++t) {
    if (!in_union[t]) {
      d.padding.push_back(t);
      ++size;
    }
  }
  for (auto t : d.padding) in_union[t] = 1;
  for (Timestamp t = 0; t <= t_max; ++t) {
    if (in_union[t]) d.points.push_back(t);
  }
  return d;
}

Segmentation tcs_efficient(const TemporalGraph& g, std::span<const VertexId> query, std::size_t h,
                           PenaltyBackend backend, SearchTimings* timings) {
  check_segments(g, h);
  const VertexSet q = normalize_query(g, query);
  SearchTimings local;
  auto start = std::chrono::steady_clock::now();
  if (h == g.num_timestamps()) {
    // Only one partition exists: all singletons.
    const auto points = whole_domain(g);
    std::vector<std::size_t> ends(points.size());
    std::iota(ends.begin(), ends.end(), std::size_t{0});
    Segmentation out = materialize(g, q, points, ends, 0);
    for (const auto& s : out.segments) out.objective += s.min_degree;
    local.solve_ms = elapsed_ms(start);
    if (timings != nullptr) *timings = local;
    return out;
  }

  QueryMaximal qm = q_constrained_maximal(g, q);
  const PenaltyTable pen =
      backend == PenaltyBackend::full_decomposition ? penalty_table_full(g, q) : std::move(qm.penalties);
  local.precompute_ms = elapsed_ms(start);
  start = std::chrono::steady_clock::now();
  const ReducedDomain domain = reduced_domain(g, h, qm.cores);
  long objective = 0;
  const auto ends = segment_dp(domain.points, h, pen, objective);
  Segmentation out = materialize(g, q, domain.points, ends, objective);
  local.solve_ms = elapsed_ms(start);
  if (timings != nullptr) *timings = local;
  return out;
}

}  // namespace spancore
