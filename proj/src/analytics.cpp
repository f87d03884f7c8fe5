#include "spancore/analytics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "spancore/community_search.hpp"
#include "spancore/errors.hpp"
#include "spancore/maximal_cores.hpp"

namespace spancore {

std::vector<ActivityCell> activity_summary(const SpanCoreSet& cores, std::size_t min_span) {
  std::map<std::pair<Timestamp, std::size_t>, Order> cells;
  for (const auto& c : cores) {
    const std::size_t len = c.span.length();
    if (len < min_span) continue;
    auto& k = cells[{c.span.ts, len}];
    k = std::max(k, c.k);
  }
  std::vector<ActivityCell> out;
  out.reserve(cells.size());
  for (const auto& [key, k] : cells) out.push_back({key.first, key.second, k});
  return out;
}

AttributeTable AttributeTable::load(std::istream& in, const TemporalGraph& g, std::string name,
                                    std::vector<std::string>* skipped) {
  AttributeTable table(std::move(name), g.num_vertices());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string label, value;
    if (!(fields >> label >> value)) throw ParseError(line_no, "expected 'vertex_label value'");
    if (auto id = g.find(label)) {
      table.set(*id, std::move(value));
    } else if (skipped != nullptr) {
      skipped->push_back(label);
    }
  }
  return table;
}

AttributeTable AttributeTable::load_file(const std::string& path, const TemporalGraph& g, std::string name,
                                         std::vector<std::string>* skipped) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  return load(in, g, std::move(name), skipped);
}

std::size_t AttributeTable::labeled() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); }));
}

std::optional<double> purity(const SpanCore& core, const AttributeTable& attrs) {
  std::unordered_map<std::string_view, std::size_t> counts;
  std::size_t labeled = 0, modal = 0;
  for (auto u : core.members) {
    const auto& value = attrs.of(u);
    if (!value) continue;
    ++labeled;
    modal = std::max(modal, ++counts[*value]);
  }
  if (labeled == 0) return std::nullopt;
  return static_cast<double>(modal) / static_cast<double>(labeled);
}

std::vector<std::optional<double>> purity_timeline(const SpanCoreSet& cores, const AttributeTable& attrs,
                                                   std::size_t timestamps) {
  std::vector<double> sum(timestamps, 0.0);
  std::vector<std::size_t> count(timestamps, 0);
  for (const auto& c : cores) {
    const auto p = purity(c, attrs);
    if (!p) continue;
    for (Timestamp t = c.span.ts; t <= c.span.te && t < timestamps; ++t) {
      sum[t] += *p;
      ++count[t];
    }
  }
  std::vector<std::optional<double>> out(timestamps);
  for (std::size_t t = 0; t < timestamps; ++t) {
    if (count[t] > 0) out[t] = sum[t] / static_cast<double>(count[t]);
  }
  return out;
}

std::vector<SpanLengthBin> span_length_distribution(const SpanCoreSet& cores) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& c : cores) ++counts[c.span.length()];
  std::vector<SpanLengthBin> out;
  for (const auto& [len, n] : counts) {
    out.push_back({len, n, 100.0 * static_cast<double>(n) / static_cast<double>(cores.size())});
  }
  return out;
}

AnomalyReport detect_anomalies(const TemporalGraph& g, std::size_t span_threshold, double ratio) {
  if (span_threshold < 1) throw ArgumentError("span threshold must be at least 1");
  if (!(ratio > 1.0)) throw ArgumentError("ratio threshold must exceed 1");

  AnomalyReport report;
  for (const auto& c : maximal_span_cores(g)) {
    if (c.span.length() > span_threshold) report.long_spans.push_back(c.span);
  }
  std::sort(report.long_spans.begin(), report.long_spans.end());

  const std::size_t nt = g.num_timestamps();
  std::vector<std::vector<VertexId>> flagged(nt);
  for (const auto& span : report.long_spans) {
    // The order-1 core of a span is every endpoint of E_span.
    for (const auto& e : interval_edges(g, span)) {
      for (Timestamp t = span.ts; t <= span.te; ++t) {
        flagged[t].push_back(e.u);
        flagged[t].push_back(e.v);
      }
    }
  }

  std::vector<std::vector<Edge>> kept(nt);
  std::vector<std::uint8_t> mark(g.num_vertices(), 0);
  for (Timestamp t = 0; t < nt; ++t) {
    auto& f = flagged[t];
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (auto u : f) {
      report.flagged_vertices.emplace_back(t, u);
      mark[u] = 1;
    }
    for (const auto& e : g.snapshot(t)) {
      if (!mark[e.u] && !mark[e.v]) kept[t].push_back(e);
    }
    for (auto u : f) mark[u] = 0;
    report.original_edges.push_back(g.snapshot(t).size());
    report.intermediate_edges.push_back(kept[t].size());
  }

  report.intermediate = TemporalGraph::from_snapshots(g.labels(), kept, g.timing());
  for (Timestamp t = 0; t < nt; ++t) {
    const double original = static_cast<double>(report.original_edges[t]);
    const double remaining = static_cast<double>(report.intermediate_edges[t]);
    const bool exceeds = remaining == 0.0 ? original > 0.0 : original / remaining > ratio;
    if (exceeds) {
      report.flagged_timestamps.push_back(t);
      kept[t].clear();
    }
    report.filtered_edges.push_back(kept[t].size());
  }
  report.filtered = TemporalGraph::from_snapshots(g.labels(), std::move(kept), g.timing());
  return report;
}

std::vector<std::vector<Order>> tcs_embeddings(const TemporalGraph& g, std::size_t h, unsigned threads) {
  if (h < 1 || h > g.num_timestamps()) {
    throw ArgumentError("h must be in [1, " + std::to_string(g.num_timestamps()) + "], got " + std::to_string(h));
  }
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Order>> rows(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t u = next++; u < n; u = next++) {
      const VertexId q[] = {static_cast<VertexId>(u)};
      const Segmentation s = tcs_efficient(g, q, h);
      rows[u].reserve(h);
      for (const auto& seg : s.segments) rows[u].push_back(seg.min_degree);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    work();
    return rows;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (unsigned i = 0; i < threads; ++i) {
    pool.emplace_back([&] {
      try {
        work();
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

VertexSet sample_query_vertices(const TemporalGraph& g, std::size_t q_size, std::uint64_t seed,
                                const WalkOptions& options) {
  if (q_size == 0) throw ArgumentError("query size must be at least 1");
  if (!(options.move_probability >= 0.0 && options.move_probability <= 1.0)) {
    throw ArgumentError("move probability must be in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  const std::size_t n = g.num_vertices();
  if (q_size == 1) {
    if (n == 0) throw ArgumentError("graph has no vertices");
    return {static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng))};
  }

  std::vector<std::uint8_t> touched(n, 0);
  for (Timestamp t = 0; t <= g.t_max(); ++t) {
    for (const auto& e : g.snapshot(t)) touched[e.u] = touched[e.v] = 1;
  }
  const auto active = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), 1));
  if (active < q_size) {
    throw ArgumentError("only " + std::to_string(active) + " vertices have edges; cannot sample " +
                        std::to_string(q_size));
  }
  const std::size_t pool = std::min(options.pool == 0 ? 3 * q_size : std::max(options.pool, q_size), active);

  std::uniform_int_distribution<std::size_t> any_vertex(0, n - 1);
  std::bernoulli_distribution move(options.move_probability);
  auto fresh_start = [&] {
    VertexId v;
    do v = static_cast<VertexId>(any_vertex(rng));
    while (!touched[v]);
    return v;
  };

  std::map<VertexId, std::size_t> visits;
  const std::size_t nt = g.num_timestamps();
  const std::size_t patience = 64 * nt + 1024;  // steps without a new vertex before restarting elsewhere
  VertexId current = fresh_start();
  Timestamp t = 0;
  ++visits[current];
  std::size_t idle = 0;
  while (visits.size() < pool) {
    if (++idle > patience) {
      current = fresh_start();
      t = 0;
      idle = 0;
      if (visits[current]++ == 0) continue;
    }
    if (move(rng)) {
      // An isolated walker skips ahead, wrapping, to its next timestamp with neighbours.
      for (std::size_t hop = 0; g.degree(t, current) == 0; ++hop) {
        if (hop == nt) throw ArgumentError("vertex " + g.label(current) + " has no neighbours at any timestamp");
        t = t == g.t_max() ? 0 : t + 1;
      }
      auto nbrs = g.neighbors(t, current);
      current = nbrs[std::uniform_int_distribution<std::size_t>(0, nbrs.size() - 1)(rng)];
      if (visits[current]++ == 0) idle = 0;
    } else {
      t = t == g.t_max() ? 0 : t + 1;
    }
  }

  std::vector<VertexId> candidates;
  std::vector<double> weights;
  for (const auto& [v, c] : visits) {
    candidates.push_back(v);
    weights.push_back(static_cast<double>(c));
  }
  VertexSet out;
  while (out.size() < q_size) {
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const std::size_t i = pick(rng);
    out.push_back(candidates[i]);
    weights[i] = 0.0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spancore
