#include "spancore/edge_list_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spancore/errors.hpp"

namespace spancore {

namespace {

struct RawRecord {
  std::int64_t time;
  VertexId u;
  VertexId v;
  std::size_t line;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::string read_gzip(const std::string& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) throw IoError(path, "cannot open gzip file");
  std::string data;
  char buffer[1 << 16];
  int n = 0;
  while ((n = gzread(file, buffer, sizeof(buffer))) > 0) data.append(buffer, static_cast<std::size_t>(n));
  const bool failed = n < 0;
  gzclose(file);
  if (failed) throw IoError(path, "corrupt gzip stream");
  return data;
}

}  // namespace

TemporalGraph load_edge_list(std::istream& in, const LoadOptions& options, LoadStats* stats) {
  const std::int64_t window = options.pre_windowed ? 1 : options.window;
  if (window <= 0) throw ArgumentError("window must be positive");

  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] = index.try_emplace(std::string(label), static_cast<VertexId>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  LoadStats local;
  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#' || fields[0].front() == '%') continue;
    if (fields.size() < 3) throw ParseError(line_no, "expected 'time u v', got " + std::to_string(fields.size()) + " field(s)");
    std::int64_t time = 0;
    auto [end, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), time);
    if (ec != std::errc{} || end != fields[0].data() + fields[0].size() || time < 0) {
      throw ParseError(line_no, "time '" + std::string(fields[0]) + "' is not a non-negative integer");
    }
    ++local.records;
    if (fields[1] == fields[2]) {
      ++local.self_loops_dropped;
      continue;
    }
    records.push_back({time, intern(fields[1]), intern(fields[2]), line_no});
  }
  if (local.records == 0) throw ParseError(line_no, "edge list contains no records");

  std::int64_t origin = 0;
  if (!options.pre_windowed) {
    if (options.time_origin) {
      origin = *options.time_origin;
    } else {
      origin = std::numeric_limits<std::int64_t>::max();
      for (const auto& r : records) origin = std::min(origin, r.time);
      if (records.empty()) origin = 0;
    }
  }

  std::int64_t max_bucket = 0;
  for (const auto& r : records) {
    if (r.time < origin) throw ParseError(r.line, "time precedes the time origin");
    max_bucket = std::max(max_bucket, (r.time - origin) / window);
  }

  std::vector<std::vector<Edge>> snapshots(static_cast<std::size_t>(max_bucket) + 1);
  for (const auto& r : records) {
    snapshots[static_cast<std::size_t>((r.time - origin) / window)].push_back(Edge::make(r.u, r.v));
  }
  std::size_t raw_edges = records.size();
  auto graph = TemporalGraph::from_snapshots(std::move(labels), std::move(snapshots), {origin, window});
  local.duplicates_collapsed = raw_edges - graph.total_edges();
  if (stats != nullptr) *stats = local;
  return graph;
}

TemporalGraph load_edge_list_file(const std::string& path, const LoadOptions& options, LoadStats* stats) {
  if (path.size() > 3 && path.ends_with(".gz")) {
    std::istringstream in(read_gzip(path));
    return load_edge_list(in, options, stats);
  }
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open file");
  return load_edge_list(in, options, stats);
}

std::size_t write_edge_list(const TemporalGraph& g, std::ostream& out) {
  std::size_t written = 0;
  const auto& timing = g.timing();
  for (Timestamp t = 0; t <= g.t_max(); ++t) {
    const std::int64_t raw = timing.origin + static_cast<std::int64_t>(t) * timing.window;
    for (const auto& e : g.snapshot(t)) {
      out << raw << ' ' << g.label(e.u) << ' ' << g.label(e.v) << '\n';
      ++written;
    }
  }
  return written;
}

}  // namespace spancore
