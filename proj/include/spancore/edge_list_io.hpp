#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "spancore/temporal_graph.hpp"

namespace spancore {

struct LoadOptions {
  /// Width of one discrete timestamp in raw time units. Must be positive.
  std::int64_t window = 1;
  /// Raw time mapped to timestamp 0; defaults to the smallest raw time seen.
  std::optional<std::int64_t> time_origin;
  /// Input already holds timestamp indices: window 1, origin 0.
  bool pre_windowed = false;
};

struct LoadStats {
  std::size_t records = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Reads `raw_time u v` records (whitespace or comma separated, extra columns
/// ignored, blank lines and lines starting with '#' or '%' skipped) and
/// buckets them into timestamps of equal width. Repeated (u, v) pairs inside
/// one bucket collapse to one edge and self-loops are dropped.
///
/// Throws ParseError (with line number) on malformed records, ArgumentError
/// on a non-positive window, and ParseError when the source has no records.
TemporalGraph load_edge_list(std::istream& in, const LoadOptions& options, LoadStats* stats = nullptr);

/// As above, reading from a file; a ".gz" suffix selects gzip decoding.
/// Throws IoError when the file cannot be read.
TemporalGraph load_edge_list_file(const std::string& path, const LoadOptions& options,
                                  LoadStats* stats = nullptr);

/// Writes one `raw_time u v` line per edge, raw_time = origin + t * window, so
/// that loading the output with the same window and origin restores the graph
/// (up to vertices without edges and trailing empty timestamps).
std::size_t write_edge_list(const TemporalGraph& g, std::ostream& out);

}  // namespace spancore
