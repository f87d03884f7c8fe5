#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spancore/span_cores.hpp"

namespace spancore {

/// Highest order among cores with a given start and span length.
struct ActivityCell {
  Timestamp ts = 0;
  std::size_t length = 0;
  Order k = 0;

  bool operator==(const ActivityCell&) const = default;
};

/// One cell per (ts, |Δ|) present among cores with |Δ| >= min_span, ordered
/// by (ts, length).
std::vector<ActivityCell> activity_summary(const SpanCoreSet& cores, std::size_t min_span = 2);

/// Categorical label per vertex; vertices without a label stay unset.
class AttributeTable {
 public:
  AttributeTable() = default;
  AttributeTable(std::string name, std::size_t vertices) : name_(std::move(name)), values_(vertices) {}

  /// Reads `vertex_label value` lines. Labels unknown to g are skipped and
  /// reported through `skipped`. Throws ParseError on a line without two fields.
  static AttributeTable load(std::istream& in, const TemporalGraph& g, std::string name,
                             std::vector<std::string>* skipped = nullptr);
  static AttributeTable load_file(const std::string& path, const TemporalGraph& g, std::string name,
                                  std::vector<std::string>* skipped = nullptr);

  void set(VertexId u, std::string value) { values_.at(u) = std::move(value); }
  const std::optional<std::string>& of(VertexId u) const { return values_.at(u); }
  const std::string& name() const noexcept { return name_; }
  std::size_t labeled() const;

 private:
  std::string name_;
  std::vector<std::optional<std::string>> values_;
};

/// Share of the labeled members carrying the most frequent label; empty when
/// no member is labeled.
std::optional<double> purity(const SpanCore& core, const AttributeTable& attrs);

/// Mean purity, per timestamp, over the cores whose span contains it. Cores
/// without labeled members are ignored; uncovered timestamps stay empty.
std::vector<std::optional<double>> purity_timeline(const SpanCoreSet& cores, const AttributeTable& attrs,
                                                   std::size_t timestamps);

struct SpanLengthBin {
  std::size_t length = 0;
  std::size_t count = 0;
  double percent = 0.0;
};

/// Histogram of span lengths, ascending by length.
std::vector<SpanLengthBin> span_length_distribution(const SpanCoreSet& cores);

struct AnomalyReport {
  std::vector<Interval> long_spans;  // maximal spans longer than the threshold
  std::vector<std::pair<Timestamp, VertexId>> flagged_vertices;
  std::vector<Timestamp> flagged_timestamps;
  TemporalGraph intermediate;  // flagged vertices' edges removed
  TemporalGraph filtered;      // additionally, flagged timestamps emptied
  std::vector<std::size_t> original_edges;
  std::vector<std::size_t> intermediate_edges;
  std::vector<std::size_t> filtered_edges;
};

/// Flags vertices of order-1 span-cores whose span is one of the maximal spans
/// longer than `span_threshold`, removes their edges at the covered
/// timestamps, then empties every timestamp whose original to remaining edge
/// count ratio exceeds `ratio` (a timestamp left with no edges counts as
/// exceeding when it had any). Throws ArgumentError unless span_threshold >= 1
/// and ratio > 1.
AnomalyReport detect_anomalies(const TemporalGraph& g, std::size_t span_threshold, double ratio);

/// Row u holds the h segment orders of the temporal community search with
/// query {u}, in time order. Rows are computed on `threads` workers (0 picks
/// the hardware concurrency). Throws ArgumentError unless 1 <= h <= |T|.
std::vector<std::vector<Order>> tcs_embeddings(const TemporalGraph& g, std::size_t h, unsigned threads = 1);

struct WalkOptions {
  double move_probability = 0.8;
  /// Distinct vertices to visit before drawing; 0 means 3 * q_size.
  std::size_t pool = 0;
};

/// Query vertices: one uniform vertex for q_size 1, otherwise q_size distinct
/// vertices drawn, proportionally to visit counts, from the vertices met by a
/// temporal random walk. Deterministic for a given seed. Throws ArgumentError
/// for q_size 0 or when fewer than q_size vertices ever have an edge.
VertexSet sample_query_vertices(const TemporalGraph& g, std::size_t q_size, std::uint64_t seed,
                                const WalkOptions& options = {});

}  // namespace spancore
