#pragma once

#include <iosfwd>
#include <string>

#include "spancore/span_cores.hpp"

namespace spancore {

/// Writes one JSON object per line with fields k, ts, te, size and vertices
/// (sorted external labels), ordered by (ts, te, k). When `maximal` is set
/// every record also carries "maximal": true. Returns the record count.
std::size_t write_span_cores(const SpanCoreSet& cores, const TemporalGraph& g, std::ostream& out,
                             bool maximal = false);

/// Same, to a file; throws IoError naming the path on failure.
std::size_t write_span_cores_file(const SpanCoreSet& cores, const TemporalGraph& g, const std::string& path,
                                  bool maximal = false);

/// Parses records produced by write_span_cores back into cores over g.
/// Throws ParseError on malformed lines or unknown labels.
SpanCoreSet read_span_cores(std::istream& in, const TemporalGraph& g);

}  // namespace spancore
