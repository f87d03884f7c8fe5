#include "spancore/records.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "spancore/errors.hpp"

namespace spancore {

std::size_t write_span_cores(const SpanCoreSet& cores, const TemporalGraph& g, std::ostream& out, bool maximal) {
  SpanCoreSet sorted = cores;
  sort_by_start(sorted);
  for (const auto& c : sorted) {
    std::vector<std::string> names;
    names.reserve(c.members.size());
    for (auto v : c.members) names.push_back(g.label(v));
    std::sort(names.begin(), names.end());
    nlohmann::ordered_json rec;
    rec["k"] = c.k;
    rec["ts"] = c.span.ts;
    rec["te"] = c.span.te;
    rec["size"] = c.members.size();
    rec["vertices"] = std::move(names);
    if (maximal) rec["maximal"] = true;
    out << rec.dump() << '\n';
  }
  return sorted.size();
}

std::size_t write_span_cores_file(const SpanCoreSet& cores, const TemporalGraph& g, const std::string& path,
                                  bool maximal) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  const std::size_t n = write_span_cores(cores, g, out, maximal);
  out.flush();
  if (!out) throw IoError(path, "write failed");
  return n;
}

SpanCoreSet read_span_cores(std::istream& in, const TemporalGraph& g) {
  SpanCoreSet cores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto rec = nlohmann::json::parse(line);
      SpanCore c;
      c.k = rec.at("k").get<Order>();
      c.span = {rec.at("ts").get<Timestamp>(), rec.at("te").get<Timestamp>()};
      for (const auto& name : rec.at("vertices")) {
        auto id = g.find(name.get<std::string>());
        if (!id) throw ParseError(line_no, "unknown vertex label '" + name.get<std::string>() + "'");
        c.members.push_back(*id);
      }
      std::sort(c.members.begin(), c.members.end());
      if (rec.at("size").get<std::size_t>() != c.members.size()) throw ParseError(line_no, "size field mismatch");
      cores.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return cores;
}

}  // namespace spancore
