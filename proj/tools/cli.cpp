#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spancore/analytics.hpp"
#include "spancore/community_search.hpp"
#include "spancore/edge_list_io.hpp"
#include "spancore/errors.hpp"
#include "spancore/kernels.hpp"
#include "spancore/maximal_cores.hpp"
#include "spancore/min_community.hpp"
#include "spancore/records.hpp"
#include "spancore/rewire.hpp"
#include "spancore/span_cores.hpp"

namespace spancore::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kDefaultSeed = 20190417;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string sha256_file(const std::string& path, std::uintmax_t& bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw std::runtime_error("sha256 init failed");
  std::vector<char> buf(1 << 16);
  bytes = 0;
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = static_cast<std::size_t>(in.gcount());
    bytes += got;
    if (got > 0 && EVP_DigestUpdate(ctx.get(), buf.data(), got) != 1) throw std::runtime_error("sha256 update failed");
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) throw std::runtime_error("sha256 final failed");
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

struct Common {
  std::string input;
  std::int64_t window = 1;
  std::optional<std::int64_t> time_origin;
  bool pre_windowed = false;
  std::string seed = "default";
  std::string output = "-";
};

// Resolved --output target: stdout or a file under the optional output directory.
class Sink {
 public:
  Sink(const std::string& requested, std::ostream& out) : out_(out) {
    if (requested == "-") return;
    std::filesystem::path p(requested);
    if (const char* dir = std::getenv("SPANCORE_OUTPUT_DIR"); dir != nullptr && *dir != '\0' && p.is_relative()) {
      p = std::filesystem::path(dir) / p;
    }
    path_ = p.string();
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    file_.open(path_);
    if (!file_) throw IoError(path_, "cannot open for writing");
  }

  std::ostream& stream() { return path_.empty() ? out_ : file_; }
  bool to_stdout() const { return path_.empty(); }
  const std::string& path() const { return path_; }

  void close() {
    if (path_.empty()) {
      out_.flush();
      return;
    }
    file_.close();
    if (!file_) throw IoError(path_, "write failed");
  }

 private:
  std::ostream& out_;
  std::string path_;
  std::ofstream file_;
};

std::string resolve_path(const std::string& requested) {
  std::filesystem::path p(requested);
  if (const char* dir = std::getenv("SPANCORE_OUTPUT_DIR"); dir != nullptr && *dir != '\0' && p.is_relative()) {
    p = std::filesystem::path(dir) / p;
  }
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  return p.string();
}

std::uint64_t resolve_seed(const std::string& text) {
  if (text == "default") return kDefaultSeed;
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw ArgumentError("--seed expects a non-negative integer or 'random', got '" + text + "'");
  }
  return value;
}

VertexSet resolve_labels(const TemporalGraph& g, const std::vector<std::string>& labels) {
  VertexSet q;
  for (const auto& l : labels) {
    auto id = g.find(l);
    if (!id) {
      throw ArgumentError("unknown vertex label '" + l + "' (the input has " + std::to_string(g.num_vertices()) +
                          " labels)");
    }
    q.push_back(*id);
  }
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return q;
}

std::vector<std::string> sorted_labels(const TemporalGraph& g, const VertexSet& vs) {
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (auto v : vs) names.push_back(g.label(v));
  std::sort(names.begin(), names.end());
  return names;
}

json stats_json(const DecompositionStats& s) {
  return {{"processed_vertices", s.processed_vertices},
          {"peeled_intervals", s.peeled_intervals},
          {"enqueued_intervals", s.enqueued_intervals}};
}

std::string format_fraction(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(6) << v;
  return s.str();
}

std::int64_t raw_time(const TemporalGraph& g, Timestamp t) {
  return g.timing().origin + static_cast<std::int64_t>(t) * g.timing().window;
}

struct Timings {
  double precompute = 0.0;
  double solve = 0.0;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Span-core decomposition, maximal span-cores and temporal community search over temporal graphs."};
  app.name("spancore");
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("-i,--input", common.input, "Edge list of 'time u v' records (.gz accepted)")
      ->required();
  app.add_option("--window", common.window, "Raw time units per timestamp")->check(CLI::PositiveNumber);
  app.add_option("--time-origin", common.time_origin, "Raw time of timestamp 0 (default: earliest record)");
  app.add_flag("--pre-windowed", common.pre_windowed, "Input times are already timestamp indices");
  app.add_option("--seed", common.seed, "Integer seed or 'random'");
  app.add_option("-o,--output", common.output, "Result file, '-' for stdout");

  auto* decompose = app.add_subcommand("decompose", "Enumerate every span-core");
  bool naive = false;
  decompose->add_flag("--naive", naive, "Peel every interval from scratch");

  auto* maximal = app.add_subcommand("maximal", "Enumerate the maximal span-cores");
  bool filter = false;
  maximal->add_flag("--filter", filter, "Enumerate all span-cores, then drop dominated ones");

  auto* tcs = app.add_subcommand("tcs", "Temporal community search for a query vertex set");
  std::vector<std::string> q_labels;
  std::size_t h = 0;
  bool basic = false, efficient = false, minimize = false;
  std::string backend = "maximal";
  tcs->add_option("--q", q_labels, "Query vertex labels")->required()->delimiter(',');
  tcs->add_option("--h", h, "Number of segments")->required()->check(CLI::PositiveNumber);
  auto* basic_flag = tcs->add_flag("--basic", basic, "Dynamic program over every timestamp");
  tcs->add_flag("--efficient", efficient, "Dynamic program over the reduced domain (default)")->excludes(basic_flag);
  tcs->add_option("--backend", backend, "Penalty source for --efficient")
      ->check(CLI::IsMember({"maximal", "full"}))
      ->excludes(basic_flag);
  tcs->add_flag("--minimize", minimize, "Shrink each community greedily");

  auto* anomalies = app.add_subcommand("anomalies", "Remove edges of anomalously long-lived cores");
  std::size_t tr = 0;
  double ratio = 1.5;
  std::string filtered_output;
  anomalies->add_option("--tr", tr, "Span length above which a maximal span is anomalous")
      ->required()
      ->check(CLI::PositiveNumber);
  anomalies->add_option("--ratio", ratio, "Edge-count ratio above which a timestamp is emptied");
  anomalies->add_option("--filtered-output", filtered_output, "Write the filtered graph as an edge list");

  auto* embed = app.add_subcommand("embed", "Per-vertex vectors of community orders");
  std::size_t embed_h = 0;
  unsigned threads = 1;
  embed->add_option("--h", embed_h, "Vector length")->required()->check(CLI::PositiveNumber);
  embed->add_option("--threads", threads, "Worker threads, 0 for all cores");

  auto* stats = app.add_subcommand("stats", "Tables over span-cores: activity, span lengths, purity");
  std::string table = "activity";
  std::vector<std::string> attrs;
  std::size_t min_span = 2;
  stats->add_option("--table", table, "activity, spans or purity")->check(CLI::IsMember({"activity", "spans", "purity"}));
  stats->add_option("--attrs", attrs, "Attribute file(s) of 'label value' lines");
  stats->add_option("--min-span", min_span, "Ignore cores with shorter spans");

  auto* reshuffle = app.add_subcommand("reshuffle", "Degree-preserving rewiring of every snapshot");
  std::size_t attempts = 10;
  reshuffle->add_option("--attempts-per-edge", attempts, "Swap attempts per edge and snapshot");

  auto* sample = app.add_subcommand("sample-queries", "Draw query vertex sets by temporal random walk");
  std::size_t q_size = 2, count = 1, pool = 0;
  double p = 0.8;
  sample->add_option("--size", q_size, "Vertices per query")->check(CLI::PositiveNumber);
  sample->add_option("--count", count, "Number of queries")->check(CLI::PositiveNumber);
  sample->add_option("--p", p, "Probability of moving along an edge")->check(CLI::Range(0.0, 1.0));
  sample->add_option("--pool", pool, "Distinct vertices to visit (0: three times --size)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!filtered_output.empty() && !anomalies->parsed()) throw ArgumentError("--filtered-output needs 'anomalies'");
    if (table == "purity" && attrs.empty()) throw ArgumentError("--table purity needs at least one --attrs file");
    const std::uint64_t seed = resolve_seed(common.seed);

    json prov;
    prov["tool"] = "spancore";
    prov["version"] = kVersion;
    prov["command"] = app.get_subcommands().front()->get_name();
    json argv_json = json::array();
    for (int i = 1; i < argc; ++i) argv_json.push_back(argv[i]);
    prov["argv"] = argv_json;

    std::uintmax_t bytes = 0;
    prov["input"] = {{"path", common.input}, {"sha256", sha256_file(common.input, bytes)}, {"bytes", bytes}};

    auto start = Clock::now();
    LoadOptions lo;
    lo.window = common.window;
    lo.time_origin = common.time_origin;
    lo.pre_windowed = common.pre_windowed;
    LoadStats ls;
    const TemporalGraph g = load_edge_list_file(common.input, lo, &ls);
    const double load_ms = ms_since(start);
    prov["graph"] = {{"records", ls.records},
                     {"self_loops_dropped", ls.self_loops_dropped},
                     {"duplicates_collapsed", ls.duplicates_collapsed},
                     {"vertices", g.num_vertices()},
                     {"timestamps", g.num_timestamps()},
                     {"edges", g.total_edges()},
                     {"time_origin", g.timing().origin},
                     {"window", g.timing().window}};
    prov["isa"] = std::string(kernels::isa_name(kernels::active_isa()));

    json params;
    json result;
    Timings timings;
    Sink sink(common.output, out);
    std::ostream& os = sink.stream();

    if (decompose->parsed()) {
      params["naive"] = naive;
      DecompositionStats ds;
      start = Clock::now();
      const SpanCoreSet cores = naive ? naive_span_cores(g, &ds) : span_cores(g, &ds);
      timings.solve = ms_since(start);
      result["span_cores"] = write_span_cores(cores, g, os);
      result["work"] = stats_json(ds);
    } else if (maximal->parsed()) {
      params["filter"] = filter;
      DecompositionStats ds;
      SpanCoreSet cores;
      if (filter) {
        start = Clock::now();
        const SpanCoreSet all = span_cores(g, &ds);
        timings.precompute = ms_since(start);
        start = Clock::now();
        cores = filter_maximal(all);
        timings.solve = ms_since(start);
      } else {
        start = Clock::now();
        cores = maximal_span_cores(g, &ds);
        timings.solve = ms_since(start);
      }
      result["maximal_span_cores"] = write_span_cores(cores, g, os, true);
      result["work"] = stats_json(ds);
    } else if (tcs->parsed()) {
      const VertexSet q = resolve_labels(g, q_labels);
      params["q"] = sorted_labels(g, q);
      params["h"] = h;
      params["method"] = basic ? "basic" : "efficient";
      if (!basic) params["backend"] = backend;
      params["minimize"] = minimize;
      SearchTimings st;
      const Segmentation seg =
          basic ? tcs_basic(g, q, h, &st)
                : tcs_efficient(g, q, h,
                                backend == "full" ? PenaltyBackend::full_decomposition : PenaltyBackend::maximal_cores,
                                &st);
      timings.precompute = st.precompute_ms;
      timings.solve = st.solve_ms;
      json doc;
      doc["objective"] = seg.objective;
      doc["query"] = sorted_labels(g, q);
      doc["segments"] = json::array();
      double minimize_ms = 0.0;
      for (const auto& s : seg.segments) {
        json rec;
        rec["ts"] = s.span.ts;
        rec["te"] = s.span.te;
        rec["min_degree"] = s.min_degree;
        rec["size"] = s.members.size();
        rec["vertices"] = sorted_labels(g, s.members);
        if (minimize) {
          start = Clock::now();
          const VertexSet small = greedy_minimum_community(g, q, s.span, s.members, s.min_degree);
          minimize_ms += ms_since(start);
          rec["minimized_size"] = small.size();
          rec["minimized_vertices"] = sorted_labels(g, small);
        }
        doc["segments"].push_back(std::move(rec));
      }
      if (minimize) result["minimize_ms"] = minimize_ms;
      result["objective"] = seg.objective;
      os << doc.dump(2) << '\n';
    } else if (anomalies->parsed()) {
      params["tr"] = tr;
      params["ratio"] = ratio;
      start = Clock::now();
      const AnomalyReport rep = detect_anomalies(g, tr, ratio);
      timings.solve = ms_since(start);
      std::vector<std::size_t> flagged_per_t(g.num_timestamps(), 0);
      for (const auto& [t, u] : rep.flagged_vertices) ++flagged_per_t[t];
      std::vector<char> emptied(g.num_timestamps(), 0);
      for (auto t : rep.flagged_timestamps) emptied[t] = 1;
      os << "t\traw_time\toriginal_edges\tintermediate_edges\tfiltered_edges\tflagged_vertices\tflagged_timestamp\n";
      for (Timestamp t = 0; t <= g.t_max(); ++t) {
        os << t << '\t' << raw_time(g, t) << '\t' << rep.original_edges[t] << '\t' << rep.intermediate_edges[t] << '\t'
           << rep.filtered_edges[t] << '\t' << flagged_per_t[t] << '\t' << (emptied[t] ? 1 : 0) << '\n';
      }
      if (!filtered_output.empty()) {
        const std::string path = resolve_path(filtered_output);
        std::ofstream f(path);
        if (!f) throw IoError(path, "cannot open for writing");
        write_edge_list(rep.filtered, f);
        f.close();
        if (!f) throw IoError(path, "write failed");
        result["filtered_output"] = path;
      }
      json spans = json::array();
      for (const auto& s : rep.long_spans) spans.push_back({s.ts, s.te});
      result["long_spans"] = spans;
      result["flagged_vertex_timestamps"] = rep.flagged_vertices.size();
      result["flagged_timestamps"] = rep.flagged_timestamps.size();
    } else if (embed->parsed()) {
      params["h"] = embed_h;
      params["threads"] = threads;
      start = Clock::now();
      const auto rows = tcs_embeddings(g, embed_h, threads);
      timings.solve = ms_since(start);
      os << "vertex";
      for (std::size_t j = 1; j <= embed_h; ++j) os << "\tx" << j;
      os << '\n';
      for (VertexId u = 0; u < rows.size(); ++u) {
        os << g.label(u);
        for (auto v : rows[u]) os << '\t' << v;
        os << '\n';
      }
      result["rows"] = rows.size();
    } else if (stats->parsed()) {
      params["table"] = table;
      params["min_span"] = min_span;
      params["attrs"] = attrs;
      auto long_enough = [&](SpanCoreSet cores) {
        std::erase_if(cores, [&](const SpanCore& c) { return c.span.length() < min_span; });
        return cores;
      };
      if (table == "activity") {
        start = Clock::now();
        const SpanCoreSet all = span_cores(g);
        timings.precompute = ms_since(start);
        start = Clock::now();
        const auto cells = activity_summary(all, min_span);
        timings.solve = ms_since(start);
        os << "ts\traw_time\tlength\tk\n";
        for (const auto& c : cells) os << c.ts << '\t' << raw_time(g, c.ts) << '\t' << c.length << '\t' << c.k << '\n';
        result["records"] = cells.size();
      } else {
        start = Clock::now();
        const SpanCoreSet cores = long_enough(maximal_span_cores(g));
        timings.precompute = ms_since(start);
        start = Clock::now();
        if (table == "spans") {
          const auto bins = span_length_distribution(cores);
          os << "length\tcount\tpercent\n";
          for (const auto& b : bins) os << b.length << '\t' << b.count << '\t' << format_fraction(b.percent) << '\n';
          result["records"] = bins.size();
        } else {
          std::vector<std::vector<std::optional<double>>> columns;
          std::vector<std::string> names;
          for (const auto& path : attrs) {
            std::vector<std::string> skipped;
            const auto tab = AttributeTable::load_file(path, g, std::filesystem::path(path).stem().string(), &skipped);
            if (!skipped.empty()) {
              err << "warning: " << path << ": " << skipped.size() << " rows name unknown vertices (first: '"
                  << skipped.front() << "')\n";
            }
            std::size_t unlabeled = 0;
            for (const auto& c : cores) unlabeled += purity(c, tab).has_value() ? 0 : 1;
            if (unlabeled > 0) {
              err << "warning: " << path << ": " << unlabeled << " cores have no labeled member and are skipped\n";
            }
            names.push_back(tab.name());
            columns.push_back(purity_timeline(cores, tab, g.num_timestamps()));
          }
          os << "t\traw_time";
          for (const auto& n : names) os << '\t' << n;
          os << '\n';
          for (Timestamp t = 0; t <= g.t_max(); ++t) {
            os << t << '\t' << raw_time(g, t);
            for (const auto& col : columns) os << '\t' << (col[t] ? format_fraction(*col[t]) : std::string("NA"));
            os << '\n';
          }
          result["records"] = g.num_timestamps();
        }
        timings.solve = ms_since(start);
      }
    } else if (reshuffle->parsed()) {
      params["seed"] = seed;
      params["attempts_per_edge"] = attempts;
      start = Clock::now();
      const TemporalGraph r = rewire_null_model(g, seed, {attempts});
      timings.solve = ms_since(start);
      result["edges"] = write_edge_list(r, os);
    } else if (sample->parsed()) {
      params["seed"] = seed;
      params["size"] = q_size;
      params["count"] = count;
      params["p"] = p;
      params["pool"] = pool;
      start = Clock::now();
      for (std::size_t i = 0; i < count; ++i) {
        const VertexSet q = sample_query_vertices(g, q_size, seed + i, {p, pool});
        const auto names = sorted_labels(g, q);
        for (std::size_t j = 0; j < names.size(); ++j) os << (j ? " " : "") << names[j];
        os << '\n';
      }
      timings.solve = ms_since(start);
      result["queries"] = count;
    }

    sink.close();
    prov["parameters"] = params;
    prov["timings_ms"] = {{"load", load_ms}, {"precompute", timings.precompute}, {"solve", timings.solve}};
    prov["result"] = result;
    if (sink.to_stdout()) {
      err << prov.dump() << '\n';
    } else {
      const std::string path = sink.path() + ".provenance.json";
      std::ofstream f(path);
      if (!f) throw IoError(path, "cannot open for writing");
      f << prov.dump(2) << '\n';
      if (!f) throw IoError(path, "write failed");
    }
    return kOk;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << common.input << ": " << e.what() << '\n';
    return kInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace spancore::cli
