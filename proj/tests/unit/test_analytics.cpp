#include <doctest.h>

#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "spancore/analytics.hpp"
#include "spancore/errors.hpp"
#include "spancore/maximal_cores.hpp"
#include "spancore/rewire.hpp"
#include "spancore/static_core.hpp"

using namespace spancore;
using namespace spancore::testing;

namespace {

AttributeTable fix1_gender(const TemporalGraph& g) {
  AttributeTable t("gender", g.num_vertices());
  t.set(id(g, "a"), "F");
  t.set(id(g, "b"), "F");
  t.set(id(g, "c"), "M");
  t.set(id(g, "d"), "M");
  return t;
}

}  // namespace

TEST_CASE("activity cells on FIX-1") {
  const auto cells = activity_summary(span_cores(fix1()));
  CHECK(cells == std::vector<ActivityCell>{{0, 2, 2}, {0, 3, 1}, {1, 2, 1}});
  CHECK(activity_summary(span_cores(fix1()), 1).size() == 6);
  CHECK(activity_summary({}).empty());
}

TEST_CASE("purity of a core") {
  AttributeTable t("g", 5);
  t.set(0, "F");
  t.set(1, "F");
  t.set(2, "M");
  t.set(3, "F");
  CHECK(*purity({1, {0, 0}, {0, 1, 2}}, t) == doctest::Approx(2.0 / 3.0));
  CHECK(*purity({1, {0, 0}, {0, 1, 3}}, t) == doctest::Approx(1.0));
  CHECK(*purity({1, {0, 0}, {1, 2}}, t) == doctest::Approx(0.5));
  CHECK(*purity({1, {0, 0}, {2}}, t) == doctest::Approx(1.0));
  // Unlabeled members are left out of the denominator.
  CHECK(*purity({1, {0, 0}, {0, 1, 4}}, t) == doctest::Approx(1.0));
  CHECK_FALSE(purity({1, {0, 0}, {4}}, t).has_value());
}

TEST_CASE("purity timeline over FIX-1 maximal cores") {
  const auto g = fix1();
  const auto timeline = purity_timeline(maximal_span_cores(g), fix1_gender(g), g.num_timestamps());
  REQUIRE(timeline.size() == 3);
  CHECK(*timeline[0] == doctest::Approx(5.0 / 6.0));
  CHECK(*timeline[1] == doctest::Approx(5.0 / 6.0));
  CHECK(*timeline[2] == doctest::Approx(1.0));
  const auto sparse = purity_timeline({{1, {1, 1}, {0, 1}}}, fix1_gender(g), 3);
  CHECK_FALSE(sparse[0].has_value());
  CHECK(sparse[1].has_value());
}

TEST_CASE("span length histogram") {
  const auto bins = span_length_distribution(maximal_span_cores(fix1()));
  REQUIRE(bins.size() == 2);
  CHECK(bins[0].length == 2);
  CHECK(bins[0].count == 1);
  CHECK(bins[1].length == 3);
  CHECK(bins[1].count == 1);
  CHECK(bins[0].percent + bins[1].percent == doctest::Approx(100.0));
  CHECK(span_length_distribution({}).empty());
  const auto all = span_length_distribution(span_cores(random_temporal_graph(9, 5, 0.5, 3)));
  double total = 0;
  for (const auto& b : all) total += b.percent;
  CHECK(total == doctest::Approx(100.0));
}

TEST_CASE("attribute files") {
  const auto g = fix1();
  std::istringstream in("# vertex gender\na F\nb F extra\nzz M\n\nd M\n");
  std::vector<std::string> skipped;
  const auto t = AttributeTable::load(in, g, "gender", &skipped);
  CHECK(t.name() == "gender");
  CHECK(t.labeled() == 3);
  CHECK(*t.of(id(g, "b")) == "F");
  CHECK_FALSE(t.of(id(g, "c")).has_value());
  CHECK(skipped == std::vector<std::string>{"zz"});
  std::istringstream bad("a\n");
  CHECK_THROWS_AS(AttributeTable::load(bad, g, "x"), ParseError);
  CHECK_THROWS_AS(AttributeTable::load_file("/nonexistent/attrs.txt", g, "x"), IoError);
}

TEST_CASE("anomaly detection leaves FIX-1 untouched at a long threshold") {
  const auto g = fix1();
  const auto r = detect_anomalies(g, 5, 1.5);
  CHECK(r.long_spans.empty());
  CHECK(r.flagged_vertices.empty());
  CHECK(r.flagged_timestamps.empty());
  CHECK(r.original_edges == std::vector<std::size_t>{4, 3, 1});
  CHECK(r.filtered_edges == r.original_edges);
  CHECK(r.filtered.total_edges() == g.total_edges());
  CHECK_THROWS_AS(detect_anomalies(g, 0, 1.5), ArgumentError);
  CHECK_THROWS_AS(detect_anomalies(g, 2, 1.0), ArgumentError);
}

TEST_CASE("anomaly detection on FIX-1 with a short threshold") {
  const auto g = fix1();
  const auto r = detect_anomalies(g, 2, 1.5);
  CHECK(r.long_spans == std::vector<Interval>{{0, 2}});
  // a and b are flagged at every timestamp; only cd survives at t=0 (4/1 > 1.5) and t=1 is emptied (3/0).
  CHECK(r.flagged_vertices.size() == 6);
  CHECK(r.intermediate_edges == std::vector<std::size_t>{1, 0, 0});
  CHECK(r.flagged_timestamps == std::vector<Timestamp>{0, 1, 2});
  CHECK(r.filtered.total_edges() == 0);
}

TEST_CASE("planted pair is removed exactly") {
  const auto p = planted_anomaly_graph(40, 60, 25, 15, 30, 5);
  const auto& g = p.graph;
  const auto r = detect_anomalies(g, 10, 1.5);
  std::size_t removed = 0, removed_planted = 0;
  for (Timestamp t = 0; t <= g.t_max(); ++t) {
    CHECK(r.filtered_edges[t] <= r.original_edges[t]);
    for (const auto& e : g.snapshot(t)) {
      if (r.filtered.has_edge(t, e.u, e.v)) continue;
      ++removed;
      if (e == Edge::make(p.x, p.y)) ++removed_planted;
    }
  }
  CHECK(removed_planted == 30);
  CHECK(removed == 30);
}

TEST_CASE("edges away from flagged vertices survive unless their timestamp is flagged") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = markov_temporal_graph(40, 30, 120, 0.2, 0.85, seed);
    const auto r = detect_anomalies(g, 4, 1.5);
    std::vector<std::vector<VertexId>> flagged(g.num_timestamps());
    for (const auto& [t, u] : r.flagged_vertices) flagged[t].push_back(u);
    for (Timestamp t = 0; t <= g.t_max(); ++t) {
      if (std::binary_search(r.flagged_timestamps.begin(), r.flagged_timestamps.end(), t)) {
        CHECK(r.filtered.snapshot(t).empty());
        continue;
      }
      for (const auto& e : g.snapshot(t)) {
        const bool touched = std::find(flagged[t].begin(), flagged[t].end(), e.u) != flagged[t].end() ||
                             std::find(flagged[t].begin(), flagged[t].end(), e.v) != flagged[t].end();
        CHECK(r.filtered.has_edge(t, e.u, e.v) != touched);
      }
    }
  }
}

TEST_CASE("FIX-1 embeddings") {
  const auto g = fix1();
  const auto x = tcs_embeddings(g, 2);
  CHECK(x[id(g, "a")] == std::vector<Order>{2, 1});
  CHECK(x[id(g, "d")] == std::vector<Order>{1, 0});
  CHECK_THROWS_AS(tcs_embeddings(g, 4), ArgumentError);
}

TEST_CASE("embeddings do not depend on thread count or vertex numbering") {
  const auto g = random_temporal_graph(15, 6, 0.4, 8);
  const auto one = tcs_embeddings(g, 3, 1);
  CHECK(tcs_embeddings(g, 3, 4) == one);
  CHECK(tcs_embeddings(g, 3, 0) == one);
  std::vector<VertexId> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::reverse(perm.begin(), perm.end());
  const auto moved = tcs_embeddings(relabel(g, perm), 3);
  for (VertexId u = 0; u < g.num_vertices(); ++u) CHECK(moved[perm[u]] == one[u]);
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    Order best = 0;
    for (Timestamp t = 0; t <= g.t_max(); ++t) {
      VertexSet all(g.num_vertices());
      std::iota(all.begin(), all.end(), VertexId{0});
      best = std::max(best, core_decomposition(all, EdgeSet(g.snapshot(t).begin(), g.snapshot(t).end())).of(u));
    }
    for (Order v : one[u]) CHECK(v <= best);
  }
}

TEST_CASE("query sampling") {
  const auto g = fix1();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto q = sample_query_vertices(g, 2, seed);
    REQUIRE(q.size() == 2);
    CHECK(q[0] < q[1]);
    for (VertexId u : q) {
      std::size_t deg = 0;
      for (Timestamp t = 0; t <= g.t_max(); ++t) deg += g.degree(t, u);
      CHECK(deg > 0);
    }
    CHECK(sample_query_vertices(g, 2, seed) == q);
  }
  CHECK(sample_query_vertices(g, 1, 4).size() == 1);
  CHECK(sample_query_vertices(g, 4, 4).size() == 4);
  CHECK_THROWS_AS(sample_query_vertices(g, 0, 1), ArgumentError);
  CHECK_THROWS_AS(sample_query_vertices(g, 5, 1), ArgumentError);
  const auto lonely = TemporalGraph::from_snapshots({"p", "q"}, {{}, {}});
  CHECK_THROWS_AS(sample_query_vertices(lonely, 2, 1), ArgumentError);

  const auto big = random_temporal_graph(30, 8, 0.1, 2);
  WalkOptions wide;
  wide.pool = 12;
  wide.move_probability = 0.5;
  const auto q = sample_query_vertices(big, 3, 17, wide);
  CHECK(q.size() == 3);
  CHECK(std::adjacent_find(q.begin(), q.end()) == q.end());
}

TEST_CASE("single-vertex sampling covers every vertex") {
  const auto g = TemporalGraph::from_snapshots({"a", "b", "c"}, {{{0, 1}}});
  std::vector<int> seen(3);
  for (std::uint64_t seed = 0; seed < 200; ++seed) ++seen[sample_query_vertices(g, 1, seed)[0]];
  for (int s : seen) CHECK(s > 0);
}
