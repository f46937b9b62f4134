#include <doctest.h>

#include <map>
#include <sstream>

#include "dynemb/errors.hpp"
#include "dynemb/tempograph.hpp"
#include "support.hpp"

using namespace dynemb;

namespace {

TemporalGraph parse(const std::string& text, const SnapshotSpec& spec) {
  std::istringstream in(text);
  return parse_edge_list(in, spec);
}

// Per-snapshot multiset of label pairs; independent of vertex numbering.
using Content = std::vector<std::map<std::pair<std::string, std::string>, std::uint32_t>>;

Content content(const TemporalGraph& g) {
  Content c(g.snapshot_count());
  for (std::size_t t = 0; t < g.snapshot_count(); ++t) {
    for (const auto& e : g.snapshot(t).edges()) {
      auto a = g.label(e.u), b = g.label(e.v);
      if (b < a) std::swap(a, b);
      c[t][{a, b}] += e.count;
    }
  }
  return c;
}

std::set<std::string> vertex_set(const TemporalGraph& g) {
  return {g.labels().begin(), g.labels().end()};
}

}  // namespace

TEST_SUITE("tempograph") {

TEST_CASE("equal-width binning splits [min, max] into K bins") {
  const auto g = parse("0 1 5\n1 2 15\n", SnapshotSpec::equal_width(2));
  REQUIRE(g.snapshot_count() == 2);
  CHECK(g.vertex_count() == 3);
  const auto s0 = g.snapshot(0).edges(), s1 = g.snapshot(1).edges();
  REQUIRE(s0.size() == 1);
  REQUIRE(s1.size() == 1);
  CHECK(g.label(s0[0].u) == "0");
  CHECK(g.label(s0[0].v) == "1");
  CHECK(g.label(s1[0].u) == "1");
  CHECK(g.label(s1[0].v) == "2");
}

TEST_CASE("self-loops are dropped but still register the vertex") {
  const auto g = parse("0 1 5\n3 3 7\n1 2 15\n", SnapshotSpec::equal_width(2));
  CHECK(g.vertex_count() == 4);
  const auto v3 = g.index_of("3");
  REQUIRE(v3.has_value());
  for (const auto& s : g.snapshots()) CHECK(s.degree(*v3) == 0);
  CHECK(g.distinct_edge_count() == 2);
}

TEST_CASE("duplicates accumulate multiplicity and comments are skipped") {
  const auto g = parse("# header\n\na b 0\nb a 0\na b 0\nb c 1\n", SnapshotSpec::pre_binned());
  REQUIRE(g.snapshot(0).edge_count() == 1);
  CHECK(g.snapshot(0).edges()[0].count == 3);
  CHECK(g.snapshot(0).interaction_count() == 3);
  CHECK(g.interaction_count() == 4);
}

TEST_CASE("explicit boundaries") {
  const auto g = parse("0 1 1\n1 2 4\n2 3 9\n", SnapshotSpec::explicit_boundaries({3, 6}));
  REQUIRE(g.snapshot_count() == 3);
  for (std::size_t t = 0; t < 3; ++t) CHECK(g.snapshot(t).edge_count() == 1);
  // a timestamp equal to a boundary lands in the later bin
  const auto h = parse("0 1 3\n1 2 6\n", SnapshotSpec::explicit_boundaries({3, 6}));
  REQUIRE(h.snapshot_count() == 3);
  CHECK(h.snapshot(0).edge_count() == 0);
  CHECK(h.snapshot(1).edge_count() == 1);
}

TEST_CASE("malformed input reports the line number") {
  try {
    parse("0 1 5\n1 2\n", SnapshotSpec::equal_width(2));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse("0 1 x\n1 2 3\n", SnapshotSpec::equal_width(2)), ParseError);
  CHECK_THROWS_AS(parse("0 1 -1\n1 2 3\n", SnapshotSpec::pre_binned()), ParseError);
}

TEST_CASE("fewer than two non-empty snapshots is a structural error") {
  CHECK_THROWS_AS(parse("0 1 5\n1 2 5\n", SnapshotSpec::pre_binned()), StructuralError);
  CHECK_THROWS_AS(parse("3 3 1\n0 1 2\n", SnapshotSpec::pre_binned()), StructuralError);
}

TEST_CASE("parse then dump then parse preserves vertices and edge multisets") {
  const std::string text =
      "alice bob 10\n"
      "bob carol 12\n"
      "alice bob 13\n"
      "dave dave 20\n"
      "carol alice 25\n"
      "erin bob 30\n";
  const auto g = parse(text, SnapshotSpec::equal_width(3));
  std::ostringstream out;
  dump_edge_list(out, g);
  const auto h = parse(out.str(), SnapshotSpec::pre_binned());
  CHECK(vertex_set(g) == vertex_set(h));
  CHECK(content(g) == content(h));
}

TEST_CASE("round trip holds on random multigraphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> v(0, 12), t(0, 4);
    std::ostringstream text;
    for (int i = 0; i < 60; ++i) text << 'n' << v(rng) << " n" << v(rng) << ' ' << t(rng) << '\n';
    text << "a b 0\nc d 4\n";
    const auto g = parse(text.str(), SnapshotSpec::pre_binned());
    std::ostringstream out;
    dump_edge_list(out, g);
    const auto h = parse(out.str(), SnapshotSpec::pre_binned());
    CHECK(vertex_set(g) == vertex_set(h));
    CHECK(content(g) == content(h));
  }
}

TEST_CASE("degree counts distinct neighbors") {
  const auto iso = testing::from_pairs(3, {{0, 1}});
  CHECK(degree(iso, 2) == 0);
  const auto tri = testing::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
  for (Vertex v = 0; v < 3; ++v) CHECK(degree(tri, v) == 2);
  const auto star = testing::from_pairs(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(degree(star, 0) == 5);
  CHECK_THROWS(degree(star, 6));

  std::vector<Edge> multi{{0, 1, 4}, {1, 0, 2}};
  CHECK(degree(Snapshot(2, multi), 0) == 1);
}

TEST_CASE("degree sum is twice the edge count and adjacency is symmetric") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_snapshot(40, 0.1, rng);
    std::size_t sum = 0;
    for (Vertex v = 0; v < 40; ++v) sum += degree(s, v);
    CHECK(sum == 2 * s.edge_count());
    const Matrix a = adjacency_dense(s, false);
    for (std::size_t i = 0; i < 40; ++i) {
      CHECK(a(i, i) == 0.0);
      for (std::size_t j = 0; j < 40; ++j) CHECK(a(i, j) == a(j, i));
    }
    CHECK(testing::to_dense(a) == testing::adjacency(s));
  }
}

TEST_CASE("weighted adjacency carries multiplicity and the size guard trips") {
  std::vector<Edge> e{{0, 1, 3}, {1, 2, 1}};
  const Snapshot s(3, e);
  const Matrix a = adjacency_dense(s, true);
  CHECK(a(0, 1) == 3.0);
  CHECK(a(1, 0) == 3.0);
  CHECK(adjacency_dense(s, false)(0, 1) == 1.0);
  CHECK_THROWS(adjacency_dense(s, false, 2));
}

TEST_CASE("static SBM without churn has no inter-community edges") {
  SbmParams p;
  p.nodes = 60;
  p.communities = 3;
  p.snapshots = 4;
  p.p_in = 0.3;
  p.p_out = 0.0;
  p.churn = 0.0;
  const auto sbm = synth_dynamic_sbm(p);
  for (std::size_t t = 1; t < p.snapshots; ++t) CHECK(sbm.memberships[t] == sbm.memberships[0]);
  for (const auto& s : sbm.graph.snapshots())
    for (const auto& e : s.edges()) CHECK(sbm.memberships[0][e.u] == sbm.memberships[0][e.v]);
}

TEST_CASE("SBM is a pure function of its parameters") {
  SbmParams p;
  const auto a = synth_dynamic_sbm(p), b = synth_dynamic_sbm(p);
  CHECK(a.memberships == b.memberships);
  for (std::size_t t = 0; t < p.snapshots; ++t) CHECK(a.graph.snapshot(t) == b.graph.snapshot(t));
  p.seed = 2;
  CHECK_FALSE(synth_dynamic_sbm(p).graph.snapshot(0) == a.graph.snapshot(0));
}

TEST_CASE("drifting SBM keeps most edges inside communities") {
  SbmParams p;  // 200 nodes, 4 communities, 8 snapshots, 0.2 / 0.01, churn 0.05
  const auto sbm = synth_dynamic_sbm(p);
  double frac = 0.0;
  for (std::size_t t = 0; t < p.snapshots; ++t) {
    std::size_t intra = 0;
    const auto& s = sbm.graph.snapshot(t);
    for (const auto& e : s.edges()) intra += sbm.memberships[t][e.u] == sbm.memberships[t][e.v];
    frac += static_cast<double>(intra) / static_cast<double>(s.edge_count());
  }
  CHECK(frac / static_cast<double>(p.snapshots) > 0.85);
}

TEST_CASE("SBM rejects invalid probabilities") {
  SbmParams p;
  p.p_in = 0.1;
  p.p_out = 0.2;
  CHECK_THROWS(synth_dynamic_sbm(p));
  p.p_out = -0.1;
  CHECK_THROWS(synth_dynamic_sbm(p));
}

}
