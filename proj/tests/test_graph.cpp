#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "edgenet/error.hpp"
#include "edgenet/generator.hpp"
#include "edgenet/graph.hpp"

using namespace edgenet;

namespace {

Multigraph undirected(std::vector<Edge> edges) { return Multigraph(std::move(edges), false); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

EdgeList parse(const std::string& text, bool directed = false) {
  std::istringstream in(text);
  return parse_edge_list(in, directed);
}

}  // namespace

TEST(Multigraph, RejectsGapsAndZeroIds) {
  EXPECT_THROW(undirected({{1, 3}}), MalformedGraphError);
  EXPECT_THROW(undirected({{0, 1}}), MalformedGraphError);
  EXPECT_NO_THROW(undirected({{2, 1}}));
}

TEST(Multigraph, Canonicalization) {
  const Multigraph g = undirected({{2, 3}, {1, 2}});
  EXPECT_FALSE(g.is_canonical());
  const Multigraph c = g.canonical();
  EXPECT_TRUE(c.is_canonical());
  EXPECT_EQ(c.edges(), (std::vector<Edge>{{1, 2}, {3, 1}}));
  EXPECT_EQ(c.canonical(), c);
}

TEST(DegreeSequence, Examples) {
  EXPECT_EQ(degree_sequence(undirected({{1, 1}})), (std::vector<Degree>{2}));
  EXPECT_EQ(degree_sequence(undirected({{1, 2}, {2, 3}})), (std::vector<Degree>{1, 2, 1}));
  EXPECT_EQ(degree_sequence(undirected({{1, 2}, {1, 2}})), (std::vector<Degree>{2, 2}));
}

TEST(DegreeHistogram, Examples) {
  const auto h1 = degree_histogram(undirected({{1, 1}}));
  EXPECT_EQ(h1.counts(), (std::map<Degree, std::uint64_t>{{2, 1}}));
  EXPECT_EQ(h1.total_vertices(), 1u);
  EXPECT_EQ(h1.total_edges(), 1u);

  const auto h2 = degree_histogram(undirected({{1, 2}, {2, 3}}));
  EXPECT_EQ(h2.counts(), (std::map<Degree, std::uint64_t>{{1, 2}, {2, 1}}));
  EXPECT_DOUBLE_EQ(h2.proportion(1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(h2.ccdf(1), 1.0);
  EXPECT_DOUBLE_EQ(h2.ccdf(2), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(h2.ccdf(3), 0.0);
  const auto pts = h2.ccdf_points();
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1].degree, 2u);
  EXPECT_DOUBLE_EQ(pts[1].ccdf, 1.0 / 3.0);
}

TEST(DegreeHistogram, RejectsBrokenHandshake) {
  EXPECT_THROW(DegreeHistogram({{1, 3}}, 2), DomainError);
  EXPECT_THROW(DegreeHistogram({{0, 1}}, 0), DomainError);
}

TEST(DegreeHistogram, HandshakeOnGeneratedGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Multigraph g = generate(Params(0.1 + 0.016 * seed, 2.0), 1 + seed * 37, seed);
    const auto h = degree_histogram(g);
    std::uint64_t vertices = 0, degree_sum = 0;
    for (const auto& [k, c] : h.counts()) {
      EXPECT_GE(k, 1u);
      vertices += c;
      degree_sum += k * c;
    }
    EXPECT_EQ(vertices, g.num_vertices());
    EXPECT_EQ(degree_sum, 2 * g.num_edges());
  }
}

TEST(ProjectSimple, Examples) {
  const Multigraph p = project_simple(undirected({{1, 2}, {1, 2}, {2, 2}}));
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{1, 2}, {2, 2}}));

  const Multigraph simple = undirected({{1, 2}, {2, 3}, {3, 1}});
  EXPECT_EQ(project_simple(simple), simple);

  const Multigraph d(std::vector<Edge>{{1, 2}, {2, 1}}, true);
  EXPECT_EQ(project_simple(d).edges(), (std::vector<Edge>{{1, 2}, {2, 1}}));
  EXPECT_EQ(project_simple(undirected({{1, 2}, {2, 1}})).edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(ProjectSimple, SelfLoopsCollapse) {
  const Multigraph p = project_simple(undirected({{1, 1}, {1, 1}, {1, 1}}));
  EXPECT_EQ(p.edges(), (std::vector<Edge>{{1, 1}}));
  EXPECT_EQ(degree_sequence(p), (std::vector<Degree>{2}));
}

TEST(ProjectSimple, IdempotentAndKeepsVertices) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (bool directed : {false, true}) {
      const Multigraph g = generate(Params(0.4, 0.5), 2000, seed, directed);
      const Multigraph p = project_simple(g);
      EXPECT_EQ(project_simple(p), p);
      EXPECT_EQ(p.num_vertices(), g.num_vertices());
      EXPECT_TRUE(p.is_canonical());
      EXPECT_LE(p.num_edges(), g.num_edges());
    }
  }
}

TEST(ParseEdgeList, Examples) {
  const auto a = parse("# c\n1 2\n2 3\n");
  EXPECT_EQ(a.graph.num_edges(), 2u);
  EXPECT_EQ(a.graph.num_vertices(), 3u);

  const auto b = parse("a b\nb a\n");
  EXPECT_EQ(b.graph.edges(), (std::vector<Edge>{{1, 2}, {2, 1}}));
  EXPECT_EQ(b.graph.num_vertices(), 2u);
  EXPECT_EQ(b.labels, (std::vector<std::string>{"a", "b"}));

  const auto c = parse("5 5\n");
  EXPECT_EQ(c.graph.num_edges(), 1u);
  EXPECT_EQ(c.graph.num_vertices(), 1u);
  EXPECT_EQ(degree_sequence(c.graph), (std::vector<Degree>{2}));
  EXPECT_EQ(c.labels, (std::vector<std::string>{"5"}));
}

TEST(ParseEdgeList, CommentsBlankLinesAndCrLf) {
  const auto g = parse("% matrix market style\r\n\r\n  # indented comment\nx\ty\r\n\n y   z \n");
  EXPECT_EQ(g.graph.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  EXPECT_EQ(g.labels, (std::vector<std::string>{"x", "y", "z"}));
}

TEST(ParseEdgeList, Errors) {
  try {
    parse("1 2\n# ok\n3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse("1 2 3\n"), ParseError);
  EXPECT_THROW(parse("# only comments\n\n"), EmptyInputError);
  EXPECT_THROW(parse(""), EmptyInputError);
  EXPECT_THROW(parse_edge_list_file("/nonexistent/path.tsv", false), IoError);
}

TEST(WriteEdgeList, SelfLoopGolden) {
  const std::string text = write_edge_list(undirected({{1, 1}}));
  EXPECT_EQ(text, "# edges=1\n# vertices=1\n# directed=false\n1\t1\n");
  EXPECT_EQ(text, slurp(std::string(EDGENET_TEST_DATA_DIR) + "/golden/self_loop.tsv"));
}

TEST(WriteEdgeList, GeneratedGolden) {
  const Multigraph g = generate(Params(0.5, 1.0), 20, 7, true);
  EXPECT_EQ(write_edge_list(g), slurp(std::string(EDGENET_TEST_DATA_DIR) + "/golden/generated_a0.5_t1_n20_s7.tsv"));
}

TEST(WriteEdgeList, RoundTripsGeneratedGraphs) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const bool directed = i % 2 == 0;
    const Multigraph g = generate(Params(0.05 + 0.03 * i, -0.04 + i), 1 + rng() % 500, rng(), directed);
    const auto back = parse(write_edge_list(g), directed);
    EXPECT_EQ(back.graph, g);
  }
}

TEST(WriteEdgeList, RoundTripsLargeGraph) {
  const Multigraph g = generate(Params(0.67, 1.0), 100000, 2024);
  EXPECT_EQ(parse(write_edge_list(g)).graph, g);
}

TEST(WriteEdgeList, ParseOfWriteCanonicalizesPermutedLabels) {
  const Multigraph g = undirected({{3, 1}, {2, 3}, {2, 2}});
  const auto back = parse(write_edge_list(g));
  EXPECT_EQ(back.graph, g.canonical());
  EXPECT_EQ(back.labels, (std::vector<std::string>{"3", "1", "2"}));
}
