#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "edgenet/error.hpp"
#include "edgenet/generator.hpp"
#include "edgenet/likelihood.hpp"
#include "oracles.hpp"

using namespace edgenet;

namespace {

const Multigraph kSelfLoop(std::vector<Edge>{{1, 1}}, false);
const Multigraph kSingleEdge(std::vector<Edge>{{1, 2}}, false);

std::vector<Params> param_grid() {
  std::vector<Params> out;
  for (double a : {0.1, 0.25, 0.5, 0.85, 0.95}) {
    for (double t : {-0.9 * a, -0.2 * a, 0.0, 1.0, 5.0, 350.0}) out.emplace_back(a, t);
  }
  return out;
}

double log_sum_exp(const std::vector<EnumeratedGraph>& gs) {
  double m = -INFINITY;
  for (const auto& g : gs) m = std::max(m, g.log_prob);
  double s = 0.0;
  for (const auto& g : gs) s += std::exp(g.log_prob - m);
  return m + std::log(s);
}

}  // namespace

TEST(LogProbClosed, SingleEdgeGraphs) {
  const Params p(0.5, 1.0);
  EXPECT_NEAR(log_prob_closed(kSelfLoop, p), std::log(0.25), 1e-15);
  EXPECT_NEAR(log_prob_closed(kSingleEdge, p), std::log(0.75), 1e-15);
  for (const Params& q : param_grid()) {
    const double total = std::exp(log_prob_closed(kSelfLoop, q)) + std::exp(log_prob_closed(kSingleEdge, q));
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(std::exp(log_prob_closed(kSelfLoop, q)), (1 - q.alpha()) / (q.theta() + 1), 1e-14);
  }
}

TEST(LogProbClosed, Errors) {
  EXPECT_THROW(log_prob_closed(Multigraph(), Params(0.5, 1.0)), MalformedGraphError);
  EXPECT_THROW(log_prob_closed(Multigraph({{2, 1}}, false), Params(0.5, 1.0)), MalformedGraphError);
}

TEST(LogProbClosed, FiniteForNegativeTheta) {
  const Params near_boundary(0.85, -0.63);
  const Multigraph g = generate(near_boundary, 2000, 3);
  EXPECT_TRUE(std::isfinite(log_prob_closed(g, near_boundary)));
  EXPECT_LT(log_prob_closed(g, near_boundary), 0.0);
}

TEST(LogProbClosed, MatchesLiteralFormForPositiveTheta) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Params p(0.02 + 0.96 * (rng() % 1000) / 1000.0, 0.01 + (rng() % 2000) / 100.0);
    const Multigraph g = generate(p, 1 + rng() % 300, rng());
    EXPECT_NEAR(log_prob_closed(g, p), log_prob_literal(g, p), 1e-10);
  }
  EXPECT_THROW(log_prob_literal(kSelfLoop, Params(0.5, -0.1)), DomainError);
}

TEST(LogProbClosed, MatchesTermByTermOracleOnLargeGraphs) {
  // Large enough that the parallel kernels take the blocked path.
  for (const Params p : {Params(0.67, 1.0), Params(0.85, -0.63), Params(0.15, 350.0)}) {
    const Multigraph g = generate(p, 200000, 5);
    const auto hist = degree_histogram(g);
    const double ref = oracle::log_likelihood(g.num_edges(), hist.counts(), p.alpha(), p.theta());
    EXPECT_NEAR(log_prob_closed(g, p), ref, 1e-12 * std::fabs(ref));
  }
}

TEST(LogProbClosed, DependsOnlyOnDegreeMultiset) {
  // Same n, V and degree multiset {3,2,1}, different wiring.
  const Multigraph a(std::vector<Edge>{{1, 1}, {1, 2}, {2, 3}}, false);
  const Multigraph b(std::vector<Edge>{{1, 2}, {1, 3}, {1, 2}}, false);
  ASSERT_EQ(degree_histogram(a), degree_histogram(b));
  for (const Params& p : param_grid()) {
    EXPECT_EQ(log_prob_closed(a, p), log_prob_closed(b, p));
  }
}

TEST(LogProbSequential, SingleEdgeGraphs) {
  const Params p(0.5, 1.0);
  EXPECT_NEAR(log_prob_sequential(kSelfLoop, p), std::log(0.25), 1e-15);
  EXPECT_NEAR(log_prob_sequential(kSingleEdge, p), std::log(0.75), 1e-15);
  EXPECT_NEAR(log_prob_sequential(kSelfLoop, p), log_prob_closed(kSelfLoop, p), 1e-12);
}

TEST(LogProbSequential, AgreesWithClosedForm) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double alpha = 0.01 + 0.98 * unit(rng);
    const double theta = -alpha + 1e-3 + 20.0 * unit(rng) * unit(rng);
    const Params p(alpha, theta);
    const Multigraph g = generate(p, 1 + rng() % 50, rng(), i % 2 == 0);
    EXPECT_NEAR(log_prob_sequential(g, p), log_prob_closed(g, p), 1e-9);
  }
}

TEST(LogProbSequential, RelabelsPermutedVertices) {
  const Params p(0.4, 0.7);
  const Multigraph permuted(std::vector<Edge>{{3, 1}, {2, 3}, {1, 1}}, false);
  EXPECT_NEAR(log_prob_sequential(permuted, p), log_prob_closed(permuted.canonical(), p), 1e-12);
  EXPECT_THROW(log_prob_sequential(Multigraph(), p), MalformedGraphError);
}

TEST(LogProbSequential, EdgeOrderInvariance) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Params p(0.05 + 0.9 * (rng() % 100) / 100.0, 0.5);
    const Multigraph g = generate(p, 1 + rng() % 6, rng());
    const double closed = log_prob_closed(g, p);
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    do {
      const Multigraph permuted = Multigraph(edges, false).canonical();
      EXPECT_NEAR(log_prob_sequential(permuted, p), closed, 1e-9);
    } while (std::next_permutation(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    }));
  }
}

TEST(EnumerateGraphs, CountsAreBellNumbers) {
  // Each graph is a sequence of 2n endpoint labels in first-appearance
  // order, i.e. a set partition of the 2n slots.
  const Params p(0.5, 1.0);
  EXPECT_EQ(enumerate_graphs(1, p).size(), 2u);
  EXPECT_EQ(enumerate_graphs(2, p).size(), 15u);
  EXPECT_EQ(enumerate_graphs(3, p).size(), 203u);
}

TEST(EnumerateGraphs, SingleEdgeGraphs) {
  const auto gs = enumerate_graphs(1, Params(0.5, 1.0));
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[0].graph, kSelfLoop);
  EXPECT_EQ(gs[1].graph, kSingleEdge);
}

TEST(EnumerateGraphs, Normalized) {
  for (std::uint64_t n = 1; n <= 3; ++n) {
    for (const Params& p : param_grid()) {
      const auto gs = enumerate_graphs(n, p);
      EXPECT_NEAR(std::exp(log_sum_exp(gs)), 1.0, 1e-10) << "n=" << n;
      for (const auto& g : gs) {
        EXPECT_TRUE(g.graph.is_canonical());
        EXPECT_NEAR(g.log_prob, log_prob_sequential(g.graph, p), 1e-12);
      }
    }
  }
}

TEST(EnumerateGraphs, DistinctGraphs) {
  const auto gs = enumerate_graphs(3, Params(0.3, 0.3));
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) EXPECT_FALSE(gs[i].graph == gs[j].graph);
  }
}

TEST(EnumerateGraphs, RangeErrors) {
  EXPECT_THROW(enumerate_graphs(0, Params(0.5, 1.0)), RangeError);
  EXPECT_THROW(enumerate_graphs(4, Params(0.5, 1.0)), RangeError);
}
