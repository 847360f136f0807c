#include "edgenet/likelihood.hpp"

#include <functional>
#include <map>
#include <string>
#include <unordered_map>

#include "edgenet/error.hpp"
#include "edgenet/numerics.hpp"
#include "edgenet/parallel.hpp"

namespace edgenet {

using numerics::log_rising;

namespace {

double vertex_factor_sum(const DegreeHistogram& hist, double alpha) {
  double sum = 0.0;
  for (const auto& [k, count] : hist.counts()) {
    if (k >= 2) sum += static_cast<double>(count) * log_rising(1.0 - alpha, k - 1);
  }
  return sum;
}

void require_canonical(const Multigraph& g) {
  if (g.num_edges() == 0) throw MalformedGraphError("likelihood of an empty graph");
  if (!g.is_canonical()) throw MalformedGraphError("graph is not in canonical labeling");
}

}  // namespace

double log_prob_closed(const DegreeHistogram& hist, const Params& params) {
  const std::uint64_t n = hist.total_edges();
  const std::uint64_t v = hist.total_vertices();
  if (n == 0 || v == 0) throw MalformedGraphError("likelihood of an empty graph");
  const double alpha = params.alpha();
  const double theta = params.theta();
  return omp::log_affine_sum(theta, alpha, v - 1) - log_rising(theta + 1.0, 2 * n - 1) +
         vertex_factor_sum(hist, alpha);
}

double log_prob_closed(const Multigraph& g, const Params& params) {
  require_canonical(g);
  return log_prob_closed(degree_histogram(g), params);
}

double log_prob_literal(const Multigraph& g, const Params& params) {
  require_canonical(g);
  const double alpha = params.alpha();
  const double theta = params.theta();
  if (!(theta > 0.0)) throw DomainError("literal form requires theta > 0");
  const DegreeHistogram hist = degree_histogram(g);
  const auto v = hist.total_vertices();
  return static_cast<double>(v) * std::log(alpha) + log_rising(theta / alpha, v) -
         log_rising(theta, 2 * hist.total_edges()) + vertex_factor_sum(hist, alpha);
}

double log_prob_sequential(const Multigraph& g, const Params& params) {
  if (g.num_edges() == 0) throw MalformedGraphError("likelihood of an empty graph");
  const Multigraph canon = g.canonical();
  GeneratorState state(params, 0);
  double sum = 0.0;
  for (const Edge& e : canon.edges()) {
    for (VertexId x : {e.u, e.v}) {
      if (x > state.num_vertices() + 1) throw ReplayError("endpoint skips vertex labels");
      sum += state.endpoint_logprob(x);
      state.commit(x);
    }
  }
  return sum;
}

std::vector<EnumeratedGraph> enumerate_graphs(std::uint64_t n_edges, const Params& params,
                                              bool directed) {
  if (n_edges < 1 || n_edges > kMaxEnumeratedEdges) {
    throw RangeError("enumerate_graphs supports 1 <= n <= " + std::to_string(kMaxEnumeratedEdges));
  }
  const std::size_t slots = 2 * n_edges;
  std::vector<VertexId> choice(slots, 0);
  // Buckets keyed by the sorted degree sequence; exact comparison inside.
  std::map<std::vector<Degree>, std::vector<std::size_t>> buckets;
  std::vector<EnumeratedGraph> out;

  std::function<void(std::size_t, VertexId)> recurse = [&](std::size_t slot, VertexId used) {
    if (slot == slots) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots; i += 2) edges.push_back({choice[i], choice[i + 1]});
      Multigraph g(std::move(edges), directed);
      std::vector<Degree> key = degree_sequence(g);
      std::sort(key.begin(), key.end());
      auto& bucket = buckets[key];
      for (std::size_t idx : bucket) {
        if (out[idx].graph == g) return;
      }
      bucket.push_back(out.size());
      const double lp = log_prob_closed(g, params);
      out.push_back({std::move(g), lp});
      return;
    }
    for (VertexId x = 1; x <= used + 1; ++x) {
      choice[slot] = x;
      recurse(slot + 1, x == used + 1 ? used + 1 : used);
    }
  };
  recurse(0, 0);
  return out;
}

}  // namespace edgenet
