#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "edgenet/graph.hpp"

namespace edgenet {

// Model parameters, 0 < alpha < 1 and theta > -alpha.
class Params {
 public:
  /// Throws DomainError outside the valid range.
  Params(double alpha, double theta);
  double alpha() const noexcept { return alpha_; }
  double theta() const noexcept { return theta_; }
  friend bool operator==(const Params&, const Params&) = default;

 private:
  double alpha_;
  double theta_;
};

using Rng = std::mt19937_64;
inline constexpr std::string_view kRngName = "mt19937_64";

// Sequential sampling state. Degrees are updated per endpoint: the first
// endpoint of an edge is counted before the second one is drawn.
class GeneratorState {
 public:
  GeneratorState(Params params, std::uint64_t seed);

  const Params& params() const noexcept { return params_; }
  std::size_t num_vertices() const noexcept { return degrees_.size(); }
  std::uint64_t total_degree() const noexcept { return total_degree_; }
  const std::vector<Degree>& degrees() const noexcept { return degrees_; }
  // Vertex v appears degree(v) - 1 times.
  const std::vector<VertexId>& repeat_list() const noexcept { return repeat_list_; }

  /// Draws an endpoint: existing vertex i with weight D(i) - alpha, a new
  /// vertex with weight theta + alpha * N. Updates the state.
  VertexId sample_endpoint();

  /// ln of the probability that the next endpoint equals `choice`, which must
  /// be an existing vertex or num_vertices() + 1. Does not mutate.
  double endpoint_logprob(VertexId choice) const;

  /// Records `choice` as the next endpoint without drawing.
  void commit(VertexId choice);

 private:
  Params params_;
  std::vector<Degree> degrees_;
  std::vector<VertexId> repeat_list_;
  std::uint64_t total_degree_ = 0;
  Rng rng_;
};

/// Generates an n-edge graph; edge t joins two successive endpoint draws.
Multigraph generate(const Params& params, std::uint64_t n_edges, std::uint64_t seed,
                    bool directed = false);

}  // namespace edgenet
