#include "edgenet/generator.hpp"

#include <cmath>
#include <string>

#include "edgenet/error.hpp"

namespace edgenet {

Params::Params(double alpha, double theta) : alpha_(alpha), theta_(theta) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!std::isfinite(theta) || !(theta > -alpha)) {
    throw DomainError("theta must exceed -alpha, got " + std::to_string(theta));
  }
}

namespace {

// Uniform double in [0, 1) from the top 53 bits.
double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, bound) by multiply-shift; the bias is below 2^-32
// for any bound reachable here.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

}  // namespace

GeneratorState::GeneratorState(Params params, std::uint64_t seed) : params_(params), rng_(seed) {}

VertexId GeneratorState::sample_endpoint() {
  const auto n_vert = static_cast<double>(num_vertices());
  VertexId choice;
  if (degrees_.empty()) {
    choice = 1;
  } else {
    const double alpha = params_.alpha();
    const double repeat_mass = static_cast<double>(repeat_list_.size());
    const double uniform_mass = n_vert * (1.0 - alpha);
    const double total = static_cast<double>(total_degree_) + params_.theta();
    const double u = uniform01(rng_) * total;
    if (u < repeat_mass) {
      choice = repeat_list_[uniform_index(rng_, repeat_list_.size())];
    } else if (u < repeat_mass + uniform_mass) {
      choice = static_cast<VertexId>(uniform_index(rng_, degrees_.size()) + 1);
    } else {
      choice = static_cast<VertexId>(degrees_.size() + 1);
    }
  }
  commit(choice);
  return choice;
}

double GeneratorState::endpoint_logprob(VertexId choice) const {
  const std::size_t n = num_vertices();
  if (choice == 0 || choice > n + 1) {
    throw DomainError("endpoint choice " + std::to_string(choice) + " out of range 1.." +
                      std::to_string(n + 1));
  }
  if (n == 0) return 0.0;
  const double total = static_cast<double>(total_degree_) + params_.theta();
  if (choice == n + 1) {
    return std::log(params_.theta() + params_.alpha() * static_cast<double>(n)) - std::log(total);
  }
  return std::log(static_cast<double>(degrees_[choice - 1]) - params_.alpha()) - std::log(total);
}

void GeneratorState::commit(VertexId choice) {
  const std::size_t n = num_vertices();
  if (choice == 0 || choice > n + 1) {
    throw ReplayError("endpoint " + std::to_string(choice) + " skips vertex labels");
  }
  if (choice == n + 1) {
    degrees_.push_back(1);
  } else {
    ++degrees_[choice - 1];
    repeat_list_.push_back(choice);
  }
  ++total_degree_;
}

Multigraph generate(const Params& params, std::uint64_t n_edges, std::uint64_t seed,
                    bool directed) {
  if (n_edges == 0) throw DomainError("generate: need at least one edge");
  GeneratorState state(params, seed);
  std::vector<Edge> edges;
  edges.reserve(n_edges);
  for (std::uint64_t t = 0; t < n_edges; ++t) {
    const VertexId u = state.sample_endpoint();
    const VertexId v = state.sample_endpoint();
    edges.push_back({u, v});
  }
  return Multigraph(std::move(edges), directed);
}

}  // namespace edgenet
