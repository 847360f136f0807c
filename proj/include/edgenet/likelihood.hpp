#pragma once

#include <cstdint>
#include <vector>

#include "edgenet/generator.hpp"
#include "edgenet/graph.hpp"

namespace edgenet {

/// Closed-form log-probability of a canonical multigraph.
///
/// The leading factor theta is cancelled between the vertex term and the
/// ascending factorial of the denominator, so the result is finite for every
/// theta > -alpha:
///
///   sum_{i=1}^{V-1} ln(theta + i alpha) - ln (theta+1)^{(2n-1)}
///     + sum_{v: deg(v) >= 2} ln (1-alpha)^{(deg(v)-1)}
///
/// Throws MalformedGraphError for empty or non-canonical graphs.
double log_prob_closed(const Multigraph& g, const Params& params);

/// Same value from the sufficient statistics (n, V, degree histogram).
double log_prob_closed(const DegreeHistogram& hist, const Params& params);

/// The formula as written, alpha^V (theta/alpha)^{(V)} / theta^{(2n)} times
/// the vertex factors. Only defined for theta > 0.
double log_prob_literal(const Multigraph& g, const Params& params);

/// Sum of endpoint log-probabilities replaying the edge list in order. The
/// graph is relabeled by first appearance before replay.
double log_prob_sequential(const Multigraph& g, const Params& params);

struct EnumeratedGraph {
  Multigraph graph;
  double log_prob;
};

inline constexpr std::uint64_t kMaxEnumeratedEdges = 3;

/// Every canonical multigraph reachable with n edges (1 <= n <= 3), each
/// once, with its closed-form log-probability. Throws RangeError otherwise.
std::vector<EnumeratedGraph> enumerate_graphs(std::uint64_t n_edges, const Params& params,
                                              bool directed = false);

}  // namespace edgenet
