#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "edgenet/generator.hpp"
#include "edgenet/graph.hpp"

namespace edgenet {

// ---------------------------------------------------------------------------
// Limiting degree distribution
// ---------------------------------------------------------------------------

/// Exact limiting degree mass alpha (1-alpha)^{(k-1)} / k!.
double limit_pmf(Degree k, double alpha);

/// Power-law approximant alpha k^{-(alpha+1)} / Gamma(1-alpha).
double limit_pmf_asymptotic(Degree k, double alpha);

// ---------------------------------------------------------------------------
// Tail exponent
// ---------------------------------------------------------------------------

enum class GammaEstimator { mle, ccdf };
std::string to_string(GammaEstimator e);

/// Least-squares slope s of ln CCDF(k) against ln k; returns 1 - s.
/// Needs at least two points.
double fit_ccdf_slope(std::span<const DegreeHistogram::CcdfPoint> points);

/// CCDF regression over the histogram support with k >= kmin.
double estimate_gamma_ccdf(const DegreeHistogram& hist, Degree kmin);

/// Continuous-approximation discrete power-law MLE,
/// 1 + m / sum ln(k / (kmin - 1/2)) over the m vertices with k >= kmin.
double estimate_gamma_mle(const DegreeHistogram& hist, Degree kmin);

struct TailFit {
  double gamma = 0.0;
  Degree kmin = 1;
  double ks_distance = 0.0;
  std::uint64_t tail_vertices = 0;
};

inline constexpr Degree kAutoKminMax = 100;

/// Chooses kmin in 1..kmin_max minimizing the Kolmogorov-Smirnov distance
/// between the empirical tail and the fitted power law, using
/// estimate_gamma_mle at each candidate.
TailFit estimate_gamma_auto(const DegreeHistogram& hist, Degree kmin_max = kAutoKminMax);

// ---------------------------------------------------------------------------
// Vertex growth
// ---------------------------------------------------------------------------

/// Gamma(theta+1) / (alpha Gamma(theta+alpha)) (2n)^alpha.
double expected_vertices(const Params& params, std::uint64_t n_edges);

struct ThetaSolution {
  double theta = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

inline constexpr double kMaxThetaBracket = 1e8;

/// The theta > -alpha at which expected_vertices matches the observed count.
/// Throws UnattainableTargetError if the bracket would exceed 1e8.
ThetaSolution solve_theta_bracketed(double alpha, std::uint64_t n_edges, double n_vertices);
double solve_theta(double alpha, std::uint64_t n_edges, double n_vertices);

// ---------------------------------------------------------------------------
// Parameter fits
// ---------------------------------------------------------------------------

enum class FitMethod { moment, mle };
std::string to_string(FitMethod m);

struct FitResult {
  double alpha_hat = 0.0;
  double theta_hat = 0.0;
  double gamma_hat = 0.0;
  FitMethod method = FitMethod::moment;
  std::uint64_t n_edges = 0;
  std::uint64_t n_vertices = 0;
  std::optional<double> log_likelihood;
  std::optional<Degree> kmin;
  bool converged = true;

  // diagnostics not part of the serialized record
  std::optional<GammaEstimator> estimator;
  std::optional<ThetaSolution> theta_bracket;
  int iterations = 0;
};

/// Fixed key order: alpha_hat, theta_hat, gamma_hat, method, n_edges,
/// n_vertices, log_likelihood, kmin, converged.
std::string fit_result_to_json(const FitResult& fit);
FitResult fit_result_from_json(const std::string& text);

/// alpha = gamma_hat - 1, theta from the vertex-growth relation. kmin is
/// chosen automatically when not given. Throws ExponentOutOfRangeError when
/// gamma_hat falls outside (1, 2).
FitResult fit_moment(const Multigraph& g, std::optional<Degree> kmin = std::nullopt,
                     GammaEstimator estimator = GammaEstimator::mle);

struct MleOptions {
  // Set when the caller knows the graph had its parallel edges removed; the
  // likelihood does not apply to such graphs.
  bool input_is_projected = false;
  std::optional<Params> start;
  double tol = 1e-9;
};

/// Maximizes log_prob_closed over (alpha, theta) in the unconstrained
/// coordinates (logit alpha, ln(theta + alpha)).
FitResult fit_mle(const Multigraph& g, const MleOptions& options = {});

}  // namespace edgenet
