#include "edgenet/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <json.hpp>

#include "edgenet/error.hpp"
#include "edgenet/likelihood.hpp"
#include "edgenet/numerics.hpp"

namespace edgenet {

using numerics::log_gamma;
using numerics::log_rising;

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

}  // namespace

double limit_pmf(Degree k, double alpha) {
  if (k < 1) throw DomainError("limit_pmf: degree must be >= 1");
  require_alpha(alpha);
  const auto kd = static_cast<double>(k);
  return std::exp(std::log(alpha) + log_rising(1.0 - alpha, k - 1) - log_gamma(kd + 1.0));
}

double limit_pmf_asymptotic(Degree k, double alpha) {
  if (k < 1) throw DomainError("limit_pmf: degree must be >= 1");
  require_alpha(alpha);
  const auto kd = static_cast<double>(k);
  return std::exp(std::log(alpha) - (alpha + 1.0) * std::log(kd) - log_gamma(1.0 - alpha));
}

std::string to_string(GammaEstimator e) { return e == GammaEstimator::mle ? "mle" : "ccdf"; }
std::string to_string(FitMethod m) { return m == FitMethod::mle ? "mle" : "moment"; }

double fit_ccdf_slope(std::span<const DegreeHistogram::CcdfPoint> points) {
  if (points.size() < 2) throw InsufficientDataError("CCDF regression needs two support points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.degree));
    const double y = std::log(p.ccdf);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto m = static_cast<double>(points.size());
  const double denom = m * sxx - sx * sx;
  if (!(denom > 0.0)) throw InsufficientDataError("CCDF regression needs distinct degrees");
  const double slope = (m * sxy - sx * sy) / denom;
  return 1.0 - slope;
}

double estimate_gamma_ccdf(const DegreeHistogram& hist, Degree kmin) {
  std::vector<DegreeHistogram::CcdfPoint> tail;
  for (const auto& p : hist.ccdf_points()) {
    if (p.degree >= kmin) tail.push_back(p);
  }
  return fit_ccdf_slope(tail);
}

double estimate_gamma_mle(const DegreeHistogram& hist, Degree kmin) {
  if (kmin < 1) throw DomainError("kmin must be >= 1");
  const double shift = static_cast<double>(kmin) - 0.5;
  double log_sum = 0.0;
  std::uint64_t m = 0;
  bool all_at_kmin = true;
  for (auto it = hist.counts().lower_bound(kmin); it != hist.counts().end(); ++it) {
    const auto& [k, count] = *it;
    m += count;
    log_sum += static_cast<double>(count) * std::log(static_cast<double>(k) / shift);
    if (k != kmin) all_at_kmin = false;
  }
  if (m == 0) throw InsufficientDataError("no vertex has degree >= kmin");
  if (all_at_kmin) throw DivergentEstimateError("every tail degree equals kmin");
  return 1.0 + static_cast<double>(m) / log_sum;
}

namespace {

double ks_distance(const DegreeHistogram& hist, Degree kmin, double gamma, std::uint64_t m) {
  const double shift = static_cast<double>(kmin) - 0.5;
  auto fitted = [&](double k) { return std::pow((k - 0.5) / shift, -(gamma - 1.0)); };
  double worst = 0.0;
  std::uint64_t at_least = m;
  for (auto it = hist.counts().lower_bound(kmin); it != hist.counts().end(); ++it) {
    const auto k = static_cast<double>(it->first);
    const double emp_at = static_cast<double>(at_least) / static_cast<double>(m);
    at_least -= it->second;
    const double emp_above = static_cast<double>(at_least) / static_cast<double>(m);
    worst = std::max({worst, std::abs(emp_at - fitted(k)), std::abs(emp_above - fitted(k + 1.0))});
  }
  return worst;
}

constexpr std::uint64_t kMinTailVertices = 10;

}  // namespace

TailFit estimate_gamma_auto(const DegreeHistogram& hist, Degree kmin_max) {
  std::optional<TailFit> best;
  std::uint64_t tail = hist.total_vertices();
  auto it = hist.counts().begin();
  for (Degree kmin = 1; kmin <= kmin_max; ++kmin) {
    while (it != hist.counts().end() && it->first < kmin) {
      tail -= it->second;
      ++it;
    }
    if (tail < kMinTailVertices || it == hist.counts().end()) break;
    if (std::next(it) == hist.counts().end()) break;  // single distinct degree left
    const double gamma = estimate_gamma_mle(hist, kmin);
    const double d = ks_distance(hist, kmin, gamma, tail);
    if (!best || d < best->ks_distance) best = TailFit{gamma, kmin, d, tail};
  }
  if (!best) {
    // Too few vertices for a tail search; use the whole support.
    if (hist.counts().size() < 2) {
      throw InsufficientDataError("need at least two distinct degrees to fit a tail");
    }
    const double gamma = estimate_gamma_mle(hist, 1);
    best = TailFit{gamma, 1, ks_distance(hist, 1, gamma, hist.total_vertices()),
                   hist.total_vertices()};
  }
  return *best;
}

double expected_vertices(const Params& params, std::uint64_t n_edges) {
  if (n_edges < 1) throw DomainError("expected_vertices: need n >= 1");
  const double a = params.alpha();
  const double t = params.theta();
  return std::exp(log_gamma(t + 1.0) - std::log(a) - log_gamma(t + a) +
                  a * std::log(2.0 * static_cast<double>(n_edges)));
}

ThetaSolution solve_theta_bracketed(double alpha, std::uint64_t n_edges, double n_vertices) {
  require_alpha(alpha);
  if (n_edges < 1) throw DomainError("solve_theta: need n >= 1");
  if (!(n_vertices >= 1.0) || n_vertices > 2.0 * static_cast<double>(n_edges)) {
    throw DomainError("solve_theta: observed vertex count must lie in [1, 2n]");
  }
  const double target = std::log(n_vertices);
  auto f = [&](double theta) {
    return std::log(expected_vertices(Params(alpha, theta), n_edges)) - target;
  };
  // Smallest representable offset above -alpha that keeps theta + alpha > 0.
  const double lo = -alpha + std::max(1e-12, 4 * std::numeric_limits<double>::epsilon() * alpha);
  if (f(lo) > 0.0) {
    throw UnattainableTargetError("observed vertex count is below the model's range");
  }
  double hi = std::max(1.0, lo + 1.0);
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (hi > kMaxThetaBracket) {
      throw UnattainableTargetError("theta bracket exceeds 1e8");
    }
  }
  const double theta = numerics::solve_root(f, numerics::RealInterval(lo, hi), 1e-12);
  return {theta, lo, hi};
}

double solve_theta(double alpha, std::uint64_t n_edges, double n_vertices) {
  return solve_theta_bracketed(alpha, n_edges, n_vertices).theta;
}

std::string fit_result_to_json(const FitResult& fit) {
  nlohmann::ordered_json j;
  j["alpha_hat"] = fit.alpha_hat;
  j["theta_hat"] = fit.theta_hat;
  j["gamma_hat"] = fit.gamma_hat;
  j["method"] = to_string(fit.method);
  j["n_edges"] = fit.n_edges;
  j["n_vertices"] = fit.n_vertices;
  j["log_likelihood"] = fit.log_likelihood ? nlohmann::ordered_json(*fit.log_likelihood) : nullptr;
  j["kmin"] = fit.kmin ? nlohmann::ordered_json(*fit.kmin) : nullptr;
  j["converged"] = fit.converged;
  return j.dump();
}

FitResult fit_result_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  FitResult fit;
  fit.alpha_hat = j.at("alpha_hat").get<double>();
  fit.theta_hat = j.at("theta_hat").get<double>();
  fit.gamma_hat = j.at("gamma_hat").get<double>();
  const auto method = j.at("method").get<std::string>();
  if (method != "moment" && method != "mle") throw DataError("unknown fit method " + method);
  fit.method = method == "mle" ? FitMethod::mle : FitMethod::moment;
  fit.n_edges = j.at("n_edges").get<std::uint64_t>();
  fit.n_vertices = j.at("n_vertices").get<std::uint64_t>();
  if (!j.at("log_likelihood").is_null()) fit.log_likelihood = j["log_likelihood"].get<double>();
  if (!j.at("kmin").is_null()) fit.kmin = j["kmin"].get<Degree>();
  fit.converged = j.at("converged").get<bool>();
  return fit;
}

FitResult fit_moment(const Multigraph& g, std::optional<Degree> kmin, GammaEstimator estimator) {
  if (g.num_edges() == 0) throw MalformedGraphError("cannot fit an empty graph");
  const DegreeHistogram hist = degree_histogram(g);

  FitResult fit;
  fit.method = FitMethod::moment;
  fit.estimator = estimator;
  fit.n_edges = g.num_edges();
  fit.n_vertices = g.num_vertices();
  try {
    if (kmin) {
      fit.kmin = *kmin;
      fit.gamma_hat = estimator == GammaEstimator::mle ? estimate_gamma_mle(hist, *kmin)
                                                       : estimate_gamma_ccdf(hist, *kmin);
    } else if (estimator == GammaEstimator::mle) {
      const TailFit tail = estimate_gamma_auto(hist);
      fit.kmin = tail.kmin;
      fit.gamma_hat = tail.gamma;
    } else {
      fit.kmin = 1;
      fit.gamma_hat = estimate_gamma_ccdf(hist, 1);
    }
  } catch (const InsufficientDataError& e) {
    throw ExponentOutOfRangeError(std::string("no power-law tail: ") + e.what());
  } catch (const DivergentEstimateError& e) {
    throw ExponentOutOfRangeError(std::string("no power-law tail: ") + e.what());
  }
  if (!(fit.gamma_hat > 1.0 && fit.gamma_hat < 2.0)) {
    throw ExponentOutOfRangeError("estimated exponent " + std::to_string(fit.gamma_hat) +
                                  " is outside (1, 2)");
  }
  fit.alpha_hat = fit.gamma_hat - 1.0;
  fit.theta_bracket =
      solve_theta_bracketed(fit.alpha_hat, fit.n_edges, static_cast<double>(fit.n_vertices));
  fit.theta_hat = fit.theta_bracket->theta;
  fit.log_likelihood = log_prob_closed(hist, Params(fit.alpha_hat, fit.theta_hat));
  return fit;
}

FitResult fit_mle(const Multigraph& g, const MleOptions& options) {
  if (options.input_is_projected) {
    throw InvalidInputError("likelihood fit requires the multigraph, not its simple projection");
  }
  if (g.num_edges() == 0) throw MalformedGraphError("cannot fit an empty graph");
  if (!g.is_canonical()) throw MalformedGraphError("graph is not in canonical labeling");
  const DegreeHistogram hist = degree_histogram(g);

  auto to_params = [](const numerics::Point2& p) {
    const double alpha = 1.0 / (1.0 + std::exp(-p[0]));
    return Params(alpha, std::exp(p[1]) - alpha);
  };
  auto objective = [&](const numerics::Point2& p) {
    try {
      return -log_prob_closed(hist, to_params(p));
    } catch (const DomainError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  Params start = options.start.value_or(Params(0.5, 1.0));
  if (!options.start) {
    try {
      const FitResult moment = fit_moment(g);
      start = Params(moment.alpha_hat, moment.theta_hat);
    } catch (const NumericError&) {
    } catch (const DomainError&) {
    }
  }
  const numerics::Point2 x0{std::log(start.alpha() / (1.0 - start.alpha())),
                            std::log(start.theta() + start.alpha())};
  numerics::MinimizeOptions mopt;
  mopt.tol = options.tol;
  mopt.initial_step = 0.2;
  const auto res = numerics::minimize_2d(objective, x0, mopt);

  const Params best = to_params(res.point);
  FitResult fit;
  fit.method = FitMethod::mle;
  fit.alpha_hat = best.alpha();
  fit.theta_hat = best.theta();
  fit.gamma_hat = best.alpha() + 1.0;
  fit.n_edges = g.num_edges();
  fit.n_vertices = g.num_vertices();
  fit.log_likelihood = -res.value;
  fit.converged = res.converged;
  fit.iterations = res.iterations;
  return fit;
}

}  // namespace edgenet
