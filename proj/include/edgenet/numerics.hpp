#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace edgenet::numerics {

// Closed interval [lo, hi] with lo < hi, both finite.
class RealInterval {
 public:
  RealInterval(double lo, double hi);
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }

 private:
  double lo_;
  double hi_;
};

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// ln of the ascending factorial x (x+1) ... (x+j-1), for x > 0.
///
/// Below `kRisingCrossover` terms the logs are summed directly, above it the
/// value is ln Gamma(x+j) - ln Gamma(x).
double log_rising(double x, std::uint64_t j);

inline constexpr std::uint64_t kRisingCrossover = 32;

inline constexpr double kDefaultRootTol = 1e-10;
inline constexpr int kMaxBisections = 200;

/// Bisection on a continuous monotone function with a sign change over
/// `bracket`. Stops once the bracket width is at most tol * max(1, |x|).
double solve_root(const std::function<double(double)>& f, RealInterval bracket,
                  double tol = kDefaultRootTol);

using Point2 = std::array<double, 2>;

struct MinimizeOptions {
  double tol = 1e-10;        // simplex diameter at convergence
  double initial_step = 0.1;  // edge length of the starting simplex
  int max_iterations = 10000;
  int restarts = 1;
};

struct MinimizeResult {
  Point2 point{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Nelder-Mead simplex minimization of a function of two variables.
///
/// Reflection 1, expansion 2, contraction 0.5, shrink 0.5. After convergence
/// the search restarts from the best vertex `restarts` times. Bounded domains
/// are handled by the caller through a reparametrization. Never throws on
/// non-convergence; the result carries the best point found and
/// `converged == false`.
MinimizeResult minimize_2d(const std::function<double(const Point2&)>& f,
                           Point2 start, const MinimizeOptions& options = {});

}  // namespace edgenet::numerics
