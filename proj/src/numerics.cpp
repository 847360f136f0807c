#include "edgenet/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edgenet/error.hpp"

namespace edgenet::numerics {

RealInterval::RealInterval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("interval requires finite lo < hi");
  }
}

double log_gamma(double x) {
  if (!(x > 0.0) || std::isnan(x)) {
    throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  }
#if defined(__GLIBC__)
  // lgamma_r does not touch the global signgam.
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double log_rising(double x, std::uint64_t j) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_rising: base must be positive, got " + std::to_string(x));
  }
  if (j < kRisingCrossover) {
    double sum = 0.0;
    for (std::uint64_t i = 0; i < j; ++i) sum += std::log(x + static_cast<double>(i));
    return sum;
  }
  return log_gamma(x + static_cast<double>(j)) - log_gamma(x);
}

namespace {

double checked_eval(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw NonFiniteError("solve_root: f(" + std::to_string(x) + ") is not finite");
  }
  return y;
}

}  // namespace

double solve_root(const std::function<double(double)>& f, RealInterval bracket, double tol) {
  double lo = bracket.lo();
  double hi = bracket.hi();
  double f_lo = checked_eval(f, lo);
  const double f_hi = checked_eval(f, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw BracketError("solve_root: no sign change over [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if ((hi - lo) <= tol * std::max(1.0, std::abs(mid))) return mid;
    const double f_mid = checked_eval(f, mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

namespace {

struct Vertex {
  Point2 x;
  double fx;
};

double distance(const Point2& a, const Point2& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double eval(const std::function<double(const Point2&)>& f, const Point2& p) {
  const double v = f(p);
  // NaN is ordered last so that a simplex never prefers an undefined point.
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

// One Nelder-Mead descent from `start`. `budget` is decremented per iteration.
MinimizeResult descend(const std::function<double(const Point2&)>& f, const Point2& start,
                       const MinimizeOptions& opt, int& budget) {
  std::array<Vertex, 3> s{};
  s[0] = {start, eval(f, start)};
  s[1].x = {start[0] + opt.initial_step, start[1]};
  s[2].x = {start[0], start[1] + opt.initial_step};
  s[1].fx = eval(f, s[1].x);
  s[2].fx = eval(f, s[2].x);

  auto lerp = [](const Point2& from, const Point2& to, double t) {
    return Point2{from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
  };

  MinimizeResult out;
  while (true) {
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
    const double diameter =
        std::max({distance(s[0].x, s[1].x), distance(s[0].x, s[2].x), distance(s[1].x, s[2].x)});
    if (diameter <= opt.tol) {
      out.converged = true;
      break;
    }
    if (budget <= 0) break;
    --budget;
    ++out.iterations;

    const Point2 centroid{0.5 * (s[0].x[0] + s[1].x[0]), 0.5 * (s[0].x[1] + s[1].x[1])};
    const Point2 reflected = lerp(centroid, s[2].x, -1.0);
    const double f_r = eval(f, reflected);

    if (f_r < s[0].fx) {
      const Point2 expanded = lerp(centroid, s[2].x, -2.0);
      const double f_e = eval(f, expanded);
      s[2] = f_e < f_r ? Vertex{expanded, f_e} : Vertex{reflected, f_r};
      continue;
    }
    if (f_r < s[1].fx) {
      s[2] = {reflected, f_r};
      continue;
    }
    if (f_r < s[2].fx) {
      const Point2 outside = lerp(centroid, s[2].x, -0.5);
      const double f_oc = eval(f, outside);
      if (f_oc <= f_r) {
        s[2] = {outside, f_oc};
        continue;
      }
    } else {
      const Point2 inside = lerp(centroid, s[2].x, 0.5);
      const double f_ic = eval(f, inside);
      if (f_ic < s[2].fx) {
        s[2] = {inside, f_ic};
        continue;
      }
    }
    // shrink toward the best vertex
    for (std::size_t i = 1; i < s.size(); ++i) {
      s[i].x = lerp(s[0].x, s[i].x, 0.5);
      s[i].fx = eval(f, s[i].x);
    }
  }
  out.point = s[0].x;
  out.value = s[0].fx;
  return out;
}

}  // namespace

MinimizeResult minimize_2d(const std::function<double(const Point2&)>& f, Point2 start,
                           const MinimizeOptions& options) {
  if (!std::isfinite(f(start))) {
    throw NonFiniteError("minimize_2d: objective is not finite at the start point");
  }
  int budget = options.max_iterations;
  MinimizeResult best = descend(f, start, options, budget);
  int total = best.iterations;
  for (int r = 0; r < options.restarts && best.converged; ++r) {
    MinimizeResult again = descend(f, best.point, options, budget);
    total += again.iterations;
    if (again.value <= best.value) {
      best.point = again.point;
      best.value = again.value;
    }
    best.converged = again.converged;
  }
  best.iterations = total;
  return best;
}

}  // namespace edgenet::numerics
