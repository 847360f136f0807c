#pragma once

// Data-parallel kernels. Each kernel has a plain serial reference in
// `edgenet::serial` and an OpenMP version in `edgenet::omp`; results of the
// OpenMP versions do not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#include "edgenet/graph.hpp"

namespace edgenet {

enum class ExecutionPolicy { serial, parallel };

int available_threads();

namespace serial {

/// Per-vertex degree counts for vertices 1..num_vertices (index 0 = vertex 1).
std::vector<Degree> degree_counts(std::span<const Edge> edges, std::size_t num_vertices);

/// sum_{i=1}^{count} ln(base + i * step).
double log_affine_sum(double base, double step, std::uint64_t count);

template <class F>
auto map_indexed(std::size_t count, F&& f) {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
  return out;
}

}  // namespace serial

namespace omp {

std::vector<Degree> degree_counts(std::span<const Edge> edges, std::size_t num_vertices);

// Summed over a fixed block partition, so the rounding is the same for any
// number of threads.
double log_affine_sum(double base, double step, std::uint64_t count);

/// Evaluates f(0..count-1) concurrently and returns the results by index.
/// The first exception thrown (lowest index) is rethrown after the loop.
template <class F>
auto map_indexed(std::size_t count, F&& f) {
  using R = std::invoke_result_t<F&, std::size_t>;
  static_assert(std::is_default_constructible_v<R>);
  std::vector<R> out(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace omp

template <class F>
auto map_indexed(std::size_t count, F&& f, ExecutionPolicy policy) {
  if (policy == ExecutionPolicy::serial) return serial::map_indexed(count, std::forward<F>(f));
  return omp::map_indexed(count, std::forward<F>(f));
}

}  // namespace edgenet
