#include "edgenet/parallel.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace edgenet {

int available_threads() { return omp_get_max_threads(); }

namespace serial {

std::vector<Degree> degree_counts(std::span<const Edge> edges, std::size_t num_vertices) {
  std::vector<Degree> deg(num_vertices, 0);
  for (const Edge& e : edges) {
    ++deg[e.u - 1];
    ++deg[e.v - 1];
  }
  return deg;
}

double log_affine_sum(double base, double step, std::uint64_t count) {
  double sum = 0.0;
  for (std::uint64_t i = 1; i <= count; ++i) sum += std::log(base + static_cast<double>(i) * step);
  return sum;
}

}  // namespace serial

namespace omp {

namespace {
constexpr std::int64_t kSumBlocks = 64;
constexpr std::size_t kSerialCutoff = 1 << 14;
}  // namespace

std::vector<Degree> degree_counts(std::span<const Edge> edges, std::size_t num_vertices) {
  if (edges.size() < kSerialCutoff) return serial::degree_counts(edges, num_vertices);
  std::vector<Degree> deg(num_vertices, 0);
  const auto m = static_cast<std::int64_t>(edges.size());
#pragma omp parallel
  {
    std::vector<Degree> local(num_vertices, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < m; ++i) {
      const Edge& e = edges[static_cast<std::size_t>(i)];
      ++local[e.u - 1];
      ++local[e.v - 1];
    }
#pragma omp critical
    {
      for (std::size_t v = 0; v < num_vertices; ++v) deg[v] += local[v];
    }
  }
  return deg;
}

double log_affine_sum(double base, double step, std::uint64_t count) {
  if (count < kSerialCutoff) return serial::log_affine_sum(base, step, count);
  std::vector<double> partial(kSumBlocks, 0.0);
  const std::uint64_t block = (count + kSumBlocks - 1) / kSumBlocks;
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < kSumBlocks; ++b) {
    const std::uint64_t first = static_cast<std::uint64_t>(b) * block + 1;
    const std::uint64_t last = std::min(count, first + block - 1);
    double s = 0.0;
    for (std::uint64_t i = first; i <= last; ++i) s += std::log(base + static_cast<double>(i) * step);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double sum = 0.0;
  for (double p : partial) sum += p;
  return sum;
}

}  // namespace omp

}  // namespace edgenet
