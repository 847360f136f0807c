#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include <omp.h>

#include "edgenet/generator.hpp"
#include "edgenet/parallel.hpp"

using namespace edgenet;

TEST(Kernels, DegreeCountsMatchSerial) {
  for (std::uint64_t n : {10ULL, 20000ULL, 300000ULL}) {
    const Multigraph g = generate(Params(0.5, 5.0), n, n);
    EXPECT_EQ(omp::degree_counts(g.edges(), g.num_vertices()),
              serial::degree_counts(g.edges(), g.num_vertices()));
  }
}

TEST(Kernels, LogAffineSumMatchesSerial) {
  for (std::uint64_t count : {0ULL, 1ULL, 100ULL, 16384ULL, 1000003ULL}) {
    for (double base : {-0.63, 0.0, 1.0, 350.0}) {
      const double step = 0.85;
      const double ref = serial::log_affine_sum(base, step, count);
      EXPECT_NEAR(omp::log_affine_sum(base, step, count), ref, 1e-12 * std::max(1.0, std::fabs(ref)));
    }
  }
  EXPECT_EQ(serial::log_affine_sum(1.0, 1.0, 3), std::log(2.0) + std::log(3.0) + std::log(4.0));
}

TEST(Kernels, LogAffineSumIndependentOfThreadCount) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double one = omp::log_affine_sum(0.3, 0.7, 2000000);
  omp_set_num_threads(4);
  const double four = omp::log_affine_sum(0.3, 0.7, 2000000);
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
}

TEST(Kernels, MapIndexedOrdersResults) {
  auto square = [](std::size_t i) { return i * i; };
  const auto a = serial::map_indexed(1000, square);
  const auto b = omp::map_indexed(1000, square);
  EXPECT_EQ(a, b);
  EXPECT_EQ(map_indexed(1000, square, ExecutionPolicy::parallel), a);
  EXPECT_EQ(b[999], 999u * 999u);
}

TEST(Kernels, MapIndexedRethrowsLowestIndex) {
  auto f = [](std::size_t i) -> int {
    if (i == 17 || i == 400) throw std::runtime_error("boom " + std::to_string(i));
    return 0;
  };
  try {
    omp::map_indexed(1000, f);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "boom 17");
  }
}
