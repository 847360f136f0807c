#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgenet/estimation.hpp"
#include "edgenet/generator.hpp"
#include "edgenet/graph.hpp"
#include "edgenet/parallel.hpp"

namespace edgenet {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// seed_i = mix64(base_seed ^ mix64(i)). Depends only on (base_seed, i).
std::uint64_t replicate_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

struct ExperimentConfig {
  Params params{0.5, 1.0};
  std::uint64_t n_edges = 1;
  std::uint64_t replicates = 1;
  std::uint64_t base_seed = 0;
  bool directed = false;
  std::string output_path;  // empty: nothing is written
  ExecutionPolicy policy = ExecutionPolicy::parallel;

  /// Throws DomainError when replicates or n_edges is zero.
  void validate() const;
};

struct ReplicateRecord {
  std::uint64_t replicate_index = 0;
  std::uint64_t seed = 0;
  std::uint64_t n_vertices = 0;
  std::optional<double> gamma_hat_multigraph;
  std::optional<double> gamma_hat_projected;
  friend bool operator==(const ReplicateRecord&, const ReplicateRecord&) = default;
};

// ---------------------------------------------------------------------------
// Vertex growth
// ---------------------------------------------------------------------------

struct GrowthSummary {
  std::uint64_t replicates = 0;
  double mean_vertices = 0.0;
  double expected_vertices = 0.0;
  double ratio = 0.0;
  friend bool operator==(const GrowthSummary&, const GrowthSummary&) = default;
};

struct GrowthResult {
  std::vector<ReplicateRecord> records;
  GrowthSummary summary;
};

/// Generates `replicates` graphs and compares the mean vertex count with
/// expected_vertices. Writes the CSV when cfg.output_path is set.
GrowthResult run_growth_experiment(const ExperimentConfig& cfg);

/// Header "replicate,seed,n_vertices", one row per replicate, then
/// "#summary,replicates,mean_n_vertices,expected_n_vertices,ratio" followed by
/// the "#summary,..." value row.
void write_growth_csv(std::ostream& out, const GrowthResult& result);
GrowthResult read_growth_csv(std::istream& in);

// ---------------------------------------------------------------------------
// Degree distribution of a multigraph and its projection
// ---------------------------------------------------------------------------

struct TailOptions {
  GammaEstimator estimator = GammaEstimator::mle;
  std::optional<Degree> kmin;  // unset: KS-selected (mle) or 1 (ccdf)
};

struct ExponentFit {
  std::optional<TailFit> fit;
  GammaEstimator estimator = GammaEstimator::mle;
  std::string diagnostics;  // reason when no fit was possible
};

/// Tail exponent of a degree histogram. Needs at least two distinct degrees
/// at or above kmin; otherwise `fit` is empty and `diagnostics` says why.
ExponentFit fit_tail_exponent(const DegreeHistogram& hist, const TailOptions& options = {});

struct DegreeExperimentConfig {
  ExperimentConfig base;
  TailOptions tail;
  bool gnuplot = false;
};

struct DegreeExperimentResult {
  std::vector<ReplicateRecord> records;
  // CCDF of replicate 0
  std::vector<DegreeHistogram::CcdfPoint> multigraph_ccdf;
  std::vector<DegreeHistogram::CcdfPoint> projected_ccdf;
  ExponentFit multigraph_fit;
  ExponentFit projected_fit;
  // medians over replicates with a fit
  std::optional<double> median_gamma_multigraph;
  std::optional<double> median_gamma_projected;
};

/// With output prefix P writes P_multigraph_ccdf.csv, P_projected_ccdf.csv,
/// P_replicates.csv and, when requested, P_plot.gp.
DegreeExperimentResult run_degree_experiment(const DegreeExperimentConfig& cfg);

/// Header "degree,ccdf" then one row per support point, then summary rows
/// "#summary,gamma_hat,kmin,estimator" and "#summary,<values>" (or
/// "#summary,insufficient_data,<reason>").
void write_ccdf_csv(std::ostream& out, const std::vector<DegreeHistogram::CcdfPoint>& points,
                    const ExponentFit& fit);
std::vector<DegreeHistogram::CcdfPoint> read_ccdf_csv(std::istream& in);

void write_replicates_csv(std::ostream& out, const std::vector<ReplicateRecord>& records);
std::vector<ReplicateRecord> read_replicates_csv(std::istream& in);

/// Gnuplot script plotting both CCDF files on log-log axes with dashed guide
/// lines of slope 1 - gamma_hat.
std::string gnuplot_script(const std::string& prefix, const DegreeExperimentResult& result);

/// %.17g, the shortest form guaranteed to round-trip any double.
std::string format_real(double x);

std::optional<double> median(std::vector<double> values);

}  // namespace edgenet
