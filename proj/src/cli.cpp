#include "edgenet/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgenet/error.hpp"
#include "edgenet/estimation.hpp"
#include "edgenet/generator.hpp"
#include "edgenet/graph.hpp"
#include "edgenet/harness.hpp"
#include "edgenet/likelihood.hpp"

namespace edgenet {

namespace {

struct Options {
  double alpha = 0.0;
  double theta = 0.0;
  std::uint64_t edges = 0;
  std::uint64_t seed = 0;
  std::uint64_t replicates = 1;
  bool directed = false;
  std::string in;
  std::string out;
  std::string method = "moment";
  std::string estimator = "mle";
  std::string kmin = "auto";
  bool projected = false;
  bool sequential = false;
  bool ccdf = false;
  bool gnuplot = false;
  int threads = 0;
};

std::optional<Degree> parse_kmin(const std::string& s) {
  if (s == "auto") return std::nullopt;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 1) throw DomainError("--kmin must be 'auto' or a positive integer");
  return static_cast<Degree>(v);
}

TailOptions tail_options(const Options& o) {
  if (o.estimator != "mle" && o.estimator != "ccdf") throw DomainError("--estimator must be mle or ccdf");
  TailOptions t;
  t.estimator = o.estimator == "mle" ? GammaEstimator::mle : GammaEstimator::ccdf;
  t.kmin = parse_kmin(o.kmin);
  return t;
}

void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  body(f);
  f.flush();
  if (!f) throw IoError("write failed for " + path);
}

EdgeList read_input(const Options& o) {
  if (o.in.empty() || o.in == "-") return parse_edge_list(std::cin, o.directed);
  return parse_edge_list_file(o.in, o.directed);
}

int run_generate(const Options& o, std::ostream& out, std::ostream& err) {
  const Params params(o.alpha, o.theta);
  if (o.edges < 1) throw DomainError("--edges must be >= 1");
  const Multigraph g = generate(params, o.edges, o.seed, o.directed);
  nlohmann::ordered_json meta;
  meta["rng"] = kRngName;
  meta["alpha"] = params.alpha();
  meta["theta"] = params.theta();
  meta["seed"] = o.seed;
  meta["directed"] = o.directed;
  meta["n_edges"] = g.num_edges();
  meta["n_vertices"] = g.num_vertices();
  with_output(o.out, out, [&](std::ostream& s) { write_edge_list(s, g); });
  (o.out.empty() || o.out == "-" ? err : out) << meta.dump() << '\n';
  return kExitOk;
}

int run_degrees(const Options& o, std::ostream& out) {
  const auto hist = degree_histogram(read_input(o).graph);
  with_output(o.out, out, [&](std::ostream& s) {
    if (o.ccdf) {
      write_ccdf_csv(s, hist.ccdf_points(), fit_tail_exponent(hist, tail_options(o)));
      return;
    }
    s << "degree,count\n";
    for (const auto& [k, c] : hist.counts()) s << k << ',' << c << '\n';
  });
  return kExitOk;
}

int run_project(const Options& o, std::ostream& out) {
  const Multigraph simple = project_simple(read_input(o).graph);
  with_output(o.out, out, [&](std::ostream& s) { write_edge_list(s, simple); });
  return kExitOk;
}

int run_fit(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.method != "moment" && o.method != "mle") throw DomainError("--method must be moment or mle");
  if (o.estimator != "mle" && o.estimator != "ccdf") throw DomainError("--estimator must be mle or ccdf");
  const auto kmin = parse_kmin(o.kmin);
  const Multigraph g = read_input(o).graph;
  FitResult fit;
  if (o.method == "moment") {
    fit = fit_moment(g, kmin, o.estimator == "mle" ? GammaEstimator::mle : GammaEstimator::ccdf);
  } else {
    MleOptions mopt;
    mopt.input_is_projected = o.projected;
    fit = fit_mle(g, mopt);
  }
  out << fit_result_to_json(fit) << '\n';
  if (!fit.converged) {
    err << "fit: optimizer did not converge; reporting the best point found\n";
    return kExitNumeric;
  }
  return kExitOk;
}

int run_loglik(const Options& o, std::ostream& out) {
  const Params params(o.alpha, o.theta);
  const Multigraph g = read_input(o).graph;
  nlohmann::ordered_json j;
  j["log_likelihood"] = o.sequential ? log_prob_sequential(g, params) : log_prob_closed(g, params);
  j["form"] = o.sequential ? "sequential" : "closed";
  j["alpha"] = params.alpha();
  j["theta"] = params.theta();
  j["n_edges"] = g.num_edges();
  j["n_vertices"] = g.num_vertices();
  out << j.dump() << '\n';
  return kExitOk;
}

ExperimentConfig experiment_config(const Options& o) {
  ExperimentConfig cfg;
  cfg.params = Params(o.alpha, o.theta);
  cfg.n_edges = o.edges;
  cfg.replicates = o.replicates;
  cfg.base_seed = o.seed;
  cfg.directed = o.directed;
  cfg.validate();
  return cfg;
}

int run_growth(const Options& o, std::ostream& out) {
  ExperimentConfig cfg = experiment_config(o);
  if (o.out.empty() || o.out == "-") {
    write_growth_csv(out, run_growth_experiment(cfg));
  } else {
    cfg.output_path = o.out;
    const auto res = run_growth_experiment(cfg);
    nlohmann::ordered_json j;
    j["replicates"] = res.summary.replicates;
    j["mean_n_vertices"] = res.summary.mean_vertices;
    j["expected_n_vertices"] = res.summary.expected_vertices;
    j["ratio"] = res.summary.ratio;
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int run_degree_experiment_cmd(const Options& o, std::ostream& out) {
  DegreeExperimentConfig cfg;
  cfg.base = experiment_config(o);
  cfg.base.output_path = o.out;
  cfg.tail = tail_options(o);
  cfg.gnuplot = o.gnuplot;
  const auto res = run_degree_experiment(cfg);
  nlohmann::ordered_json j;
  auto fit_json = [](const ExponentFit& f) {
    return f.fit ? nlohmann::ordered_json(f.fit->gamma) : nlohmann::ordered_json(nullptr);
  };
  auto opt_json = [](const std::optional<double>& x) {
    return x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(nullptr);
  };
  j["replicates"] = res.records.size();
  j["estimator"] = to_string(cfg.tail.estimator);
  j["gamma_hat_multigraph"] = fit_json(res.multigraph_fit);
  j["gamma_hat_projected"] = fit_json(res.projected_fit);
  j["median_gamma_hat_multigraph"] = opt_json(res.median_gamma_multigraph);
  j["median_gamma_hat_projected"] = opt_json(res.median_gamma_projected);
  if (!res.multigraph_fit.fit) j["diagnostics"] = res.multigraph_fit.diagnostics;
  out << j.dump() << '\n';
  return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-driven random multigraph model: generation, likelihood, and fitting"};
  app.name(args.empty() ? "edgenet" : args.front());
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", o.alpha, "alpha in (0, 1)")->required();
    cmd->add_option("--theta", o.theta, "theta > -alpha")->required();
  };
  auto add_experiment = [&](CLI::App* cmd) {
    add_params(cmd);
    cmd->add_option("--edges", o.edges, "edges per graph")->required();
    cmd->add_option("--replicates", o.replicates, "independent graphs")->capture_default_str();
    cmd->add_option("--seed", o.seed, "base seed")->capture_default_str();
    cmd->add_flag("--directed", o.directed, "orient edges from first to second endpoint");
    cmd->add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");
  };

  auto* gen = app.add_subcommand("generate", "sample a multigraph and write its edge list");
  add_params(gen);
  gen->add_option("--edges", o.edges, "number of edges")->required();
  gen->add_option("--seed", o.seed, "random seed")->capture_default_str();
  gen->add_flag("--directed", o.directed, "orient edges from first to second endpoint");
  gen->add_option("--out", o.out, "output edge list (default: standard output)");

  auto* deg = app.add_subcommand("degrees", "degree histogram or CCDF of an edge list");
  deg->add_option("--in", o.in, "input edge list (default: standard input)");
  deg->add_flag("--directed", o.directed, "treat input as directed");
  deg->add_flag("--ccdf", o.ccdf, "write the CCDF table with a tail fit");
  deg->add_option("--kmin", o.kmin, "tail cutoff for the fit, or auto")->capture_default_str();
  deg->add_option("--estimator", o.estimator, "tail estimator: mle or ccdf")->capture_default_str();
  deg->add_option("--out", o.out, "output CSV (default: standard output)");

  auto* proj = app.add_subcommand("project", "collapse parallel edges and repeated self-loops");
  proj->add_option("--in", o.in, "input edge list (default: standard input)");
  proj->add_flag("--directed", o.directed, "keep antiparallel edges distinct");
  proj->add_option("--out", o.out, "output edge list (default: standard output)");

  auto* fit = app.add_subcommand("fit", "estimate (alpha, theta) and print a JSON record");
  fit->add_option("--in", o.in, "input edge list (default: standard input)");
  fit->add_option("--method", o.method, "moment or mle")->capture_default_str();
  fit->add_option("--estimator", o.estimator, "exponent estimator for moment: mle or ccdf")
      ->capture_default_str();
  fit->add_option("--kmin", o.kmin, "tail cutoff, or auto")->capture_default_str();
  fit->add_flag("--directed", o.directed, "treat input as directed");
  fit->add_flag("--projected", o.projected, "input is a simple projection (rejected by mle)");

  auto* ll = app.add_subcommand("loglik", "log-probability of an edge list under the model");
  ll->add_option("--in", o.in, "input edge list (default: standard input)");
  add_params(ll);
  ll->add_flag("--sequential", o.sequential, "replay endpoint by endpoint instead of closed form");
  ll->add_flag("--directed", o.directed, "treat input as directed");

  auto* growth = app.add_subcommand("growth-experiment", "Monte Carlo check of vertex growth");
  add_experiment(growth);
  growth->add_option("--out", o.out, "output CSV (default: standard output)");

  auto* degexp = app.add_subcommand("degree-experiment",
                                    "CCDF of a generated multigraph and of its simple projection");
  add_experiment(degexp);
  degexp->add_option("--out", o.out, "output file prefix")->required();
  degexp->add_option("--kmin", o.kmin, "tail cutoff for the fit, or auto")->capture_default_str();
  degexp->add_option("--estimator", o.estimator, "tail estimator: mle or ccdf")->capture_default_str();
  degexp->add_flag("--gnuplot", o.gnuplot, "also write a gnuplot script");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.threads > 0) omp_set_num_threads(o.threads);
    if (*gen) return run_generate(o, out, err);
    if (*deg) return run_degrees(o, out);
    if (*proj) return run_project(o, out);
    if (*fit) return run_fit(o, out, err);
    if (*ll) return run_loglik(o, out);
    if (*growth) return run_growth(o, out);
    if (*degexp) return run_degree_experiment_cmd(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

int cli_dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cli_dispatch(args, std::cout, std::cerr);
}

}  // namespace edgenet
