#include "edgenet/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "edgenet/error.hpp"

namespace edgenet {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t replicate_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
  return mix64(base_seed ^ mix64(index));
}

void ExperimentConfig::validate() const {
  if (n_edges < 1) throw DomainError("experiment needs at least one edge");
  if (replicates < 1) throw DomainError("experiment needs at least one replicate");
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::optional<double> median(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected an unsigned integer, got '" + s + "'");
  }
  return v;
}

double parse_real(const std::string& s, std::size_t line) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a real number, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, "expected a real number, got '" + s + "'");
  return v;
}

void expect_header(std::istream& in, const std::string& header) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw ParseError(1, "expected header '" + header + "'");
  }
}

std::string optional_real(const std::optional<double>& x) { return x ? format_real(*x) : ""; }

}  // namespace

// ---------------------------------------------------------------------------

GrowthResult run_growth_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  GrowthResult result;
  result.records = map_indexed(
      cfg.replicates,
      [&](std::size_t i) {
        ReplicateRecord rec;
        rec.replicate_index = i;
        rec.seed = replicate_seed(cfg.base_seed, i);
        rec.n_vertices = generate(cfg.params, cfg.n_edges, rec.seed, cfg.directed).num_vertices();
        return rec;
      },
      cfg.policy);

  double total = 0.0;
  for (const auto& r : result.records) total += static_cast<double>(r.n_vertices);
  auto& s = result.summary;
  s.replicates = cfg.replicates;
  s.mean_vertices = total / static_cast<double>(cfg.replicates);
  s.expected_vertices = expected_vertices(cfg.params, cfg.n_edges);
  s.ratio = s.mean_vertices / s.expected_vertices;

  if (!cfg.output_path.empty()) {
    auto out = open_output(cfg.output_path);
    write_growth_csv(out, result);
    finish(out, cfg.output_path);
  }
  return result;
}

void write_growth_csv(std::ostream& out, const GrowthResult& result) {
  out << "replicate,seed,n_vertices\n";
  for (const auto& r : result.records) {
    out << r.replicate_index << ',' << r.seed << ',' << r.n_vertices << '\n';
  }
  const auto& s = result.summary;
  out << "#summary,replicates,mean_n_vertices,expected_n_vertices,ratio\n";
  out << "#summary," << s.replicates << ',' << format_real(s.mean_vertices) << ','
      << format_real(s.expected_vertices) << ',' << format_real(s.ratio) << '\n';
}

GrowthResult read_growth_csv(std::istream& in) {
  expect_header(in, "replicate,seed,n_vertices");
  GrowthResult result;
  std::string line;
  std::size_t line_no = 1;
  bool have_summary = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f[0] == "#summary") {
      if (f.size() != 5) throw ParseError(line_no, "summary row needs 4 fields");
      if (f[1] == "replicates") continue;
      auto& s = result.summary;
      s.replicates = parse_u64(f[1], line_no);
      s.mean_vertices = parse_real(f[2], line_no);
      s.expected_vertices = parse_real(f[3], line_no);
      s.ratio = parse_real(f[4], line_no);
      have_summary = true;
      continue;
    }
    if (f.size() != 3) throw ParseError(line_no, "growth row needs 3 fields");
    ReplicateRecord r;
    r.replicate_index = parse_u64(f[0], line_no);
    r.seed = parse_u64(f[1], line_no);
    r.n_vertices = parse_u64(f[2], line_no);
    result.records.push_back(r);
  }
  if (!have_summary) throw ParseError(line_no, "missing summary row");
  return result;
}

// ---------------------------------------------------------------------------

ExponentFit fit_tail_exponent(const DegreeHistogram& hist, const TailOptions& options) {
  ExponentFit out;
  out.estimator = options.estimator;
  const Degree kmin = options.kmin.value_or(1);
  std::size_t support = 0;
  std::uint64_t tail = 0;
  for (auto it = hist.counts().lower_bound(kmin); it != hist.counts().end(); ++it) {
    ++support;
    tail += it->second;
  }
  if (support < 2) {
    out.diagnostics = "fewer than two distinct degrees >= kmin";
    return out;
  }
  try {
    if (options.estimator == GammaEstimator::mle && !options.kmin) {
      out.fit = estimate_gamma_auto(hist);
    } else {
      TailFit fit;
      fit.kmin = kmin;
      fit.tail_vertices = tail;
      fit.gamma = options.estimator == GammaEstimator::mle ? estimate_gamma_mle(hist, kmin)
                                                           : estimate_gamma_ccdf(hist, kmin);
      out.fit = fit;
    }
  } catch (const NumericError& e) {
    out.diagnostics = e.what();
  }
  return out;
}

namespace {

struct DegreeReplicate {
  ReplicateRecord record;
  DegreeHistogram multigraph;
  DegreeHistogram projected;
};

}  // namespace

DegreeExperimentResult run_degree_experiment(const DegreeExperimentConfig& cfg) {
  cfg.base.validate();
  const ExperimentConfig& base = cfg.base;

  // Histograms are kept only for replicate 0, which provides the CCDF tables.
  auto reps = map_indexed(
      base.replicates,
      [&](std::size_t i) {
        DegreeReplicate rep;
        rep.record.replicate_index = i;
        rep.record.seed = replicate_seed(base.base_seed, i);
        const Multigraph g = generate(base.params, base.n_edges, rep.record.seed, base.directed);
        rep.record.n_vertices = g.num_vertices();
        auto mg = degree_histogram(g);
        auto pj = degree_histogram(project_simple(g));
        if (auto f = fit_tail_exponent(mg, cfg.tail); f.fit) rep.record.gamma_hat_multigraph = f.fit->gamma;
        if (auto f = fit_tail_exponent(pj, cfg.tail); f.fit) rep.record.gamma_hat_projected = f.fit->gamma;
        if (i == 0) {
          rep.multigraph = std::move(mg);
          rep.projected = std::move(pj);
        }
        return rep;
      },
      base.policy);

  DegreeExperimentResult result;
  std::vector<double> gm, gp;
  for (auto& rep : reps) {
    if (rep.record.gamma_hat_multigraph) gm.push_back(*rep.record.gamma_hat_multigraph);
    if (rep.record.gamma_hat_projected) gp.push_back(*rep.record.gamma_hat_projected);
    result.records.push_back(rep.record);
  }
  result.median_gamma_multigraph = median(gm);
  result.median_gamma_projected = median(gp);
  result.multigraph_ccdf = reps[0].multigraph.ccdf_points();
  result.projected_ccdf = reps[0].projected.ccdf_points();
  result.multigraph_fit = fit_tail_exponent(reps[0].multigraph, cfg.tail);
  result.projected_fit = fit_tail_exponent(reps[0].projected, cfg.tail);

  if (!base.output_path.empty()) {
    const std::string& prefix = base.output_path;
    auto write = [](const std::string& path, auto&& body) {
      auto out = open_output(path);
      body(out);
      finish(out, path);
    };
    write(prefix + "_multigraph_ccdf.csv",
          [&](std::ostream& o) { write_ccdf_csv(o, result.multigraph_ccdf, result.multigraph_fit); });
    write(prefix + "_projected_ccdf.csv",
          [&](std::ostream& o) { write_ccdf_csv(o, result.projected_ccdf, result.projected_fit); });
    write(prefix + "_replicates.csv", [&](std::ostream& o) { write_replicates_csv(o, result.records); });
    if (cfg.gnuplot) {
      write(prefix + "_plot.gp", [&](std::ostream& o) { o << gnuplot_script(prefix, result); });
    }
  }
  return result;
}

void write_ccdf_csv(std::ostream& out, const std::vector<DegreeHistogram::CcdfPoint>& points,
                    const ExponentFit& fit) {
  out << "degree,ccdf\n";
  for (const auto& p : points) out << p.degree << ',' << format_real(p.ccdf) << '\n';
  if (fit.fit) {
    out << "#summary,gamma_hat,kmin,estimator\n";
    out << "#summary," << format_real(fit.fit->gamma) << ',' << fit.fit->kmin << ',' << to_string(fit.estimator) << '\n';
  } else {
    out << "#summary,insufficient_data," << fit.diagnostics << '\n';
  }
}

std::vector<DegreeHistogram::CcdfPoint> read_ccdf_csv(std::istream& in) {
  expect_header(in, "degree,ccdf");
  std::vector<DegreeHistogram::CcdfPoint> points;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto f = split_csv(line);
    if (f.size() != 2) throw ParseError(line_no, "ccdf row needs 2 fields");
    points.push_back({parse_u64(f[0], line_no), parse_real(f[1], line_no)});
  }
  return points;
}

void write_replicates_csv(std::ostream& out, const std::vector<ReplicateRecord>& records) {
  out << "replicate,seed,n_vertices,gamma_hat_multigraph,gamma_hat_projected\n";
  std::vector<double> gm, gp;
  for (const auto& r : records) {
    out << r.replicate_index << ',' << r.seed << ',' << r.n_vertices << ','
        << optional_real(r.gamma_hat_multigraph) << ',' << optional_real(r.gamma_hat_projected)
        << '\n';
    if (r.gamma_hat_multigraph) gm.push_back(*r.gamma_hat_multigraph);
    if (r.gamma_hat_projected) gp.push_back(*r.gamma_hat_projected);
  }
  out << "#summary,replicates,median_gamma_hat_multigraph,median_gamma_hat_projected\n";
  out << "#summary," << records.size() << ',' << optional_real(median(gm)) << ','
      << optional_real(median(gp)) << '\n';
}

std::vector<ReplicateRecord> read_replicates_csv(std::istream& in) {
  expect_header(in, "replicate,seed,n_vertices,gamma_hat_multigraph,gamma_hat_projected");
  std::vector<ReplicateRecord> out;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto f = split_csv(line);
    if (f.size() != 5) throw ParseError(line_no, "replicate row needs 5 fields");
    ReplicateRecord r;
    r.replicate_index = parse_u64(f[0], line_no);
    r.seed = parse_u64(f[1], line_no);
    r.n_vertices = parse_u64(f[2], line_no);
    if (!f[3].empty()) r.gamma_hat_multigraph = parse_real(f[3], line_no);
    if (!f[4].empty()) r.gamma_hat_projected = parse_real(f[4], line_no);
    out.push_back(r);
  }
  return out;
}

std::string gnuplot_script(const std::string& prefix, const DegreeExperimentResult& result) {
  auto base_name = [](const std::string& p) {
    const auto slash = p.find_last_of('/');
    return slash == std::string::npos ? p : p.substr(slash + 1);
  };
  const std::string name = base_name(prefix);
  std::ostringstream gp;
  gp << "# gnuplot script; run from the directory holding the CSV files\n"
     << "set datafile separator ','\n"
     << "set datafile commentschars '#'\n"
     << "set logscale xy\n"
     << "set xlabel 'degree k'\n"
     << "set ylabel 'P(degree >= k)'\n"
     << "set key bottom left\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output '" << name << "_ccdf.png'\n";
  // Guide lines pass through the first fitted support point; a CCDF of a
  // gamma power law has log-log slope 1 - gamma.
  auto guide = [&](const char* fn, const ExponentFit& fit,
                   const std::vector<DegreeHistogram::CcdfPoint>& pts) {
    if (!fit.fit) return std::string();
    for (const auto& p : pts) {
      if (p.degree >= fit.fit->kmin) {
        gp << fn << "(x) = " << format_real(p.ccdf) << " * (x / " << p.degree << ".0)**("
           << format_real(1.0 - fit.fit->gamma) << ")\n";
        return std::string(fn);
      }
    }
    return std::string();
  };
  const std::string gm = guide("guide_multigraph", result.multigraph_fit, result.multigraph_ccdf);
  const std::string gpj = guide("guide_projected", result.projected_fit, result.projected_ccdf);
  gp << "plot '" << name << "_multigraph_ccdf.csv' skip 1 using 1:2 with points pt 7 ps 0.6 "
     << "title 'multigraph', \\\n"
     << "     '" << name << "_projected_ccdf.csv' skip 1 using 1:2 with points pt 6 ps 0.6 "
     << "title 'simple projection'";
  if (!gm.empty()) {
    gp << ", \\\n     " << gm << "(x) with lines dt 2 lc rgb 'black' title sprintf('gamma = %.3f', "
       << format_real(result.multigraph_fit.fit->gamma) << ")";
  }
  if (!gpj.empty()) {
    gp << ", \\\n     " << gpj << "(x) with lines dt 3 lc rgb 'gray40' title sprintf('gamma = %.3f', "
       << format_real(result.projected_fit.fit->gamma) << ")";
  }
  gp << '\n';
  return gp.str();
}

}  // namespace edgenet
