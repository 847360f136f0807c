#include "edgenet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "edgenet/error.hpp"
#include "edgenet/parallel.hpp"

namespace edgenet {

Multigraph::Multigraph(std::vector<Edge> edges, bool directed)
    : edges_(std::move(edges)), directed_(directed) {
  VertexId max_id = 0;
  for (const Edge& e : edges_) {
    if (e.u == 0 || e.v == 0) throw MalformedGraphError("vertex ids are 1-based");
    max_id = std::max({max_id, e.u, e.v});
  }
  std::vector<bool> seen(max_id, false);
  for (const Edge& e : edges_) {
    seen[e.u - 1] = true;
    seen[e.v - 1] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw MalformedGraphError("vertex ids must be consecutive with every vertex on an edge");
  }
  num_vertices_ = max_id;
}

bool Multigraph::is_canonical() const {
  VertexId next = 1;
  for (const Edge& e : edges_) {
    for (VertexId x : {e.u, e.v}) {
      if (x > next) return false;
      if (x == next) ++next;
    }
  }
  return true;
}

Multigraph Multigraph::canonical() const {
  if (is_canonical()) return *this;
  std::vector<VertexId> relabel(num_vertices_, 0);
  VertexId next = 1;
  auto map = [&](VertexId x) {
    VertexId& r = relabel[x - 1];
    if (r == 0) r = next++;
    return r;
  };
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    const VertexId u = map(e.u);
    const VertexId v = map(e.v);
    out.push_back({u, v});
  }
  return Multigraph(std::move(out), directed_);
}

std::vector<Degree> degree_sequence(const Multigraph& g) {
  return omp::degree_counts(g.edges(), g.num_vertices());
}

DegreeHistogram::DegreeHistogram(std::map<Degree, std::uint64_t> counts, std::uint64_t total_edges)
    : counts_(std::move(counts)), total_edges_(total_edges) {
  std::uint64_t degree_sum = 0;
  for (const auto& [k, c] : counts_) {
    if (k == 0) throw DomainError("degree histogram cannot hold degree 0");
    total_vertices_ += c;
    degree_sum += k * c;
  }
  if (degree_sum != 2 * total_edges_) {
    throw DomainError("degree histogram violates the handshake identity");
  }
}

DegreeHistogram DegreeHistogram::from_degrees(const std::vector<Degree>& degrees) {
  std::map<Degree, std::uint64_t> counts;
  std::uint64_t sum = 0;
  for (Degree d : degrees) {
    ++counts[d];
    sum += d;
  }
  if (sum % 2 != 0) throw DomainError("degree sum must be even");
  return DegreeHistogram(std::move(counts), sum / 2);
}

double DegreeHistogram::proportion(Degree k) const {
  if (total_vertices_ == 0) return 0.0;
  auto it = counts_.find(k);
  return it == counts_.end() ? 0.0
                             : static_cast<double>(it->second) / static_cast<double>(total_vertices_);
}

double DegreeHistogram::ccdf(Degree k) const {
  if (total_vertices_ == 0) return 0.0;
  std::uint64_t at_least = 0;
  for (auto it = counts_.lower_bound(k); it != counts_.end(); ++it) at_least += it->second;
  return static_cast<double>(at_least) / static_cast<double>(total_vertices_);
}

std::vector<DegreeHistogram::CcdfPoint> DegreeHistogram::ccdf_points() const {
  std::vector<CcdfPoint> out;
  out.reserve(counts_.size());
  std::uint64_t remaining = total_vertices_;
  for (const auto& [k, c] : counts_) {
    out.push_back({k, static_cast<double>(remaining) / static_cast<double>(total_vertices_)});
    remaining -= c;
  }
  return out;
}

DegreeHistogram degree_histogram(const Multigraph& g) {
  return DegreeHistogram::from_degrees(degree_sequence(g));
}

namespace {

struct EdgeKeyHash {
  std::size_t operator()(std::uint64_t key) const noexcept {
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdULL;
    key ^= key >> 33;
    return static_cast<std::size_t>(key);
  }
};

}  // namespace

Multigraph project_simple(const Multigraph& g) {
  std::unordered_set<std::uint64_t, EdgeKeyHash> seen;
  seen.reserve(g.num_edges());
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    VertexId a = e.u;
    VertexId b = e.v;
    if (!g.directed() && a > b) std::swap(a, b);
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    if (seen.insert(key).second) out.push_back(e);
  }
  return Multigraph(std::move(out), g.directed());
}

EdgeList parse_edge_list(std::istream& in, bool directed) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size() + 1));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) {
      throw ParseError(line_no, "expected exactly two vertex labels");
    }
    const VertexId u = intern(a);
    const VertexId v = intern(b);
    edges.push_back({u, v});
  }
  if (edges.empty()) throw EmptyInputError("edge list contains no edges");
  return {Multigraph(std::move(edges), directed), std::move(labels)};
}

EdgeList parse_edge_list_file(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_edge_list(in, directed);
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << "# edges=" << g.num_edges() << '\n'
      << "# vertices=" << g.num_vertices() << '\n'
      << "# directed=" << (g.directed() ? "true" : "false") << '\n';
  std::string buf;
  for (const Edge& e : g.edges()) {
    buf.clear();
    buf += std::to_string(e.u);
    buf += '\t';
    buf += std::to_string(e.v);
    buf += '\n';
    out << buf;
  }
}

std::string write_edge_list(const Multigraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_edge_list_file(const std::string& path, const Multigraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  write_edge_list(out, g);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace edgenet
