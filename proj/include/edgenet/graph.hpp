#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace edgenet {

using VertexId = std::uint32_t;  // 1-based
using Degree = std::uint64_t;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Ordered edge list over vertices 1..num_vertices, every vertex incident to at
// least one edge. Self-loops and parallel edges are allowed. Undirected edges
// keep the order in which their endpoints arrived.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws MalformedGraphError if an id is 0 or some id in 1..max is unused.
  Multigraph(std::vector<Edge> edges, bool directed);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_vertices() const noexcept { return num_vertices_; }
  bool directed() const noexcept { return directed_; }

  /// True when vertex ids follow first appearance along the edge list,
  /// first coordinate before second.
  bool is_canonical() const;

  /// Relabels vertices by first appearance. No-op on canonical graphs.
  Multigraph canonical() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<Edge> edges_;
  std::size_t num_vertices_ = 0;
  bool directed_ = false;
};

/// Degree of each vertex; index 0 holds vertex 1. A self-loop counts twice.
std::vector<Degree> degree_sequence(const Multigraph& g);

// Vertex counts by degree.
class DegreeHistogram {
 public:
  DegreeHistogram() = default;
  DegreeHistogram(std::map<Degree, std::uint64_t> counts, std::uint64_t total_edges);

  static DegreeHistogram from_degrees(const std::vector<Degree>& degrees);

  const std::map<Degree, std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total_vertices() const noexcept { return total_vertices_; }
  std::uint64_t total_edges() const noexcept { return total_edges_; }

  /// N(k) / N.
  double proportion(Degree k) const;
  /// Fraction of vertices with degree >= k.
  double ccdf(Degree k) const;

  struct CcdfPoint {
    Degree degree;
    double ccdf;
  };
  /// CCDF evaluated at each degree present in the histogram, ascending.
  std::vector<CcdfPoint> ccdf_points() const;

  friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;

 private:
  std::map<Degree, std::uint64_t> counts_;
  std::uint64_t total_vertices_ = 0;
  std::uint64_t total_edges_ = 0;
};

DegreeHistogram degree_histogram(const Multigraph& g);

/// Collapses parallel edges (and repeated self-loops) to one edge each, in
/// order of first occurrence. Undirected graphs identify (u,v) with (v,u).
Multigraph project_simple(const Multigraph& g);

struct EdgeList {
  Multigraph graph;
  std::vector<std::string> labels;  // labels[id - 1] is the raw label of vertex id
};

/// Whitespace-separated two-column edge list. Lines starting with '#' or '%'
/// and blank lines are skipped. Labels are arbitrary strings, remapped to
/// consecutive ids by first appearance.
EdgeList parse_edge_list(std::istream& in, bool directed);
EdgeList parse_edge_list_file(const std::string& path, bool directed);

/// "# edges=n", "# vertices=V", "# directed=..." then "u\tv" per edge.
void write_edge_list(std::ostream& out, const Multigraph& g);
std::string write_edge_list(const Multigraph& g);
void write_edge_list_file(const std::string& path, const Multigraph& g);

}  // namespace edgenet
