#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "psp/rational.hpp"

namespace psp {

struct VertexId {
  std::uint32_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Position of an edge in the graph's input edge list.
struct EdgeId {
  std::uint32_t index = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Edge {
  VertexId tail;
  VertexId head;
  Rational w0;
  Rational w1;

  /// Per-edge slope w1 - w0 of the interpolated weight.
  Rational slope() const { return w1 - w0; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Throws StructureError for an endpoint >= vertex_count and
/// WeightDomainError for a weight <= 0.
void validate_graph(std::size_t vertex_count, std::span<const Edge> edges);

/// Directed multigraph with two strictly positive weights per edge. Immutable
/// once constructed; the constructor validates.
class DualWeightGraph {
 public:
  DualWeightGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  /// Throws PreconditionError for an invalid id.
  const Edge& edge(EdgeId id) const;
  bool contains(VertexId v) const { return v.index < vertex_count_; }

  /// Outgoing edges of `v` in increasing EdgeId order.
  std::span<const EdgeId> out_edges(VertexId v) const;

  friend bool operator==(const DualWeightGraph& a, const DualWeightGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<EdgeId> out_edges_;
};

/// A sequence of edges. Well-formedness against a graph is checked by
/// check_path(); an empty path stands for source == target.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<EdgeId> edges) : edges_(std::move(edges)) {}

  const std::vector<EdgeId>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<EdgeId> edges_;
};

/// Throws MalformedPathError unless every id is valid, consecutive edges are
/// contiguous and no vertex repeats.
void check_path(const DualWeightGraph& graph, const Path& path);

/// Vertex sequence of `path`; an empty path yields {source}.
std::vector<VertexId> path_vertices(const DualWeightGraph& graph, const Path& path,
                                    VertexId source);

/// Cost of a fixed path as a linear function of lambda, stored by its values
/// at lambda = 0 and lambda = 1.
struct CostLine {
  Rational c0;
  Rational c1;

  Rational slope() const { return c1 - c0; }
  /// (1 - lambda) * c0 + lambda * c1.
  Rational value(const Rational& lambda) const;

  CostLine& operator+=(const CostLine& o) {
    c0 += o.c0;
    c1 += o.c1;
    return *this;
  }
  friend CostLine operator+(CostLine a, const CostLine& b) { return a += b; }
  friend bool operator==(const CostLine&, const CostLine&) = default;
};

/// (1 - lambda) * w0(e) + lambda * w1(e). Throws PreconditionError for
/// lambda outside [0, 1] or an invalid edge.
Rational interpolate_weight(const DualWeightGraph& graph, EdgeId edge, const Rational& lambda);

/// Componentwise sums of w0 and w1 along the path. Throws MalformedPathError.
CostLine cost_line(const DualWeightGraph& graph, const Path& path);

inline Rational eval_cost(const CostLine& line, const Rational& lambda) {
  return line.value(lambda);
}

bool in_unit_interval(const Rational& lambda);

}  // namespace psp
