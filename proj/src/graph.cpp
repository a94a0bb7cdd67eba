#include "psp/graph.hpp"

#include <string>

#include "psp/errors.hpp"

namespace psp {

void validate_graph(std::size_t vertex_count, std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.tail.index >= vertex_count || e.head.index >= vertex_count) {
      throw StructureError("edge " + std::to_string(i) + " has an endpoint outside [0, " +
                           std::to_string(vertex_count) + ")");
    }
    if (e.w0.sign() <= 0 || e.w1.sign() <= 0) {
      throw WeightDomainError(i, "edge " + std::to_string(i) +
                                     " has a nonpositive weight (w0=" + e.w0.str() +
                                     ", w1=" + e.w1.str() + ")");
    }
  }
}

DualWeightGraph::DualWeightGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  validate_graph(vertex_count_, edges_);

  // CSR adjacency, edges of each tail kept in input order.
  out_offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) ++out_offsets_[e.tail.index + 1];
  for (std::size_t v = 0; v < vertex_count_; ++v) out_offsets_[v + 1] += out_offsets_[v];
  out_edges_.resize(edges_.size());
  std::vector<std::size_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_edges_[cursor[edges_[i].tail.index]++] = EdgeId{static_cast<std::uint32_t>(i)};
  }
}

const Edge& DualWeightGraph::edge(EdgeId id) const {
  if (id.index >= edges_.size()) {
    throw PreconditionError("edge id " + std::to_string(id.index) + " out of range");
  }
  return edges_[id.index];
}

std::span<const EdgeId> DualWeightGraph::out_edges(VertexId v) const {
  if (!contains(v)) {
    throw PreconditionError("vertex id " + std::to_string(v.index) + " out of range");
  }
  return std::span<const EdgeId>(out_edges_).subspan(
      out_offsets_[v.index], out_offsets_[v.index + 1] - out_offsets_[v.index]);
}

void check_path(const DualWeightGraph& graph, const Path& path) {
  if (path.empty()) return;
  std::vector<bool> seen(graph.vertex_count(), false);
  const auto& ids = path.edges();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].index >= graph.edge_count()) {
      throw MalformedPathError("path edge " + std::to_string(ids[i].index) + " does not exist");
    }
    const Edge& e = graph.edge(ids[i]);
    if (i == 0) {
      seen[e.tail.index] = true;
    } else if (graph.edge(ids[i - 1]).head != e.tail) {
      throw MalformedPathError("path edges " + std::to_string(i - 1) + " and " +
                               std::to_string(i) + " are not contiguous");
    }
    if (seen[e.head.index]) {
      throw MalformedPathError("path revisits vertex " + std::to_string(e.head.index));
    }
    seen[e.head.index] = true;
  }
}

std::vector<VertexId> path_vertices(const DualWeightGraph& graph, const Path& path,
                                    VertexId source) {
  std::vector<VertexId> out;
  out.reserve(path.size() + 1);
  out.push_back(path.empty() ? source : graph.edge(path.edges().front()).tail);
  for (EdgeId id : path.edges()) out.push_back(graph.edge(id).head);
  return out;
}

Rational CostLine::value(const Rational& lambda) const {
  return (Rational(1) - lambda) * c0 + lambda * c1;
}

bool in_unit_interval(const Rational& lambda) {
  return lambda.sign() >= 0 && lambda <= Rational(1);
}

Rational interpolate_weight(const DualWeightGraph& graph, EdgeId edge, const Rational& lambda) {
  if (!in_unit_interval(lambda)) {
    throw PreconditionError("lambda " + lambda.str() + " outside [0, 1]");
  }
  const Edge& e = graph.edge(edge);
  return (Rational(1) - lambda) * e.w0 + lambda * e.w1;
}

CostLine cost_line(const DualWeightGraph& graph, const Path& path) {
  check_path(graph, path);
  CostLine line;
  for (EdgeId id : path.edges()) {
    const Edge& e = graph.edge(id);
    line.c0 += e.w0;
    line.c1 += e.w1;
  }
  return line;
}

}  // namespace psp
