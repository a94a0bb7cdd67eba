#include "psp/slope_dijkstra.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "psp/errors.hpp"

namespace psp {
namespace {

struct HeapEntry {
  DistSlopeLabel label;
  VertexId vertex;
};

void check_inputs(const DualWeightGraph& graph, const Rational& lambda, VertexId source) {
  if (!in_unit_interval(lambda)) {
    throw PreconditionError("lambda " + lambda.str() + " outside [0, 1]");
  }
  if (!graph.contains(source)) {
    throw PreconditionError("source " + std::to_string(source.index) + " out of range");
  }
}

}  // namespace

bool label_precedes(const DistSlopeLabel& a, const DistSlopeLabel& b, SlopeMode mode) {
  if (a.length != b.length) return a.length < b.length;
  return mode == SlopeMode::min_slope ? a.slope < b.slope : a.slope > b.slope;
}

SearchAnnotation slope_search(const DualWeightGraph& graph, const Rational& lambda,
                              VertexId source, std::optional<VertexId> stop_at,
                              SlopeMode mode) {
  check_inputs(graph, lambda, source);
  if (stop_at && !graph.contains(*stop_at)) {
    throw PreconditionError("target " + std::to_string(stop_at->index) + " out of range");
  }

  const std::size_t n = graph.vertex_count();
  SearchAnnotation ann;
  ann.label.assign(n, std::nullopt);
  ann.prev_edge.assign(n, std::nullopt);
  ann.settled.assign(n, false);

  // priority_queue pops the "largest"; invert so the best label comes first.
  auto worse = [mode](const HeapEntry& a, const HeapEntry& b) {
    if (label_precedes(b.label, a.label, mode)) return true;
    if (label_precedes(a.label, b.label, mode)) return false;
    return a.vertex.index > b.vertex.index;
  };
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, decltype(worse)> heap(worse);

  const Rational one_minus = Rational(1) - lambda;
  ann.label[source.index] = DistSlopeLabel{Rational(0), Rational(0)};
  heap.push({*ann.label[source.index], source});

  while (!heap.empty()) {
    HeapEntry top = heap.top();
    heap.pop();
    const VertexId u = top.vertex;
    if (ann.settled[u.index]) continue;  // stale
    ann.settled[u.index] = true;
    if (stop_at && u == *stop_at) break;

    const DistSlopeLabel& base = *ann.label[u.index];
    for (EdgeId id : graph.out_edges(u)) {
      const Edge& e = graph.edge(id);
      if (ann.settled[e.head.index]) continue;
      DistSlopeLabel candidate{base.length + one_minus * e.w0 + lambda * e.w1,
                               base.slope + (e.w1 - e.w0)};
      auto& current = ann.label[e.head.index];
      if (!current || label_precedes(candidate, *current, mode)) {
        current = candidate;
        ann.prev_edge[e.head.index] = id;
        heap.push({std::move(candidate), e.head});
      }
    }
  }
  return ann;
}

Path trace_path(const DualWeightGraph& graph, const SearchAnnotation& annotation,
                VertexId source, VertexId target) {
  if (!annotation.label.at(target.index)) {
    throw UnreachableError("vertex " + std::to_string(target.index) +
                           " is unreachable from " + std::to_string(source.index));
  }
  std::vector<EdgeId> reversed;
  VertexId v = target;
  while (v != source) {
    const auto& prev = annotation.prev_edge[v.index];
    if (!prev || reversed.size() >= graph.vertex_count()) {
      throw InternalError("prev_edge chain does not lead back to the source");
    }
    reversed.push_back(*prev);
    v = graph.edge(*prev).tail;
  }
  std::reverse(reversed.begin(), reversed.end());
  return Path(std::move(reversed));
}

ExtremeSlopePath dijkstra_extreme_slope(const DualWeightGraph& graph, const Rational& lambda,
                                        VertexId source, VertexId target, SlopeMode mode) {
  check_inputs(graph, lambda, source);
  if (!graph.contains(target)) {
    throw PreconditionError("target " + std::to_string(target.index) + " out of range");
  }
  if (source == target) return {Path{}, DistSlopeLabel{Rational(0), Rational(0)}};

  const SearchAnnotation ann = slope_search(graph, lambda, source, target, mode);
  Path path = trace_path(graph, ann, source, target);
  return {std::move(path), *ann.label[target.index]};
}

}  // namespace psp
