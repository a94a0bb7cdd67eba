#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psp/graph.hpp"
#include "psp/rational.hpp"

namespace psp {

/// Which tied shortest path to prefer: smallest or largest cost-line slope.
enum class SlopeMode { min_slope, max_slope };

/// Tentative (length under w_lambda, accumulated slope) of a path.
struct DistSlopeLabel {
  Rational length;
  Rational slope;
  friend bool operator==(const DistSlopeLabel&, const DistSlopeLabel&) = default;
};

/// Strict lexicographic order used by the search. Shorter length always wins;
/// on equal length min_slope prefers the smaller slope, max_slope the larger.
bool label_precedes(const DistSlopeLabel& a, const DistSlopeLabel& b, SlopeMode mode);

/// Per-vertex state left behind by a search. An unset label means unreached
/// (treated as +infinity).
struct SearchAnnotation {
  std::vector<std::optional<DistSlopeLabel>> label;
  std::vector<std::optional<EdgeId>> prev_edge;
  std::vector<bool> settled;
};

/// Lexicographic Dijkstra from `source` under w_lambda. With `stop_at` set the
/// search ends as soon as that vertex is settled; otherwise it runs until the
/// heap is empty. Throws PreconditionError for lambda outside [0, 1] or bad ids.
SearchAnnotation slope_search(const DualWeightGraph& graph, const Rational& lambda,
                              VertexId source, std::optional<VertexId> stop_at,
                              SlopeMode mode);

/// Follows prev_edge back from `target`. Throws UnreachableError if `target`
/// has no label.
Path trace_path(const DualWeightGraph& graph, const SearchAnnotation& annotation,
                VertexId source, VertexId target);

struct ExtremeSlopePath {
  Path path;
  DistSlopeLabel label;
};

/// A shortest source->target path under w_lambda whose cost-line slope is
/// minimal (or maximal) among all shortest paths. Deterministic: equal labels
/// keep the incumbent and heap ties pop the smaller vertex index first.
/// Throws UnreachableError.
ExtremeSlopePath dijkstra_extreme_slope(const DualWeightGraph& graph, const Rational& lambda,
                                        VertexId source, VertexId target, SlopeMode mode);

}  // namespace psp
