#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psp/envelope.hpp"
#include "psp/slope_dijkstra.hpp"

namespace psp::oracle {

inline constexpr std::size_t kDefaultVertexBound = 12;

struct LineEntry {
  CostLine line;
  Path path;
  std::vector<VertexId> vertices;
};

/// Cost lines of all simple source->target paths, one entry per distinct
/// (c0, c1). The kept path is the first one met in depth-first order.
struct LineSet {
  std::vector<LineEntry> entries;
};

/// Exhaustive enumeration. Throws OracleScaleError when the graph has more
/// than `vertex_bound` vertices. No path gives an empty set.
LineSet enumerate_paths(const DualWeightGraph& graph, VertexId source, VertexId target,
                        std::size_t vertex_bound = kDefaultVertexBound);

/// Lower envelope on [0, 1] by sorting on slope and scanning a convex chain.
/// Throws EmptyInputError for an empty set.
std::vector<EnvelopeSegment> envelope_of_lines(const LineSet& lines);

struct EnvelopeDifference {
  std::size_t position = 0;
  std::string description;
};

/// Compares breakpoints and lines (not paths). Returns the first difference,
/// or nullopt when equal. Throws StructureError if either input does not
/// tile [0, 1].
std::optional<EnvelopeDifference> compare_envelopes(std::span<const EnvelopeSegment> a,
                                                    std::span<const EnvelopeSegment> b);

/// Plain (single-criterion) Dijkstra distance under w_lambda; nullopt when
/// unreachable.
std::optional<Rational> plain_shortest_distance(const DualWeightGraph& graph,
                                                const Rational& lambda, VertexId source,
                                                VertexId target);

/// Lexicographic extremum of (length at lambda, slope) over the line set.
std::optional<DistSlopeLabel> lexicographic_extremum(const LineSet& lines,
                                                     const Rational& lambda, SlopeMode mode);

/// Minimum of all lines at lambda.
std::optional<Rational> min_cost(const LineSet& lines, const Rational& lambda);

}  // namespace psp::oracle
