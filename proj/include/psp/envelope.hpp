#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "psp/graph.hpp"
#include "psp/rational.hpp"

namespace psp {

/// A maximal parameter interval [lo, hi] on which `path` (with cost `line`)
/// is a shortest path. `vertices` is the path's vertex sequence.
struct EnvelopeSegment {
  Rational lo;
  Rational hi;
  Path path;
  std::vector<VertexId> vertices;
  CostLine line;

  friend bool operator==(const EnvelopeSegment&, const EnvelopeSegment&) = default;
};

/// Sorted segments tiling [0, 1]: the lower envelope of all source->target
/// cost lines, one segment per distinct parametric shortest path.
class ShortestPathIndex {
 public:
  /// Checks the tiling (first lo = 0, last hi = 1, lo < hi, contiguous);
  /// throws StructureError otherwise. Envelope-specific properties are
  /// reported by index_violations().
  ShortestPathIndex(VertexId source, VertexId target, std::vector<EnvelopeSegment> segments);

  VertexId source() const { return source_; }
  VertexId target() const { return target_; }
  const std::vector<EnvelopeSegment>& segments() const { return segments_; }
  std::size_t k() const { return segments_.size(); }

  friend bool operator==(const ShortestPathIndex&, const ShortestPathIndex&) = default;

 private:
  VertexId source_;
  VertexId target_;
  std::vector<EnvelopeSegment> segments_;
};

/// Throws StructureError unless `segments` is non-empty and tiles [0, 1].
void check_tiling(const std::vector<EnvelopeSegment>& segments);

/// Human-readable list of violated envelope invariants: line agreement at
/// breakpoints, distinct adjacent lines, strictly decreasing slopes. Empty
/// when the index is well-formed.
std::vector<std::string> index_violations(const ShortestPathIndex& index);

/// The lambda at which the two lines meet. Throws ParallelLinesError when the
/// slopes are equal.
Rational intersect_lines(const CostLine& a, const CostLine& b);

/// A path together with its cost line.
struct LinePath {
  Path path;
  CostLine line;
};

struct BuildOptions {
  /// Worker threads for expanding independent sub-intervals; 1 runs serially.
  /// Output is identical for every value.
  std::size_t threads = 1;
};

struct BuildStats {
  std::size_t dijkstra_calls = 0;
  /// Interval nodes visited, leaves included.
  std::size_t interval_nodes = 0;
  std::size_t max_depth = 0;
  /// Segment count before adjacent equal lines are merged.
  std::size_t raw_segments = 0;
};

/// Lower envelope on [s, t]. `at_s` must be a shortest path at s with minimal
/// slope among ties there, `at_t` a shortest path at t with maximal slope.
/// Segments are returned in interval order, unmerged. Propagates
/// UnreachableError.
std::vector<EnvelopeSegment> get_shortest_paths(const DualWeightGraph& graph, VertexId source,
                                                VertexId target, const Rational& s,
                                                const Rational& t, LinePath at_s, LinePath at_t,
                                                const BuildOptions& options = {},
                                                BuildStats* stats = nullptr);

/// Complete index over [0, 1]. Throws UnreachableError if target cannot be
/// reached from source.
ShortestPathIndex build_index(const DualWeightGraph& graph, VertexId source, VertexId target,
                              const BuildOptions& options = {}, BuildStats* stats = nullptr);

/// Merges neighbours with identical lines, keeping the leftmost path.
std::vector<EnvelopeSegment> merge_equal_lines(std::vector<EnvelopeSegment> segments);

}  // namespace psp
