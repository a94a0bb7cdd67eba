#pragma once

#include <cstddef>
#include <cstdint>

#include "psp/graph.hpp"

namespace psp::io {

struct RandomGraphParams {
  std::size_t vertices = 6;
  std::size_t edges = 10;
  /// Weights are drawn from the grid of hundredths inside [min_weight, max_weight].
  Rational min_weight = Rational(1, 100);
  Rational max_weight = Rational(10);
  std::uint64_t seed = 0;
};

/// Uniform random digraph on distinct ordered pairs (no loops, no parallel
/// edges). Throws PreconditionError when the parameters are infeasible.
DualWeightGraph random_graph(const RandomGraphParams& params);

/// `blocks` diamonds in series from vertex 0 to vertex 3 * blocks. Block i
/// crosses over at lambda = i / 2^p, and its two routes use slopes of
/// magnitude 2^(i-1), so every choice of routes has its own cost line and the
/// envelope has blocks + 1 segments. Throws PreconditionError for blocks == 0.
DualWeightGraph gadget_chain(std::size_t blocks);

}  // namespace psp::io
