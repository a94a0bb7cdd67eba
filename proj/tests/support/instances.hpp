#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "psp/graph.hpp"

namespace psp::testing {

struct Instance {
  DualWeightGraph graph;
  VertexId source;
  VertexId target;
};

Rational q(long num, long den = 1);
Rational dec(const char* text);

/// x=0 -> a=1 -> y=3 and x -> b=2 -> y; the route via a costs `via_a`, the
/// route via b costs `via_b`, each split evenly over its two edges.
DualWeightGraph diamond(const CostLine& via_a, const CostLine& via_b);

/// Cost lines (1,3) via vertex 1 and (3,1) via vertex 2; breakpoint 1/2.
DualWeightGraph crossing_diamond();

/// Three two-edge routes 0 -> {1,2,3} -> 4 with lines (1,5), (5/2,5/2), (5,1).
DualWeightGraph three_routes();

DualWeightGraph single_edge(const Rational& w0, const Rational& w1);

struct RandomInstanceOptions {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 8;
  std::size_t min_edges = 1;
  std::size_t max_edges = 20;
};

/// Random multigraph (parallel edges and the odd self-loop included) with a
/// source/target pair where target is reachable and differs from source.
/// Half the instances use small integer weights to provoke ties, the rest
/// hundredths in (0, 10].
Instance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options = {});

/// Random graph with a planted path whose w0 and w1 totals are both below
/// every other source->target path's, so one line is minimal at both ends.
Instance dominated_instance(std::mt19937_64& rng);

std::vector<bool> reachable_from(const DualWeightGraph& graph, VertexId source);

}  // namespace psp::testing

namespace psp::testing {

/// Segment count of gadget_chain(blocks) measured by the exhaustive oracle on
/// each block separately: the chain's envelope is the sum of the block
/// envelopes, so its breakpoints are the union of theirs.
std::size_t gadget_chain_oracle_k(std::size_t blocks);

}  // namespace psp::testing
