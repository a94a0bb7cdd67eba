#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "psp/envelope.hpp"

namespace psp::io {

struct BenchRow {
  std::size_t k = 0;
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::size_t dijkstra_calls = 0;
  std::int64_t wall_ns = 0;
};

/// Builds the index `repeats` times, one row per build.
std::vector<BenchRow> run_bench(const DualWeightGraph& graph, VertexId source, VertexId target,
                                std::size_t repeats, const BuildOptions& options = {});

/// Header `k,edges,vertices,dijkstra_calls,wall_ns` then one line per row.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace psp::io
