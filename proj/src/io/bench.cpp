#include "psp/io/bench.hpp"

#include <chrono>
#include <ostream>

namespace psp::io {

std::vector<BenchRow> run_bench(const DualWeightGraph& graph, VertexId source, VertexId target,
                                std::size_t repeats, const BuildOptions& options) {
  std::vector<BenchRow> rows;
  rows.reserve(repeats);
  for (std::size_t i = 0; i < repeats; ++i) {
    BuildStats stats;
    const auto start = std::chrono::steady_clock::now();
    const ShortestPathIndex index = build_index(graph, source, target, options, &stats);
    const auto stop = std::chrono::steady_clock::now();
    rows.push_back({index.k(), graph.edge_count(), graph.vertex_count(), stats.dijkstra_calls,
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()});
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "k,edges,vertices,dijkstra_calls,wall_ns\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.edges << ',' << r.vertices << ',' << r.dijkstra_calls << ','
        << r.wall_ns << '\n';
  }
}

}  // namespace psp::io
