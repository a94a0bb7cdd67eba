#pragma once

#include <filesystem>
#include <iosfwd>

#include "psp/graph.hpp"

namespace psp::io {

/// Reads the edge-list format:
///
///   # comment
///   psp <vertex_count> <edge_count>
///   e <tail> <head> <w0> <w1>      (edge_count times)
///
/// Weights are decimal literals parsed exactly ("0.25" is 1/4); "p/q" is also
/// accepted. Blank lines are ignored. Throws ParseError (with line number) for
/// grammar or count problems and WeightDomainError for nonpositive weights.
DualWeightGraph read_graph(std::istream& in);
DualWeightGraph read_graph_file(const std::filesystem::path& path);

/// Inverse of read_graph. Weights are written as exact decimals when
/// possible, otherwise as p/q.
void write_graph(std::ostream& out, const DualWeightGraph& graph);
void write_graph_file(const std::filesystem::path& path, const DualWeightGraph& graph);

}  // namespace psp::io
