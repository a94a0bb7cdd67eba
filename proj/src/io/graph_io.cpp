#include "psp/io/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "psp/errors.hpp"

namespace psp::io {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return value;
}

Rational parse_weight(const std::string& tok, std::size_t line) {
  try {
    return Rational::parse(tok);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

DualWeightGraph read_graph(std::istream& in) {
  std::optional<std::size_t> vertex_count;
  std::size_t expected_edges = 0;
  std::vector<Edge> edges;
  std::string text;
  std::size_t line_no = 0;

  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto tokens = split_ws(text);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;

    if (!vertex_count) {
      if (tokens.size() != 3 || tokens[0] != "psp") {
        throw ParseError(line_no, "expected header 'psp <vertex_count> <edge_count>'");
      }
      vertex_count = parse_count(tokens[1], line_no, "vertex count");
      expected_edges = parse_count(tokens[2], line_no, "edge count");
      edges.reserve(expected_edges);
      continue;
    }

    if (tokens.size() != 5 || tokens[0] != "e") {
      throw ParseError(line_no, "expected 'e <tail> <head> <w0> <w1>'");
    }
    if (edges.size() == expected_edges) {
      throw ParseError(line_no, "more edges than the header's " + std::to_string(expected_edges));
    }
    const std::size_t tail = parse_count(tokens[1], line_no, "tail");
    const std::size_t head = parse_count(tokens[2], line_no, "head");
    if (tail >= *vertex_count || head >= *vertex_count) {
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(*vertex_count) + ")");
    }
    Rational w0 = parse_weight(tokens[3], line_no);
    Rational w1 = parse_weight(tokens[4], line_no);
    if (w0.sign() <= 0 || w1.sign() <= 0) {
      throw WeightDomainError(edges.size(), "line " + std::to_string(line_no) + ": edge " +
                                                std::to_string(edges.size()) +
                                                " weights must be strictly positive");
    }
    edges.push_back({VertexId{static_cast<std::uint32_t>(tail)},
                     VertexId{static_cast<std::uint32_t>(head)}, std::move(w0), std::move(w1)});
  }

  if (!vertex_count) throw ParseError(line_no, "missing 'psp' header");
  if (edges.size() != expected_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(expected_edges) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  return DualWeightGraph(*vertex_count, std::move(edges));
}

DualWeightGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const DualWeightGraph& graph) {
  out << "psp " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << "e " << e.tail.index << ' ' << e.head.index << ' ' << e.w0.decimal_or_fraction() << ' '
        << e.w1.decimal_or_fraction() << '\n';
  }
}

void write_graph_file(const std::filesystem::path& path, const DualWeightGraph& graph) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_graph(out, graph);
}

}  // namespace psp::io
