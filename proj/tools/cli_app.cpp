#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "psp/envelope.hpp"
#include "psp/errors.hpp"
#include "psp/io/bench.hpp"
#include "psp/io/envelope_io.hpp"
#include "psp/io/generators.hpp"
#include "psp/io/graph_io.hpp"
#include "psp/io/plot.hpp"
#include "psp/oracle.hpp"
#include "psp/query.hpp"
#include "psp/slope_dijkstra.hpp"

namespace psp::cli {
namespace {

std::string join_vertices(const std::vector<VertexId>& vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices[i].index);
  }
  return out;
}

Rational parse_arg(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw ParseError(0, std::string("invalid value for ") + flag + ": '" + text + "'");
  }
}

VertexId vertex(std::uint32_t v) { return VertexId{v}; }

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError(0, "cannot write " + path);
  return f;
}

struct Options {
  std::string graph_file;
  std::string envelope_file;
  std::string out_file;
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  std::string lambda;
  std::size_t threads = 1;
  std::size_t oracle_bound = oracle::kDefaultVertexBound;
  bool corrupt = false;
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t vertices = 6;
  std::size_t edges = 10;
  std::string min_weight = "0.01";
  std::string max_weight = "10";
  std::size_t blocks = 1;
  std::size_t repeats = 1;
  std::size_t samples = 0;
  std::string mode = "min";
};

int cmd_build(const Options& o, std::ostream& out) {
  const DualWeightGraph graph = io::read_graph_file(o.graph_file);
  BuildStats stats;
  const ShortestPathIndex index =
      build_index(graph, vertex(o.source), vertex(o.target), BuildOptions{o.threads}, &stats);
  auto f = open_out(o.out_file);
  io::write_envelope(f, index);
  out << "k=" << index.k() << " breakpoints=" << index.k() - 1
      << " dijkstra_calls=" << stats.dijkstra_calls << '\n';
  return kOk;
}

int cmd_query(const Options& o, std::ostream& out) {
  const ShortestPathIndex index = io::read_envelope_file(o.envelope_file);
  const QueryResult hit = query(index, parse_arg(o.lambda, "--lambda"));
  const EnvelopeSegment& seg = index.segments()[hit.segment_position];
  out << "cost=" << hit.cost.str() << " path=" << join_vertices(hit.vertices) << " segment=["
      << seg.lo.str() << ',' << seg.hi.str() << "]\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const DualWeightGraph graph = io::read_graph_file(o.graph_file);
  const VertexId s = vertex(o.source);
  const VertexId t = vertex(o.target);
  const oracle::LineSet lines = oracle::enumerate_paths(graph, s, t, o.oracle_bound);
  const ShortestPathIndex index = build_index(graph, s, t, BuildOptions{o.threads});
  std::vector<EnvelopeSegment> built = index.segments();
  if (o.corrupt) {
    // Test hook: nudge the first boundary (or line, when k = 1).
    if (built.size() > 1) {
      built[0].hi += Rational(1, 1000);
      built[1].lo = built[0].hi;
    } else {
      built[0].line.c0 += Rational(1, 1000);
    }
  }
  const auto expected = oracle::envelope_of_lines(lines);
  if (auto diff = oracle::compare_envelopes(built, expected)) {
    out << "MISMATCH position=" << diff->position << ": " << diff->description << '\n';
    return kVerificationFailed;
  }
  out << "VERIFIED k=" << index.k() << '\n';
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  std::optional<DualWeightGraph> graph;
  if (o.kind == "random") {
    io::RandomGraphParams p;
    p.vertices = o.vertices;
    p.edges = o.edges;
    p.min_weight = parse_arg(o.min_weight, "--min-weight");
    p.max_weight = parse_arg(o.max_weight, "--max-weight");
    p.seed = o.seed;
    graph = io::random_graph(p);
  } else {
    graph = io::gadget_chain(o.blocks);
  }
  auto f = open_out(o.out_file);
  f << "# generated: " << o.kind << " seed=" << o.seed << '\n';
  io::write_graph(f, *graph);
  out << "vertices=" << graph->vertex_count() << " edges=" << graph->edge_count() << '\n';
  return kOk;
}

int cmd_bench(const Options& o, bool gadget, bool random, bool have_target, std::ostream& out) {
  std::optional<DualWeightGraph> graph;
  if (gadget) {
    graph = io::gadget_chain(o.blocks);
  } else if (random) {
    io::RandomGraphParams p;
    p.vertices = o.vertices;
    p.edges = o.edges;
    p.min_weight = parse_arg(o.min_weight, "--min-weight");
    p.max_weight = parse_arg(o.max_weight, "--max-weight");
    p.seed = o.seed;
    graph = io::random_graph(p);
  } else {
    if (o.graph_file.empty()) throw ParseError(0, "bench needs a graph file or generator flags");
    graph = io::read_graph_file(o.graph_file);
  }
  VertexId target = vertex(o.target);
  if (gadget && !have_target) target = vertex(static_cast<std::uint32_t>(3 * o.blocks));
  const auto rows =
      io::run_bench(*graph, vertex(o.source), target, o.repeats, BuildOptions{o.threads});
  io::write_bench_csv(out, rows);
  return kOk;
}

int cmd_export_plot(const Options& o) {
  const ShortestPathIndex index = io::read_envelope_file(o.envelope_file);
  const auto rows = io::plot_rows(index, o.samples);
  auto f = open_out(o.out_file);
  io::write_plot_csv(f, rows);
  return kOk;
}

int cmd_sssp(const Options& o, std::ostream& out) {
  const DualWeightGraph graph = io::read_graph_file(o.graph_file);
  const Rational lambda = parse_arg(o.lambda, "--lambda");
  if (!in_unit_interval(lambda)) {
    throw QueryDomainError("lambda " + lambda.str() + " outside [0, 1]");
  }
  const SlopeMode mode = o.mode == "max" ? SlopeMode::max_slope : SlopeMode::min_slope;
  const auto found = dijkstra_extreme_slope(graph, lambda, vertex(o.source), vertex(o.target), mode);
  out << "length=" << found.label.length.str() << " slope=" << found.label.slope.str()
      << " path=" << join_vertices(path_vertices(graph, found.path, vertex(o.source))) << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parametric shortest paths on linearly interpolated graphs", "psp"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Compute the envelope index and write it as JSON");
  build->add_option("graph", o.graph_file, "Graph file")->required();
  build->add_option("--source", o.source)->required();
  build->add_option("--target", o.target)->required();
  build->add_option("--out", o.out_file, "Envelope output file")->required();
  build->add_option("--threads", o.threads)->check(CLI::PositiveNumber);

  auto* q = app.add_subcommand("query", "Shortest path at one lambda");
  q->add_option("envelope", o.envelope_file, "Envelope file")->required();
  q->add_option("--lambda", o.lambda, "Decimal or p/q in [0, 1]")->required();

  auto* verify = app.add_subcommand("verify", "Check the algorithm against exhaustive enumeration");
  verify->add_option("graph", o.graph_file)->required();
  verify->add_option("--source", o.source)->required();
  verify->add_option("--target", o.target)->required();
  verify->add_option("--max-oracle-vertices", o.oracle_bound);
  verify->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  verify->add_flag("--corrupt-for-test", o.corrupt)->group("");

  auto* gen = app.add_subcommand("gen", "Generate a graph file");
  gen->add_option("kind", o.kind)->required()->check(CLI::IsMember({"random", "gadget-chain"}));
  gen->add_option("--seed", o.seed);
  gen->add_option("--out", o.out_file)->required();
  gen->add_option("--vertices", o.vertices);
  gen->add_option("--edges", o.edges);
  gen->add_option("--min-weight", o.min_weight);
  gen->add_option("--max-weight", o.max_weight);
  gen->add_option("--blocks", o.blocks);

  auto* bench = app.add_subcommand("bench", "Time index construction, CSV to stdout");
  bench->add_option("graph", o.graph_file);
  bench->add_option("--source", o.source);
  auto* bench_target = bench->add_option("--target", o.target);
  bench->add_option("--repeats", o.repeats)->check(CLI::PositiveNumber);
  bench->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  auto* bench_gadget = bench->add_option("--gadget-chain", o.blocks, "Use a chain of N blocks");
  auto* bench_random = bench->add_flag("--random", "Use a random graph (see gen flags)");
  bench->add_option("--seed", o.seed);
  bench->add_option("--vertices", o.vertices);
  bench->add_option("--edges", o.edges);
  bench->add_option("--min-weight", o.min_weight);
  bench->add_option("--max-weight", o.max_weight);

  auto* plot = app.add_subcommand("export-plot", "Sample the envelope into CSV");
  plot->add_option("envelope", o.envelope_file)->required();
  plot->add_option("--samples", o.samples)->required();
  plot->add_option("--out", o.out_file)->required();

  auto* sssp = app.add_subcommand("sssp", "Single lexicographic Dijkstra run (debugging)");
  sssp->add_option("graph", o.graph_file)->required();
  sssp->add_option("--source", o.source)->required();
  sssp->add_option("--target", o.target)->required();
  sssp->add_option("--lambda", o.lambda)->required();
  sssp->add_option("--mode", o.mode)->check(CLI::IsMember({"min", "max"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "psp: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (q->parsed()) return cmd_query(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (bench->parsed()) {
      return cmd_bench(o, bench_gadget->count() > 0, bench_random->count() > 0,
                       bench_target->count() > 0, out);
    }
    if (plot->parsed()) return cmd_export_plot(o);
    if (sssp->parsed()) return cmd_sssp(o, out);
  } catch (const UnreachableError& e) {
    err << "psp: " << e.what() << '\n';
    return kUnreachable;
  } catch (const QueryDomainError& e) {
    err << "psp: " << e.what() << '\n';
    return kQueryDomain;
  } catch (const OracleScaleError& e) {
    err << "psp: " << e.what() << '\n';
    return kOracleScale;
  } catch (const Error& e) {
    err << "psp: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace psp::cli
