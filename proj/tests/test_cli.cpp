#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "cli_app.hpp"
#include "doctest.h"
#include "psp/io/envelope_io.hpp"
#include "psp/io/graph_io.hpp"
#include "psp/query.hpp"
#include "support/instances.hpp"

using namespace psp;
using psp::testing::q;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = psp::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("psp_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kDiamond =
    "psp 4 4\n"
    "e 0 1 0.5 1.5\n"
    "e 1 3 0.5 1.5\n"
    "e 0 2 1.5 0.5\n"
    "e 2 3 1.5 0.5\n";

std::size_t field(const std::string& text, const std::string& key) {
  const auto pos = text.find(key + "=");
  REQUIRE(pos != std::string::npos);
  return std::stoul(text.substr(pos + key.size() + 1));
}

}  // namespace



TEST_CASE("build") {
  TempDir dir;
  const auto graph = dir.write("diamond.psp", kDiamond);
  const auto r = run({"build", graph, "--source", "0", "--target", "3", "--out", dir.file("env.json")});
  REQUIRE(r.code == 0);
  CHECK(r.out.starts_with("k=2 breakpoints=1 dijkstra_calls="));
  CHECK(field(r.out, "dijkstra_calls") <= 8);
  const auto index = io::read_envelope_file(dir.file("env.json"));
  CHECK(breakpoints(index) == std::vector<Rational>{q(1, 2)});

  const auto single = dir.write("single.psp", "psp 2 1\ne 0 1 1 3\n");
  const auto r1 = run({"build", single, "--source", "0", "--target", "1", "--out", dir.file("s.json")});
  CHECK(r1.code == 0);
  CHECK(r1.out == "k=1 breakpoints=0 dijkstra_calls=2\n");

  const auto zero = dir.write("zero.psp", "psp 2 1\ne 0 1 0 3\n");
  CHECK(run({"build", zero, "--source", "0", "--target", "1", "--out", dir.file("z.json")}).code == 2);

  const auto broken = dir.write("broken.psp", "psp 2 1\ne 0 1 one 3\n");
  const auto rb = run({"build", broken, "--source", "0", "--target", "1", "--out", dir.file("b.json")});
  CHECK(rb.code == 2);
  CHECK(rb.err.find("line 2") != std::string::npos);

  CHECK(run({"build", graph, "--source", "3", "--target", "0", "--out", dir.file("u.json")}).code == 3);
  CHECK(run({"build", dir.file("missing.psp"), "--source", "0", "--target", "1", "--out",
             dir.file("m.json")}).code == 2);
  CHECK(run({"build", graph, "--source", "0", "--target", "9", "--out", dir.file("r.json")}).code == 2);
}

TEST_CASE("query") {
  TempDir dir;
  const auto graph = dir.write("diamond.psp", kDiamond);
  REQUIRE(run({"build", graph, "--source", "0", "--target", "3", "--out", dir.file("env.json")}).code == 0);
  const auto env = dir.file("env.json");

  const auto r = run({"query", env, "--lambda", "0.25"});
  CHECK(r.code == 0);
  CHECK(r.out == "cost=3/2 path=0,1,3 segment=[0/1,1/2]\n");
  CHECK(run({"query", env, "--lambda", "3/4"}).out == "cost=3/2 path=0,2,3 segment=[1/2,1/1]\n");
  CHECK(run({"query", env, "--lambda", "0"}).out.starts_with("cost=1/1 "));
  CHECK(run({"query", env, "--lambda", "1.5"}).code == 4);
  CHECK(run({"query", env, "--lambda", "-0.1"}).code == 4);
  CHECK(run({"query", env, "--lambda", "abc"}).code == 2);

  const auto bad = dir.write("bad.json", "{\"format\": 1}");
  CHECK(run({"query", bad, "--lambda", "0.5"}).code == 2);
  const auto garbage = dir.write("garbage.json", "not json at all");
  CHECK(run({"query", garbage, "--lambda", "0.5"}).code == 2);
}

TEST_CASE("verify") {
  TempDir dir;
  const auto graph = dir.write("diamond.psp", kDiamond);
  const auto r = run({"verify", graph, "--source", "0", "--target", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "VERIFIED k=2\n");

  const auto corrupt = run({"verify", graph, "--source", "0", "--target", "3", "--corrupt-for-test"});
  CHECK(corrupt.code == 5);
  CHECK(corrupt.out.find("position=0") != std::string::npos);

  const auto big = dir.write("big.psp", "psp 13 1\ne 0 1 1 1\n");
  CHECK(run({"verify", big, "--source", "0", "--target", "1"}).code == 6);
  CHECK(run({"verify", big, "--source", "0", "--target", "1", "--max-oracle-vertices", "13"}).code == 0);
}

TEST_CASE("gen") {
  TempDir dir;
  REQUIRE(run({"gen", "gadget-chain", "--blocks", "1", "--out", dir.file("g1.psp")}).code == 0);
  const auto g1 = io::read_graph_file(dir.file("g1.psp"));
  CHECK(g1.vertex_count() == 4);
  CHECK(g1.edge_count() == 4);

  REQUIRE(run({"gen", "random", "--vertices", "6", "--edges", "10", "--seed", "7", "--out",
               dir.file("a.psp")}).code == 0);
  REQUIRE(run({"gen", "random", "--vertices", "6", "--edges", "10", "--seed", "7", "--out",
               dir.file("b.psp")}).code == 0);
  CHECK(slurp(dir.file("a.psp")) == slurp(dir.file("b.psp")));
  CHECK(io::read_graph_file(dir.file("a.psp")).edge_count() == 10);

  // Oracle-measured k of a three-block chain, stable across runs.
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto out = dir.file("g3_" + std::to_string(attempt) + ".psp");
    REQUIRE(run({"gen", "gadget-chain", "--blocks", "3", "--out", out}).code == 0);
    CHECK(run({"verify", out, "--source", "0", "--target", "9"}).out == "VERIFIED k=4\n");
  }

  CHECK(run({"gen", "random", "--vertices", "3", "--edges", "7", "--out", dir.file("x.psp")}).code == 2);
  CHECK(run({"gen", "random", "--vertices", "3", "--edges", "0", "--out", dir.file("x.psp")}).code == 2);
  CHECK(run({"gen", "gadget-chain", "--blocks", "0", "--out", dir.file("x.psp")}).code == 2);
  CHECK(run({"gen", "lattice", "--out", dir.file("x.psp")}).code == 2);
}

TEST_CASE("bench") {
  TempDir dir;
  const auto graph = dir.write("diamond.psp", kDiamond);
  const auto r = run({"bench", graph, "--source", "0", "--target", "3", "--repeats", "1"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "k,edges,vertices,dijkstra_calls,wall_ns");
  CHECK(row.starts_with("2,4,4,"));
  CHECK(std::stoul(row.substr(6)) <= 8);

  const auto single = dir.write("single.psp", "psp 2 1\ne 0 1 1 3\n");
  const auto r1 = run({"bench", single, "--source", "0", "--target", "1", "--repeats", "2"});
  CHECK(r1.out.find("\n1,1,2,2,") != std::string::npos);

  // Calls grow linearly with the oracle's k along the gadget family.
  for (std::size_t b = 1; b <= 5; ++b) {
    const auto rb = run({"bench", "--gadget-chain", std::to_string(b)});
    REQUIRE(rb.code == 0);
    const std::string data = rb.out.substr(rb.out.find('\n') + 1);
    const std::size_t k = std::stoul(data);
    const std::size_t calls = std::stoul(data.substr(data.find(',', data.find(',', data.find(',') + 1) + 1) + 1));
    CHECK(k == testing::gadget_chain_oracle_k(b));
    CHECK(calls <= 4 * k);
    CHECK(calls >= 2 * k - 2);
  }

  CHECK(run({"bench", "--random", "--vertices", "5", "--edges", "12", "--seed", "3", "--source",
             "0", "--target", "4"}).code != 2);
  CHECK(run({"bench", "--source", "0"}).code == 2);
}

TEST_CASE("export-plot") {
  TempDir dir;
  const auto graph = dir.write("diamond.psp", kDiamond);
  REQUIRE(run({"build", graph, "--source", "0", "--target", "3", "--out", dir.file("env.json")}).code == 0);
  REQUIRE(run({"export-plot", dir.file("env.json"), "--samples", "3", "--out", dir.file("p.csv")}).code == 0);
  CHECK(slurp(dir.file("p.csv")) == "lambda,cost,segment_index\n0,1,0\n0.5,2,0\n0.5,2,1\n1,1,1\n");
  CHECK(run({"export-plot", dir.file("env.json"), "--samples", "1", "--out", dir.file("p.csv")}).code == 2);

  const auto single = dir.write("single.psp", "psp 2 1\ne 0 1 1 3\n");
  REQUIRE(run({"build", single, "--source", "0", "--target", "1", "--out", dir.file("s.json")}).code == 0);
  REQUIRE(run({"export-plot", dir.file("s.json"), "--samples", "5", "--out", dir.file("s.csv")}).code == 0);
  std::istringstream rows(slurp(dir.file("s.csv")));
  std::string line;
  std::getline(rows, line);
  int count = 0;
  while (std::getline(rows, line)) {
    CHECK(line.ends_with(",0"));
    ++count;
  }
  CHECK(count == 5);
}

TEST_CASE("sssp") {
  TempDir dir;
  const auto graph = dir.write("tie.psp", "psp 4 4\ne 0 1 1 2\ne 1 3 1 2\ne 0 2 1 0.5\ne 2 3 1 0.5\n");
  CHECK(run({"sssp", graph, "--source", "0", "--target", "3", "--lambda", "0", "--mode", "min"}).out ==
        "length=2/1 slope=-1/1 path=0,2,3\n");
  CHECK(run({"sssp", graph, "--source", "0", "--target", "3", "--lambda", "0", "--mode", "max"}).out ==
        "length=2/1 slope=2/1 path=0,1,3\n");
  CHECK(run({"sssp", graph, "--source", "0", "--target", "3", "--lambda", "2"}).code == 4);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("file round trip agrees with in-memory queries") {
  TempDir dir;
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(rng);
    const auto gfile = dir.file("g.psp");
    io::write_graph_file(gfile, inst.graph);
    REQUIRE(run({"build", gfile, "--source", std::to_string(inst.source.index), "--target",
                 std::to_string(inst.target.index), "--out", dir.file("e.json")}).code == 0);
    const Rational lambda(static_cast<long>(rng() % 1001), 1000);
    const auto r = run({"query", dir.file("e.json"), "--lambda", lambda.str()});
    REQUIRE(r.code == 0);

    const auto hit = query(build_index(inst.graph, inst.source, inst.target), lambda);
    std::string path;
    for (std::size_t i = 0; i < hit.vertices.size(); ++i) {
      path += (i ? "," : "") + std::to_string(hit.vertices[i].index);
    }
    CHECK(r.out.starts_with("cost=" + hit.cost.str() + " path=" + path + " "));
  }
}
