#include "support/instances.hpp"

#include <algorithm>
#include <deque>

namespace psp::testing {
namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::size_t in_range(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(below(rng, hi - lo + 1));
}

VertexId v(std::size_t i) { return VertexId{static_cast<std::uint32_t>(i)}; }

}  // namespace

Rational q(long num, long den) { return Rational(num, den); }
Rational dec(const char* text) { return Rational::parse(text); }

DualWeightGraph diamond(const CostLine& via_a, const CostLine& via_b) {
  const Rational half(1, 2);
  std::vector<Edge> edges{
      {v(0), v(1), via_a.c0 * half, via_a.c1 * half},
      {v(1), v(3), via_a.c0 * half, via_a.c1 * half},
      {v(0), v(2), via_b.c0 * half, via_b.c1 * half},
      {v(2), v(3), via_b.c0 * half, via_b.c1 * half},
  };
  return DualWeightGraph(4, std::move(edges));
}

DualWeightGraph crossing_diamond() { return diamond({q(1), q(3)}, {q(3), q(1)}); }

DualWeightGraph three_routes() {
  const Rational half(1, 2);
  const CostLine lines[] = {{q(1), q(5)}, {q(5, 2), q(5, 2)}, {q(5), q(1)}};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 3; ++i) {
    edges.push_back({v(0), v(i + 1), lines[i].c0 * half, lines[i].c1 * half});
    edges.push_back({v(i + 1), v(4), lines[i].c0 * half, lines[i].c1 * half});
  }
  return DualWeightGraph(5, std::move(edges));
}

DualWeightGraph single_edge(const Rational& w0, const Rational& w1) {
  return DualWeightGraph(2, {{v(0), v(1), w0, w1}});
}

std::vector<bool> reachable_from(const DualWeightGraph& graph, VertexId source) {
  std::vector<bool> seen(graph.vertex_count(), false);
  std::deque<VertexId> frontier{source};
  seen[source.index] = true;
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop_front();
    for (EdgeId id : graph.out_edges(u)) {
      const VertexId w = graph.edge(id).head;
      if (!seen[w.index]) {
        seen[w.index] = true;
        frontier.push_back(w);
      }
    }
  }
  return seen;
}

Instance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options) {
  while (true) {
    const std::size_t n = in_range(rng, options.min_vertices, options.max_vertices);
    const std::size_t m = in_range(rng, options.min_edges, options.max_edges);
    const bool small_integers = below(rng, 2) == 0;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t tail = below(rng, n);
      std::size_t head = below(rng, n);
      if (head == tail && below(rng, 8) != 0) head = (head + 1) % n;
      auto weight = [&] {
        return small_integers ? q(static_cast<long>(1 + below(rng, 4)))
                              : q(static_cast<long>(1 + below(rng, 1000)), 100);
      };
      Rational w0 = weight();
      Rational w1 = weight();
      edges.push_back({v(tail), v(head), w0, w1});
    }
    DualWeightGraph graph(n, std::move(edges));

    const VertexId source = v(below(rng, n));
    const auto seen = reachable_from(graph, source);
    std::vector<VertexId> targets;
    for (std::size_t t = 0; t < n; ++t) {
      if (seen[t] && t != source.index) targets.push_back(v(t));
    }
    if (targets.empty()) continue;
    const VertexId target = targets[below(rng, targets.size())];
    return {std::move(graph), source, target};
  }
}

Instance dominated_instance(std::mt19937_64& rng) {
  const std::size_t n = in_range(rng, 3, 8);
  const std::size_t m = in_range(rng, 1, 16);

  // Planted path over a random vertex order; its total weight stays below 1
  // while every other edge weighs at least 1, so any other simple path (which
  // must use a non-planted edge) costs more at both lambda = 0 and 1.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t length = in_range(rng, 1, n - 1);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < length; ++i) {
    const long denom = static_cast<long>(length) * 100;
    edges.push_back({v(order[i]), v(order[i + 1]), q(static_cast<long>(1 + below(rng, 99)), denom),
                     q(static_cast<long>(1 + below(rng, 99)), denom)});
  }
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({v(below(rng, n)), v(below(rng, n)),
                     q(static_cast<long>(100 + below(rng, 900)), 100),
                     q(static_cast<long>(100 + below(rng, 900)), 100)});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return {DualWeightGraph(n, std::move(edges)), v(order[0]), v(order[length])};
}

}  // namespace psp::testing

#include <set>

#include "psp/io/generators.hpp"
#include "psp/oracle.hpp"

namespace psp::testing {

std::size_t gadget_chain_oracle_k(std::size_t blocks) {
  const DualWeightGraph chain = io::gadget_chain(blocks);
  std::set<Rational> cuts;
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto base = static_cast<std::uint32_t>(3 * b);
    std::vector<Edge> edges;
    for (std::size_t i = 4 * b; i < 4 * b + 4; ++i) {
      Edge e = chain.edges()[i];
      e.tail.index -= base;
      e.head.index -= base;
      edges.push_back(e);
    }
    const DualWeightGraph block(4, std::move(edges));
    const auto env = oracle::envelope_of_lines(oracle::enumerate_paths(block, v(0), v(3)));
    for (std::size_t i = 0; i + 1 < env.size(); ++i) cuts.insert(env[i].hi);
  }
  return cuts.size() + 1;
}

}  // namespace psp::testing
