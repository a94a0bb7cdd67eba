#include "psp/io/generators.hpp"

#include <bit>
#include <random>
#include <string>
#include <vector>

#include "psp/errors.hpp"

namespace psp::io {
namespace {

// Rejection sampling keeps the stream identical across standard libraries,
// unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Smallest integer >= q, for q >= 0.
long ceil_nonneg(const Rational& q) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return out.get_si();
}

long floor_nonneg(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return out.get_si();
}

}  // namespace

DualWeightGraph random_graph(const RandomGraphParams& p) {
  if (p.vertices < 2) throw PreconditionError("random graph needs at least 2 vertices");
  const std::size_t pairs = p.vertices * (p.vertices - 1);
  if (p.edges < 1 || p.edges > pairs) {
    throw PreconditionError("edge count " + std::to_string(p.edges) + " outside [1, " +
                            std::to_string(pairs) + "]");
  }
  if (p.min_weight.sign() <= 0 || p.max_weight < p.min_weight) {
    throw PreconditionError("weight range must satisfy 0 < min <= max");
  }
  const long lo = ceil_nonneg(p.min_weight * Rational(100));
  const long hi = floor_nonneg(p.max_weight * Rational(100));
  if (lo > hi) throw PreconditionError("weight range contains no multiple of 0.01");

  std::mt19937_64 rng(p.seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
  all.reserve(pairs);
  for (std::uint32_t u = 0; u < p.vertices; ++u) {
    for (std::uint32_t v = 0; v < p.vertices; ++v) {
      if (u != v) all.emplace_back(u, v);
    }
  }
  // Partial Fisher-Yates: the first `edges` slots become the sample.
  for (std::size_t i = 0; i < p.edges; ++i) {
    std::swap(all[i], all[i + uniform_below(rng, all.size() - i)]);
  }

  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  std::vector<Edge> edges;
  edges.reserve(p.edges);
  for (std::size_t i = 0; i < p.edges; ++i) {
    Rational w0(lo + static_cast<long>(uniform_below(rng, span)), 100);
    Rational w1(lo + static_cast<long>(uniform_below(rng, span)), 100);
    edges.push_back({VertexId{all[i].first}, VertexId{all[i].second}, w0, w1});
  }
  return DualWeightGraph(p.vertices, std::move(edges));
}

DualWeightGraph gadget_chain(std::size_t blocks) {
  if (blocks == 0) throw PreconditionError("gadget chain needs at least one block");
  if (blocks > 1000) throw PreconditionError("gadget chain limited to 1000 blocks");

  mpz_class denom = 1;
  denom <<= std::bit_width(blocks);  // 2^p > blocks
  const Rational step = Rational(1) / Rational::parse(denom.get_str());

  std::vector<Edge> edges;
  const Rational half(1, 2);
  for (std::size_t i = 1; i <= blocks; ++i) {
    const auto entry = static_cast<std::uint32_t>(3 * (i - 1));
    const VertexId in{entry}, upper{entry + 1}, lower{entry + 2}, out{entry + 3};
    mpz_class pow = 1;
    pow <<= (i - 1);
    const Rational slope = Rational::parse(pow.get_str());
    const Rational cross = step * Rational(i);

    // Upper route: (s + 1, 2s + 1). Lower route: slope -s, meeting it at `cross`.
    const CostLine upper_line{slope + Rational(1), slope * Rational(2) + Rational(1)};
    const CostLine lower_line{Rational(1) + slope * (Rational(1) + Rational(2) * cross),
                              Rational(1) + Rational(2) * slope * cross};
    edges.push_back({in, upper, upper_line.c0 * half, upper_line.c1 * half});
    edges.push_back({upper, out, upper_line.c0 * half, upper_line.c1 * half});
    edges.push_back({in, lower, lower_line.c0 * half, lower_line.c1 * half});
    edges.push_back({lower, out, lower_line.c0 * half, lower_line.c1 * half});
  }
  return DualWeightGraph(3 * blocks + 1, std::move(edges));
}

}  // namespace psp::io
