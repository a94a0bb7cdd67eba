#pragma once

#include <cstddef>
#include <vector>

#include "psp/envelope.hpp"

namespace psp {

struct QueryResult {
  std::size_t segment_position = 0;
  Path path;
  std::vector<VertexId> vertices;
  CostLine line;
  Rational cost;
};

/// Rational comparisons made by one query, domain checks included.
struct QueryStats {
  std::size_t comparisons = 0;
};

/// Shortest path at `lambda` by binary search over the breakpoints. A lambda
/// equal to a breakpoint resolves to the left segment. Throws
/// QueryDomainError for lambda outside [0, 1].
QueryResult query(const ShortestPathIndex& index, const Rational& lambda,
                  QueryStats* stats = nullptr);

/// The k - 1 interior segment boundaries, increasing.
std::vector<Rational> breakpoints(const ShortestPathIndex& index);

}  // namespace psp
