#include "psp/query.hpp"

#include "psp/errors.hpp"

namespace psp {

QueryResult query(const ShortestPathIndex& index, const Rational& lambda, QueryStats* stats) {
  std::size_t comparisons = 2;
  if (lambda.sign() < 0 || lambda > Rational(1)) {
    throw QueryDomainError("lambda " + lambda.str() + " outside [0, 1]");
  }

  // First segment whose hi >= lambda; the last segment's hi is 1, so only the
  // k - 1 interior boundaries need comparing.
  const auto& seg = index.segments();
  std::size_t lo = 0;
  std::size_t count = seg.size() - 1;
  while (count > 0) {
    const std::size_t half = count / 2;
    ++comparisons;
    if (seg[lo + half].hi < lambda) {
      lo += half + 1;
      count -= half + 1;
    } else {
      count = half;
    }
  }
  if (stats) stats->comparisons = comparisons;

  const EnvelopeSegment& hit = seg[lo];
  return {lo, hit.path, hit.vertices, hit.line, hit.line.value(lambda)};
}

std::vector<Rational> breakpoints(const ShortestPathIndex& index) {
  std::vector<Rational> out;
  const auto& seg = index.segments();
  for (std::size_t i = 0; i + 1 < seg.size(); ++i) out.push_back(seg[i].hi);
  return out;
}

}  // namespace psp
