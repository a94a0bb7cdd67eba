#include "psp/io/plot.hpp"

#include <algorithm>
#include <ostream>

#include "psp/errors.hpp"
#include "psp/query.hpp"

namespace psp::io {

std::vector<PlotRow> plot_rows(const ShortestPathIndex& index, std::size_t samples) {
  if (samples < 2) throw PreconditionError("plot export needs at least 2 samples");

  const std::vector<Rational> cuts = breakpoints(index);
  std::vector<Rational> lambdas = cuts;
  for (std::size_t i = 0; i < samples; ++i) {
    lambdas.push_back(Rational(static_cast<long>(i), static_cast<long>(samples - 1)));
  }
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

  std::vector<PlotRow> rows;
  const auto& seg = index.segments();
  for (const Rational& lambda : lambdas) {
    const QueryResult hit = query(index, lambda);
    rows.push_back({lambda, hit.cost, hit.segment_position});
    if (std::binary_search(cuts.begin(), cuts.end(), lambda)) {
      const std::size_t next = hit.segment_position + 1;
      rows.push_back({lambda, seg[next].line.value(lambda), next});
    }
  }
  return rows;
}

void write_plot_csv(std::ostream& out, const std::vector<PlotRow>& rows) {
  out << "lambda,cost,segment_index\n";
  for (const auto& r : rows) {
    out << r.lambda.to_decimal(12) << ',' << r.cost.to_decimal(12) << ',' << r.segment << '\n';
  }
}

}  // namespace psp::io
