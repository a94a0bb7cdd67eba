#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "psp/envelope.hpp"

namespace psp::io {

struct PlotRow {
  Rational lambda;
  Rational cost;
  std::size_t segment = 0;
};

/// `samples` evenly spaced lambdas over [0, 1] merged with every breakpoint.
/// A breakpoint yields two rows, one per adjacent segment. Throws
/// PreconditionError for samples < 2.
std::vector<PlotRow> plot_rows(const ShortestPathIndex& index, std::size_t samples);

/// CSV `lambda,cost,segment_index`, numbers to 12 significant digits.
void write_plot_csv(std::ostream& out, const std::vector<PlotRow>& rows);

}  // namespace psp::io
