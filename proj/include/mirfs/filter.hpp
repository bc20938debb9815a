#pragma once

#include <vector>

#include "mirfs/grid.hpp"

namespace mirfs {

/// Normalized filter on a state grid.  `values` integrate to one against
/// the grid weights; `log_norm` accumulates the log of every normalizing
/// mass absorbed so far, so the raw (unnormalized) object is
/// exp(log_norm) * values.
struct FilterState {
  GridPtr grid;
  std::vector<double> values;
  double log_norm = 0.0;
  int step = -1;
  double last_log_mass = 0.0;  // log mass absorbed by the most recent update

  std::size_t size() const { return values.size(); }
  /// Integral of the normalized values against the grid weights (== 1
  /// up to roundoff for a valid state).
  double mass() const;
};

/// Sup-distance between two filters on the same grid:
/// max_i |h1_i - h2_i|.  Grid mismatch is an error.
double variation_distance(const FilterState& h1, const FilterState& h2);

}  // namespace mirfs
