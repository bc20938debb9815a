#pragma once

#include <memory>
#include <vector>

namespace mirfs {

enum class GridKind { Finite, TrapezoidOnInterval };

/// Discretization of the hidden state space: abscissae plus quadrature
/// weights.  Finite grids label states 0..K-1 with unit weights;
/// continuous grids carry trapezoid weights on an interval.
struct StateGrid {
  std::vector<double> points;
  std::vector<double> weights;
  GridKind kind = GridKind::TrapezoidOnInterval;

  std::size_t size() const { return points.size(); }
  bool same_as(const StateGrid& other) const;
};

using GridPtr = std::shared_ptr<const StateGrid>;

/// G equally spaced points on [lo, hi] with trapezoid weights
/// (half-weight endpoints).  Requires lo < hi and G >= 2.
GridPtr make_trapezoid_grid(double lo, double hi, int G);

/// Finite state grid with labels 0..K-1 and unit weights.
GridPtr make_finite_grid(int K);

}  // namespace mirfs
