#include "mirfs/grid.hpp"

#include <sstream>

#include "mirfs/errors.hpp"

namespace mirfs {

bool StateGrid::same_as(const StateGrid& other) const {
  return kind == other.kind && points == other.points && weights == other.weights;
}

GridPtr make_trapezoid_grid(double lo, double hi, int G) {
  if (G < 2) throw ConfigError("make_trapezoid_grid: G must be >= 2");
  if (!(lo < hi)) {
    std::ostringstream os;
    os << "make_trapezoid_grid: need lo < hi, got [" << lo << ", " << hi << "]";
    throw ConfigError(os.str());
  }
  auto grid = std::make_shared<StateGrid>();
  grid->kind = GridKind::TrapezoidOnInterval;
  grid->points.resize(G);
  grid->weights.resize(G);
  const double dx = (hi - lo) / (G - 1);
  for (int i = 0; i < G; ++i) {
    grid->points[i] = lo + dx * i;
    grid->weights[i] = dx;
  }
  grid->points.back() = hi;  // avoid accumulated rounding at the right end
  grid->weights.front() = 0.5 * dx;
  grid->weights.back() = 0.5 * dx;
  return grid;
}

GridPtr make_finite_grid(int K) {
  if (K < 1) throw ConfigError("make_finite_grid: K must be >= 1");
  auto grid = std::make_shared<StateGrid>();
  grid->kind = GridKind::Finite;
  grid->points.resize(K);
  grid->weights.assign(K, 1.0);
  for (int i = 0; i < K; ++i) grid->points[i] = i;
  return grid;
}

}  // namespace mirfs
