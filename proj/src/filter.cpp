#include "mirfs/filter.hpp"

#include <cmath>
#include <cstdlib>

#include "mirfs/errors.hpp"

namespace mirfs {

double FilterState::mass() const {
  double m = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) m += grid->weights[i] * values[i];
  return m;
}

double variation_distance(const FilterState& h1, const FilterState& h2) {
  if (!h1.grid || !h2.grid) throw ConfigError("variation_distance: filter without grid");
  if (h1.grid != h2.grid && !h1.grid->same_as(*h2.grid)) {
    throw ConfigError("variation_distance: filters live on different grids");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < h1.values.size(); ++i) {
    d = std::max(d, std::fabs(h1.values[i] - h2.values[i]));
  }
  return d;
}

}  // namespace mirfs
