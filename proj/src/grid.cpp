#include "alp/grid.hpp"

#include <cmath>
#include <numbers>

namespace alp::fields {

Grid::Grid(int dim_, std::array<int, 3> shape_, std::array<double, 3> lengths_)
    : dim(dim_), shape(shape_), lengths(lengths_) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("Grid: dim must be 2 or 3");
  if (dim == 2) {
    shape[2] = 1;
    lengths[2] = 1;
  }
  for (int a = 0; a < dim; ++a) {
    if (shape[a] < 8 || shape[a] % 2 != 0)
      throw std::invalid_argument("Grid: shape entries must be even and >= 8");
    if (!(lengths[a] > 0)) throw std::invalid_argument("Grid: lengths must be positive");
  }
}

double Grid::cell_volume() const {
  double v = spacing(0) * spacing(1);
  if (dim == 3) v *= spacing(2);
  return v;
}

double Grid::wavenumber(int axis, int idx) const {
  return 2.0 * std::numbers::pi / lengths[axis] * freq(axis, idx);
}

double Grid::wrap(int axis, double x) const {
  const double L = lengths[axis];
  double y = std::fmod(x, L);
  if (y < 0) y += L;
  return y;
}

}  // namespace alp::fields
