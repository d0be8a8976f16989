#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace alp::fields {

/// Flat periodic box in 2 or 3 dimensions, uniform grid, z-fastest storage.
struct Grid {
  int dim = 2;
  std::array<int, 3> shape{8, 8, 1};       // shape[2] == 1 in 2D
  std::array<double, 3> lengths{1, 1, 1};  // lengths[2] == 1 in 2D

  Grid() = default;
  Grid(int dim_, std::array<int, 3> shape_, std::array<double, 3> lengths_);

  int64_t n() const { return int64_t(shape[0]) * shape[1] * shape[2]; }
  double cell_volume() const;
  double volume() const { return lengths[0] * lengths[1] * (dim == 3 ? lengths[2] : 1.0); }
  double spacing(int axis) const { return lengths[axis] / shape[axis]; }
  int two_form_comps() const { return dim == 2 ? 1 : 3; }

  int64_t index(int ix, int iy, int iz = 0) const {
    return (int64_t(ix) * shape[1] + iy) * shape[2] + iz;
  }
  /// Signed integer frequency of spectral index along an axis.
  int freq(int axis, int idx) const {
    return idx <= shape[axis] / 2 ? idx : idx - shape[axis];
  }
  double wavenumber(int axis, int idx) const;
  /// Wrap a coordinate into [0, L).
  double wrap(int axis, double x) const;

  bool operator==(const Grid& o) const {
    return dim == o.dim && shape == o.shape && lengths == o.lengths;
  }
};

}  // namespace alp::fields
