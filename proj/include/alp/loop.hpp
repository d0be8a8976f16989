#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "alp/spectral.hpp"

namespace alp::fields {

/// Closed polyline of material points in the periodic box (first point is not
/// repeated; the segment from back() to front() closes the loop). Positions
/// are stored wrapped; segment vectors use the minimum-image convention, so
/// the resolution must keep segments short against the box.
struct LoopPolyline {
  std::vector<std::array<double, 3>> pts;

  static LoopPolyline circle(const Grid& g, const std::array<double, 3>& center, double radius,
                             int n_pts, int plane_axis = 2);
  int size() const { return int(pts.size()); }
};

/// Composite-trapezoid line integral of a one-form along the loop, the form
/// evaluated by trigonometric interpolation. For an o-valued one-form
/// (ncomp = adim * dim) returns one value per algebra component.
Eigen::VectorXd loop_integral(const Grid& g, const LoopPolyline& loop,
                              const FourierInterpolant& omega);
Eigen::VectorXd loop_integral(const Grid& g, const LoopPolyline& loop, const Field& omega);

}  // namespace alp::fields
