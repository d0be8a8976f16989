#include "alp/loop.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace alp::fields {

LoopPolyline LoopPolyline::circle(const Grid& g, const std::array<double, 3>& center,
                                  double radius, int n_pts, int plane_axis) {
  if (n_pts < 16) throw std::invalid_argument("LoopPolyline: resolution must be >= 16");
  LoopPolyline l;
  l.pts.resize(n_pts);
  const int a1 = (plane_axis + 1) % 3 < g.dim ? (plane_axis + 1) % 3 : 0;
  const int a2 = (plane_axis + 2) % 3 < g.dim ? (plane_axis + 2) % 3 : 1;
  for (int m = 0; m < n_pts; ++m) {
    const double th = 2.0 * std::numbers::pi * m / n_pts;
    std::array<double, 3> p = center;
    p[a1] += radius * std::cos(th);
    p[a2] += radius * std::sin(th);
    for (int ax = 0; ax < g.dim; ++ax) p[ax] = g.wrap(ax, p[ax]);
    for (int ax = g.dim; ax < 3; ++ax) p[ax] = 0;
    l.pts[m] = p;
  }
  return l;
}

Eigen::VectorXd loop_integral(const Grid& g, const LoopPolyline& loop,
                              const FourierInterpolant& omega) {
  const int d = g.dim;
  if (omega.ncomp() % d != 0) throw std::invalid_argument("loop_integral: bad form components");
  const int adim = omega.ncomp() / d;
  const int m = loop.size();
  if (m < 16) throw std::invalid_argument("loop_integral: resolution must be >= 16");
  std::vector<double> vals(size_t(m) * omega.ncomp());
  for (int p = 0; p < m; ++p) {
    omega.eval(loop.pts[p].data(), vals.data() + size_t(p) * omega.ncomp());
    // degenerate-loop guard: repeated consecutive points
    const auto& a = loop.pts[p];
    const auto& b = loop.pts[(p + 1) % m];
    double dist2 = 0;
    for (int ax = 0; ax < d; ++ax) {
      double dx = b[ax] - a[ax];
      const double L = g.lengths[ax];
      dx -= L * std::round(dx / L);
      dist2 += dx * dx;
    }
    if (dist2 == 0.0) throw std::invalid_argument("loop_integral: degenerate loop");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(adim);
  for (int p = 0; p < m; ++p) {
    const int q = (p + 1) % m;
    std::array<double, 3> seg{0, 0, 0};
    for (int ax = 0; ax < d; ++ax) {
      double dx = loop.pts[q][ax] - loop.pts[p][ax];
      const double L = g.lengths[ax];
      dx -= L * std::round(dx / L);  // minimum image
      seg[ax] = dx;
    }
    for (int a = 0; a < adim; ++a) {
      double contrib = 0;
      for (int i = 0; i < d; ++i)
        contrib += 0.5 *
                   (vals[size_t(p) * omega.ncomp() + a * d + i] +
                    vals[size_t(q) * omega.ncomp() + a * d + i]) *
                   seg[i];
      out[a] += contrib;
    }
  }
  return out;
}

Eigen::VectorXd loop_integral(const Grid& g, const LoopPolyline& loop, const Field& omega) {
  return loop_integral(g, loop, FourierInterpolant(omega));
}

}  // namespace alp::fields
