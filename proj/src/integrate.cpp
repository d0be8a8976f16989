#include "alp/integrate.hpp"

#include <stdexcept>

namespace alp::sim {

FluidState rk4_step(const FluidState& y, const std::function<FluidState(const FluidState&)>& rhs,
                    double dt) {
  FluidState k1 = rhs(y);
  FluidState y2 = y;
  models::state_axpy(y2, 0.5 * dt, k1);
  FluidState k2 = rhs(y2);
  FluidState y3 = y;
  models::state_axpy(y3, 0.5 * dt, k2);
  FluidState k3 = rhs(y3);
  FluidState y4 = y;
  models::state_axpy(y4, dt, k3);
  FluidState k4 = rhs(y4);
  FluidState out = y;
  models::state_axpy(out, dt / 6.0, k1);
  models::state_axpy(out, dt / 3.0, k2);
  models::state_axpy(out, dt / 3.0, k3);
  models::state_axpy(out, dt / 6.0, k4);
  if (!models::state_all_finite(out)) throw std::runtime_error("rk4_step: non-finite state");
  return out;
}

fields::LoopPolyline advect_loop(const fields::Grid& g, const fields::LoopPolyline& loop,
                                 const fields::FourierInterpolant& vel, double dt) {
  fields::LoopPolyline out = loop;
  const int d = g.dim;
  double v[3], k1[3], k2[3], k3[3], k4[3], p[3];
  for (auto& pt : out.pts) {
    auto eval_at = [&](const double* x, double* kv) {
      vel.eval(x, v);
      for (int i = 0; i < d; ++i) kv[i] = v[i];
    };
    eval_at(pt.data(), k1);
    for (int i = 0; i < 3; ++i) p[i] = pt[i];
    for (int i = 0; i < d; ++i) p[i] = pt[i] + 0.5 * dt * k1[i];
    eval_at(p, k2);
    for (int i = 0; i < d; ++i) p[i] = pt[i] + 0.5 * dt * k2[i];
    eval_at(p, k3);
    for (int i = 0; i < d; ++i) p[i] = pt[i] + dt * k3[i];
    eval_at(p, k4);
    for (int i = 0; i < d; ++i) {
      pt[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
      if (!std::isfinite(pt[i])) throw std::runtime_error("advect_loop: non-finite position");
      pt[i] = g.wrap(i, pt[i]);
    }
  }
  return out;
}

}  // namespace alp::sim
