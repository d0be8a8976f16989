#pragma once

#include <functional>

#include "alp/loop.hpp"
#include "alp/state.hpp"

namespace alp::sim {

using models::FluidState;

/// Classical 4-stage Runge-Kutta step; throws on non-finite output.
FluidState rk4_step(const FluidState& y, const std::function<FluidState(const FluidState&)>& rhs,
                    double dt);

/// Advance each loop point by one RK4 step through the (frozen) interpolated
/// velocity field; positions are wrapped back into the box.
fields::LoopPolyline advect_loop(const fields::Grid& g, const fields::LoopPolyline& loop,
                                 const fields::FourierInterpolant& vel, double dt);

}  // namespace alp::sim
