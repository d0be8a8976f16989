#pragma once

#include <optional>

#include "alp/field.hpp"
#include "alp/liealg.hpp"

namespace alp::models {

using fields::Field;
using fields::Grid;
using fields::LieFunc;
using fields::LieOneForm;
using fields::OneForm;
using fields::ScalarField;
using fields::VectorField;

/// State of any of the shipped fluid models; tangents share the layout.
/// Always present: momentum one-form m, mass density rho, entropy density S.
/// Engaged per model:
///   kappa, gamma     gauge-charge density Q and Yang-Mills potential A
///                    (ymmhd, mhd with the u(1) algebra, sf_ymmhd)
///   v_s              superfluid velocity (superfluid, sf_ymmhd); for sf_hall
///                    this slot carries the advected velocity u, the gauge
///                    covariant combination v_s = u - (a/R) A#
///   A, n             abelian magnetic potential and electron charge density
///                    (hall, sf_hall)
struct FluidState {
  const Grid* grid = nullptr;
  const liealg::LieAlgebraSpec* alg = nullptr;

  OneForm m;
  ScalarField rho;
  ScalarField S;
  std::optional<LieFunc> kappa;
  std::optional<LieOneForm> gamma;
  std::optional<VectorField> v_s;
  std::optional<OneForm> A;
  std::optional<ScalarField> n;

  template <class F>
  void for_each_field(F&& f) {
    f(m);
    f(rho);
    f(S);
    if (kappa) f(*kappa);
    if (gamma) f(*gamma);
    if (v_s) f(*v_s);
    if (A) f(*A);
    if (n) f(*n);
  }
  template <class F>
  void for_each_field(F&& f) const {
    f(m);
    f(rho);
    f(S);
    if (kappa) f(*kappa);
    if (gamma) f(*gamma);
    if (v_s) f(*v_s);
    if (A) f(*A);
    if (n) f(*n);
  }
};

/// y += s * x field by field (same engagement required).
void state_axpy(FluidState& y, double s, const FluidState& x);
FluidState state_zero_like(const FluidState& x);
double state_max_abs_diff(const FluidState& a, const FluidState& b);
bool state_all_finite(const FluidState& a);

}  // namespace alp::models
