// Abelian magnetohydrodynamics, written directly against the scalar exterior
// calculus (no algebra loops) so it is an independent route from the Ymmhd
// code. State: kappa = charge density q-per-mass times rho, gamma = A with a
// one-dimensional algebra.

#include "alp/kernels.hpp"
#include "alp/models.hpp"

namespace alp::models {

namespace ops = fields::ops;
using fields::deriv_comp;
using fields::kernels::mul_add;

namespace {

void require_state(const FluidState& st) {
  if (!st.kappa || !st.gamma || st.gamma->ncomp() != st.grid->dim)
    throw std::invalid_argument("mhd: state needs abelian kappa and gamma");
  const int64_t n = st.grid->n();
  for (int64_t i = 0; i < n; ++i)
    if (!(st.rho.comp(0)[i] > 0)) throw std::invalid_argument("mhd: rho must be positive");
}

VectorField convective(const VectorField& u) {
  const Grid& g = u.grid();
  VectorField out(g, g.dim);
  std::vector<double> tmp(g.n());
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      deriv_comp(g, u.comp(i), tmp.data(), j);
      mul_add(out.comp(i), u.comp(j), tmp.data(), g.n());
    }
  return out;
}

VectorField cross(const VectorField& a, const VectorField& b) {
  const Grid& g = a.grid();
  VectorField out(g, 3);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    fields::kernels::mul(out.comp(i), a.comp(j), b.comp(k), g.n());
    fields::kernels::mul_sub(out.comp(i), a.comp(k), b.comp(j), g.n());
  }
  return out;
}

void maybe_dealias(FluidState& t, bool on) {
  if (!on) return;
  t.for_each_field([](Field& f) { fields::dealias_inplace(f); });
}

}  // namespace

double Mhd::hamiltonian(const FluidState& st) const {
  require_state(st);
  double h = 0.5 * ops::integral(ops::div_scalar(ops::norm2(st.m), st.rho));
  h += ops::integral(closure.eps_field(st.rho, st.S, nullptr));
  TwoForm B = ops::d_oneform(*st.gamma);
  h += 0.5 * ops::integral(ops::norm2(B));
  return h;
}

FluidState Mhd::rhs(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  VectorField u = ops::div_scalar(st.m, st.rho);
  const OneForm& A = *st.gamma;
  TwoForm B = ops::d_oneform(A);
  VectorField D = ops::div_two(B);

  FluidState out = state_zero_like(st);

  // force one-form F_j = D^i B_{ji} = -(i_D B)_j
  OneForm F = ops::scaled(-1.0, ops::i_u_two(D, B));
  ScalarField p = closure.pressure_field(st.rho, st.S, nullptr);
  OneForm grad_tot = ops::d_scalar(p);
  ops::axpy_inplace(grad_tot, 1.0, F);
  VectorField udot = ops::scaled(-1.0, convective(u));
  ops::axpy_inplace(udot, -1.0, ops::div_scalar(grad_tot, st.rho));

  out.rho = ops::scaled(-1.0, ops::div_u_kappa(u, st.rho));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(u, st.S));
  *out.kappa = ops::scaled(-1.0, ops::div_u_kappa(u, *st.kappa));

  // A_dot = -d(A(u)) - i_u B
  OneForm adot = ops::d_scalar(ops::i_u_one(u, A));
  ops::axpy_inplace(adot, 1.0, ops::i_u_two(u, B));
  *out.gamma = ops::scaled(-1.0, adot);

  out.m = ops::mul_scalar(ops::flat(u), out.rho);
  ops::axpy_inplace(out.m, 1.0, ops::mul_scalar(ops::flat(udot), st.rho));

  maybe_dealias(out, dealias);
  return out;
}

FluidState Mhd::rhs_3d(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  if (g.dim != 3) throw std::invalid_argument("mhd: rhs_3d needs a 3D grid");
  VectorField u = ops::div_scalar(st.m, st.rho);
  VectorField Avec = ops::sharp(*st.gamma);
  VectorField Bvec = ops::curl3(Avec);

  FluidState out = state_zero_like(st);

  ScalarField p = closure.pressure_field(st.rho, st.S, nullptr);
  VectorField force = ops::sharp(ops::d_scalar(p));
  ops::axpy_inplace(force, 1.0, cross(Bvec, ops::curl3(Bvec)));
  VectorField udot = ops::scaled(-1.0, convective(u));
  ops::axpy_inplace(udot, -1.0, ops::div_scalar(force, st.rho));

  out.rho = ops::scaled(-1.0, ops::div_u_kappa(u, st.rho));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(u, st.S));
  *out.kappa = ops::scaled(-1.0, ops::div_u_kappa(u, *st.kappa));

  // A_dot = -grad[g(A,u)] - B x u
  VectorField adot = ops::sharp(ops::d_scalar(ops::i_u_one(u, *st.gamma)));
  ops::axpy_inplace(adot, 1.0, cross(Bvec, u));
  *out.gamma = ops::flat(ops::scaled(-1.0, adot));

  out.m = ops::mul_scalar(ops::flat(u), out.rho);
  ops::axpy_inplace(out.m, 1.0, ops::mul_scalar(ops::flat(udot), st.rho));

  maybe_dealias(out, dealias);
  return out;
}

FluidState Mhd::euler_rhs(const FluidState& st) const {
  require_state(st);
  VectorField u = ops::div_scalar(st.m, st.rho);
  FluidState out = state_zero_like(st);
  ScalarField p = closure.pressure_field(st.rho, st.S, nullptr);
  VectorField udot = ops::scaled(-1.0, convective(u));
  ops::axpy_inplace(udot, -1.0, ops::div_scalar(ops::d_scalar(p), st.rho));
  out.rho = ops::scaled(-1.0, ops::div_u_kappa(u, st.rho));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(u, st.S));
  out.m = ops::mul_scalar(ops::flat(u), out.rho);
  ops::axpy_inplace(out.m, 1.0, ops::mul_scalar(ops::flat(udot), st.rho));
  maybe_dealias(out, dealias);
  return out;
}

}  // namespace alp::models
