#include "alp/kernels.hpp"
#include "alp/models.hpp"

namespace alp::models {

namespace ops = fields::ops;
using fields::deriv_comp;
using fields::kernels::mul_add;

namespace {

void require_state(const FluidState& st) {
  if (!st.v_s) throw std::invalid_argument("superfluid: state needs v_s");
  const int64_t n = st.grid->n();
  for (int64_t i = 0; i < n; ++i)
    if (!(st.rho.comp(0)[i] > 0)) throw std::invalid_argument("superfluid: rho must be positive");
}

VectorField convective(const VectorField& a, const VectorField& b) {
  // (a . grad) b
  const Grid& g = a.grid();
  VectorField out(g, g.dim);
  std::vector<double> tmp(g.n());
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      deriv_comp(g, b.comp(i), tmp.data(), j);
      mul_add(out.comp(i), a.comp(j), tmp.data(), g.n());
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

VnSolveResult Superfluid::normal_velocity(const FluidState& st) const {
  require_state(st);
  return solve_vn(st.m, st.rho, st.S, *st.v_s, closure);
}

double Superfluid::hamiltonian(const FluidState& st) const {
  require_state(st);
  VectorField v_n = normal_velocity(st).v_n;
  ScalarField r2 = ops::norm2(ops::sub(*st.v_s, v_n));
  double h = -0.5 * ops::integral(ops::pointwise_mul(ops::norm2(v_n), st.rho));
  h += ops::integral(ops::i_u_one(v_n, st.m));
  h += ops::integral(closure.eps_field(st.rho, st.S, &r2));
  return h;
}

Superfluid::Grads Superfluid::grads(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  VectorField v_n = normal_velocity(st).v_n;
  VectorField r = ops::sub(*st.v_s, v_n);
  ScalarField r2 = ops::norm2(r);
  Grads out{v_n, ScalarField(g, 1), ScalarField(g, 1), OneForm(g, g.dim)};
  out.d_rho = closure.mu_chem_field(st.rho, st.S, &r2);
  ops::axpy_inplace(out.d_rho, -0.5, ops::norm2(v_n));
  out.d_S = closure.temperature_field(st.rho, st.S, &r2);
  out.d_vs = ops::mul_scalar(ops::flat(r), closure.rho_s_field(st.rho, st.S));
  return out;
}

FluidState Superfluid::rhs(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  VectorField v_n = normal_velocity(st).v_n;
  VectorField r = ops::sub(*st.v_s, v_n);
  ScalarField r2 = ops::norm2(r);
  OneForm p_mom = ops::mul_scalar(ops::flat(r), closure.rho_s_field(st.rho, st.S));
  ScalarField p = closure.pressure_field(st.rho, st.S, &r2);
  ScalarField mu = closure.mu_chem_field(st.rho, st.S, &r2);

  FluidState out = state_zero_like(st);

  // m_dot = -Div T, T = v_n (x) m + p# (x) v_s^flat + p delta
  Field T = outer_tensor(v_n, st.m);
  ops::axpy_inplace(T, 1.0, outer_tensor(ops::sharp(p_mom), ops::flat(*st.v_s)));
  add_to_diag(T, p);
  out.m = ops::scaled(-1.0, div_tensor(T));

  // rho_dot = -div(rho v_n + p#); S_dot = -div(S v_n)
  VectorField flux = ops::mul_scalar(v_n, st.rho);
  ops::axpy_inplace(flux, 1.0, ops::sharp(p_mom));
  out.rho = ops::scaled(-1.0, ops::div_vec(flux));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(v_n, st.S));

  // v_s_dot = -grad(g(v_s,v_n) + mu - |v_n|^2/2) - (i_{v_n} d v_s^flat)#
  ScalarField pot = ops::i_u_one(v_n, ops::flat(*st.v_s));
  ops::axpy_inplace(pot, 1.0, mu);
  ops::axpy_inplace(pot, -0.5, ops::norm2(v_n));
  VectorField vsdot = ops::sharp(ops::d_scalar(pot));
  ops::axpy_inplace(vsdot, 1.0, ops::sharp(ops::i_u_two(v_n, ops::d_oneform(ops::flat(*st.v_s)))));
  *out.v_s = ops::scaled(-1.0, vsdot);

  maybe_dealias(out, dealias);
  return out;
}

VectorField Superfluid::vs_rhs_nabla(const FluidState& st) const {
  require_state(st);
  VectorField v_n = normal_velocity(st).v_n;
  VectorField r = ops::sub(*st.v_s, v_n);
  ScalarField r2 = ops::norm2(r);
  ScalarField mu = closure.mu_chem_field(st.rho, st.S, &r2);
  // -nabla_{v_s} v_s - grad(mu - |v_s - v_n|^2 / 2) + (i_{v_s - v_n} d v_s^flat)#
  VectorField out = ops::scaled(-1.0, convective(*st.v_s, *st.v_s));
  ScalarField pot = mu;
  ops::axpy_inplace(pot, -0.5, r2);
  ops::axpy_inplace(out, -1.0, ops::sharp(ops::d_scalar(pot)));
  ops::axpy_inplace(out, 1.0, ops::sharp(ops::i_u_two(r, ops::d_oneform(ops::flat(*st.v_s)))));
  return out;
}

VectorField Superfluid::vs_rhs_cross3d(const FluidState& st) const {
  require_state(st);
  if (st.grid->dim != 3) throw std::invalid_argument("superfluid: cross form needs 3D");
  VectorField v_n = normal_velocity(st).v_n;
  VectorField r = ops::sub(*st.v_s, v_n);
  ScalarField r2 = ops::norm2(r);
  ScalarField mu = closure.mu_chem_field(st.rho, st.S, &r2);
  VectorField out = ops::scaled(-1.0, convective(*st.v_s, *st.v_s));
  ScalarField pot = mu;
  ops::axpy_inplace(pot, -0.5, r2);
  ops::axpy_inplace(out, -1.0, ops::sharp(ops::d_scalar(pot)));
  // (v_n - v_s) x curl v_s
  VectorField mr = ops::scaled(-1.0, r);
  ops::axpy_inplace(out, 1.0, cross(mr, ops::curl3(*st.v_s)));
  return out;
}

OneForm Superfluid::bracket_m_dot(const FluidState& st) const {
  require_state(st);
  Grads gr = grads(st);
  const VectorField& v_n = gr.d_m;
  OneForm acc = ops::lie_deriv_oneform(v_n, st.m);
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(st.m, ops::div_vec(v_n)));
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::d_scalar(gr.d_rho), st.rho));
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::d_scalar(gr.d_S), st.S));
  VectorField w = ops::sharp(gr.d_vs);
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::flat(*st.v_s), ops::div_vec(w)));
  ops::axpy_inplace(acc, 1.0, ops::i_u_two(w, ops::d_oneform(ops::flat(*st.v_s))));
  return ops::scaled(-1.0, acc);
}

}  // namespace alp::models
