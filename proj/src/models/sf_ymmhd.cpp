#include "alp/kernels.hpp"
#include "alp/models.hpp"

namespace alp::models {

namespace ops = fields::ops;
using fields::lie_idx;

namespace {

void require_state(const FluidState& st) {
  if (!st.v_s || !st.kappa || !st.gamma)
    throw std::invalid_argument("sf_ymmhd: state needs v_s, kappa and gamma");
  const int64_t n = st.grid->n();
  for (int64_t i = 0; i < n; ++i)
    if (!(st.rho.comp(0)[i] > 0)) throw std::invalid_argument("sf_ymmhd: rho must be positive");
}

void maybe_dealias(FluidState& t, bool on) {
  if (!on) return;
  t.for_each_field([](Field& f) { fields::dealias_inplace(f); });
}

}  // namespace

VnSolveResult SfYmmhd::normal_velocity(const FluidState& st) const {
  require_state(st);
  return solve_vn(st.m, st.rho, st.S, *st.v_s, closure);
}

double SfYmmhd::hamiltonian(const FluidState& st) const {
  require_state(st);
  VectorField v_n = normal_velocity(st).v_n;
  ScalarField r2 = ops::norm2(ops::sub(*st.v_s, v_n));
  double h = -0.5 * ops::integral(ops::pointwise_mul(ops::norm2(v_n), st.rho));
  h += ops::integral(ops::i_u_one(v_n, st.m));
  h += ops::integral(closure.eps_field(st.rho, st.S, &r2));
  LieTwoForm B = ops::curvature(*alg, *st.gamma);
  h += 0.5 * ops::integral(ops::norm2_gk(*alg, B, st.grid->two_form_comps()));
  return h;
}

FluidState SfYmmhd::rhs(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  VectorField v_n = normal_velocity(st).v_n;
  VectorField r = ops::sub(*st.v_s, v_n);
  ScalarField r2 = ops::norm2(r);
  OneForm p_mom = ops::mul_scalar(ops::flat(r), closure.rho_s_field(st.rho, st.S));
  ScalarField mu = closure.mu_chem_field(st.rho, st.S, &r2);
  LieTwoForm B = ops::curvature(*alg, *st.gamma);

  FluidState out = state_zero_like(st);

  // m_dot = -Div T, T = v_n (x) m + p# (x) v_s^flat + B.B + q delta
  Field T = outer_tensor(v_n, st.m);
  ops::axpy_inplace(T, 1.0, outer_tensor(ops::sharp(p_mom), ops::flat(*st.v_s)));
  ops::axpy_inplace(T, 1.0, bb_tensor(*alg, B));
  ScalarField q = closure.pressure_field(st.rho, st.S, &r2);
  ops::axpy_inplace(q, -0.5, ops::norm2_gk(*alg, B, g.two_form_comps()));
  add_to_diag(T, q);
  out.m = ops::scaled(-1.0, div_tensor(T));

  VectorField flux = ops::mul_scalar(v_n, st.rho);
  ops::axpy_inplace(flux, 1.0, ops::sharp(p_mom));
  out.rho = ops::scaled(-1.0, ops::div_vec(flux));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(v_n, st.S));
  *out.kappa = ops::scaled(-1.0, ops::div_u_kappa(v_n, *st.kappa));

  ScalarField pot = ops::i_u_one(v_n, ops::flat(*st.v_s));
  ops::axpy_inplace(pot, 1.0, mu);
  ops::axpy_inplace(pot, -0.5, ops::norm2(v_n));
  VectorField vsdot = ops::sharp(ops::d_scalar(pot));
  ops::axpy_inplace(vsdot, 1.0, ops::sharp(ops::i_u_two(v_n, ops::d_oneform(ops::flat(*st.v_s)))));
  *out.v_s = ops::scaled(-1.0, vsdot);

  // A_dot = -d^A(A(v_n)) - i_{v_n} B
  fields::LieOneForm adot = ops::covariant_d_func(*alg, *st.gamma, ops::gamma_of_u(*st.gamma, v_n));
  {
    TwoForm Ba(g, g.two_form_comps());
    for (int a = 0; a < alg->dim; ++a) {
      for (int c = 0; c < g.two_form_comps(); ++c)
        fields::kernels::copy(Ba.comp(c), B.comp(a * g.two_form_comps() + c), g.n());
      OneForm ia = ops::i_u_two(v_n, Ba);
      for (int i = 0; i < g.dim; ++i)
        fields::kernels::axpy(adot.comp(lie_idx(g.dim, a, i)), 1.0, ia.comp(i), g.n());
    }
  }
  *out.gamma = ops::scaled(-1.0, adot);

  maybe_dealias(out, dealias);
  return out;
}

OneForm SfYmmhd::stress_m_dot(const FluidState& st) const {
  FluidState t = rhs(st);
  return t.m;
}

OneForm SfYmmhd::bracket_m_dot(const FluidState& st) const {
  require_state(st);
  VectorField v_n = normal_velocity(st).v_n;
  VectorField r = ops::sub(*st.v_s, v_n);
  ScalarField r2 = ops::norm2(r);
  OneForm p_mom = ops::mul_scalar(ops::flat(r), closure.rho_s_field(st.rho, st.S));
  ScalarField nu = closure.mu_chem_field(st.rho, st.S, &r2);
  ops::axpy_inplace(nu, -0.5, ops::norm2(v_n));
  ScalarField Tfield = closure.temperature_field(st.rho, st.S, &r2);
  LieTwoForm B = ops::curvature(*alg, *st.gamma);
  DualLieVec w =
      ops::scaled(-1.0, ops::covariant_div_two(*alg, *st.gamma,
                                               ops::apply_k(*alg, B, st.grid->two_form_comps())));

  OneForm acc = ops::lie_deriv_oneform(v_n, st.m);
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(st.m, ops::div_vec(v_n)));
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::d_scalar(nu), st.rho));
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::d_scalar(Tfield), st.S));
  // YM-potential diamond with w = delta h / delta A
  ops::axpy_inplace(acc, 1.0, ops::diamond1(*alg, w, *st.gamma));
  // superfluid-velocity diamond with w2 = p#
  VectorField w2 = ops::sharp(p_mom);
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::flat(*st.v_s), ops::div_vec(w2)));
  ops::axpy_inplace(acc, 1.0, ops::i_u_two(w2, ops::d_oneform(ops::flat(*st.v_s))));
  return ops::scaled(-1.0, acc);
}

}  // namespace alp::models
