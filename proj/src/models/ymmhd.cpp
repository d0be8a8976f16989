#include "alp/kernels.hpp"
#include "alp/models.hpp"

namespace alp::models {

namespace ops = fields::ops;
using fields::deriv_comp;
using fields::kernels::mul_add;
using fields::lie_idx;

namespace {

void require_state(const FluidState& st) {
  if (!st.kappa || !st.gamma) throw std::invalid_argument("ymmhd: state needs kappa and gamma");
  const int64_t n = st.grid->n();
  for (int64_t i = 0; i < n; ++i)
    if (!(st.rho.comp(0)[i] > 0)) throw std::invalid_argument("ymmhd: rho must be positive");
}

VectorField velocity(const FluidState& st) { return ops::div_scalar(st.m, st.rho); }

/// (u . grad) u
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

void maybe_dealias(FluidState& t, bool on) {
  if (!on) return;
  t.for_each_field([](Field& f) { fields::dealias_inplace(f); });
}

}  // namespace

double Ymmhd::hamiltonian(const FluidState& st) const {
  require_state(st);
  ScalarField kin = ops::norm2(st.m);
  double h = 0.5 * ops::integral(ops::div_scalar(kin, st.rho));
  h += ops::integral(closure.eps_field(st.rho, st.S, nullptr));
  LieTwoForm B = ops::curvature(*alg, *st.gamma);
  h += 0.5 * ops::integral(ops::norm2_gk(*alg, B, st.grid->two_form_comps()));
  return h;
}

CFGrads Ymmhd::grads(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  CFGrads out{VectorField(g, g.dim), LieFunc(g, alg->dim), ScalarField(g, 1), ScalarField(g, 1),
              DualLieVec(g, alg->dim * g.dim)};
  out.d_m = velocity(st);
  // d_kappa stays zero: the Hamiltonian does not involve Q
  ScalarField mu = closure.mu_chem_field(st.rho, st.S, nullptr);
  ScalarField kin = ops::div_scalar(ops::norm2(st.m), ops::pointwise_mul(st.rho, st.rho));
  ops::axpy_inplace(mu, -0.5, kin);
  out.d_rho = mu;
  out.d_S = closure.temperature_field(st.rho, st.S, nullptr);
  LieTwoForm B = ops::curvature(*alg, *st.gamma);
  LieTwoForm kB = ops::apply_k(*alg, B, g.two_form_comps());
  out.d_gamma = ops::scaled(-1.0, ops::covariant_div_two(*alg, *st.gamma, kB));
  return out;
}

FluidState Ymmhd::rhs(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  VectorField u = velocity(st);
  LieTwoForm B = ops::curvature(*alg, *st.gamma);
  DualLieVec D = ops::covariant_div_two(*alg, *st.gamma, ops::apply_k(*alg, B, g.two_form_comps()));

  FluidState out = state_zero_like(st);

  // u_dot = -(u.grad)u - (1/rho)(grad p + F)#, F_j = <D^i, B_{ji}>
  ScalarField p = closure.pressure_field(st.rho, st.S, nullptr);
  OneForm force = ops::d_scalar(p);
  ops::axpy_inplace(force, 1.0, ops::w_dot_iB(*alg, D, B));
  VectorField udot = ops::scaled(-1.0, convective(u));
  ops::axpy_inplace(udot, -1.0, ops::div_scalar(force, st.rho));

  // rho, S, Q transport
  out.rho = ops::scaled(-1.0, ops::div_u_kappa(u, st.rho));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(u, st.S));
  *out.kappa = ops::scaled(-1.0, ops::div_u_kappa(u, *st.kappa));

  // A_dot = -d^A(A(u)) - i_u B
  fields::LieOneForm adot = ops::covariant_d_func(*alg, *st.gamma, ops::gamma_of_u(*st.gamma, u));
  {
    TwoForm Ba(g, g.two_form_comps());
    for (int a = 0; a < alg->dim; ++a) {
      for (int c = 0; c < g.two_form_comps(); ++c)
        fields::kernels::copy(Ba.comp(c), B.comp(a * g.two_form_comps() + c), g.n());
      OneForm ia = ops::i_u_two(u, Ba);
      for (int i = 0; i < g.dim; ++i)
        fields::kernels::axpy(adot.comp(lie_idx(g.dim, a, i)), 1.0, ia.comp(i), g.n());
    }
  }
  *out.gamma = ops::scaled(-1.0, adot);

  // m_dot = rho_dot u^flat + rho u_dot^flat
  out.m = ops::mul_scalar(ops::flat(u), out.rho);
  ops::axpy_inplace(out.m, 1.0, ops::mul_scalar(ops::flat(udot), st.rho));

  maybe_dealias(out, dealias);
  return out;
}

OneForm Ymmhd::stress_m_dot(const FluidState& st) const {
  require_state(st);
  VectorField u = velocity(st);
  LieTwoForm B = ops::curvature(*alg, *st.gamma);
  Field T = outer_tensor(u, st.m);
  Field bb = bb_tensor(*alg, B);
  ops::axpy_inplace(T, 1.0, bb);
  ScalarField q = closure.pressure_field(st.rho, st.S, nullptr);
  ops::axpy_inplace(q, -0.5, ops::norm2_gk(*alg, B, st.grid->two_form_comps()));
  add_to_diag(T, q);
  return ops::scaled(-1.0, div_tensor(T));
}

FluidState Ymmhd::bracket_rhs(const FluidState& st) const { return generic_rhs(st, grads(st)); }

}  // namespace alp::models
