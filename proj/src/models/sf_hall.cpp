#include "alp/kernels.hpp"
#include "alp/models.hpp"

namespace alp::models {

namespace ops = fields::ops;

namespace {

void require_state(const FluidState& st) {
  if (!st.v_s || !st.A || !st.n)
    throw std::invalid_argument("sf_hall: state needs u (v_s slot), A and n");
  const int64_t nn = st.grid->n();
  for (int64_t i = 0; i < nn; ++i) {
    if (!(st.rho.comp(0)[i] > 0)) throw std::invalid_argument("sf_hall: rho must be positive");
    if (st.n->comp(0)[i] == 0.0) throw std::invalid_argument("sf_hall: n must not vanish");
  }
}

void maybe_dealias(FluidState& t, bool on) {
  if (!on) return;
  t.for_each_field([](Field& f) { fields::dealias_inplace(f); });
}

}  // namespace

VectorField SfHall::superfluid_velocity(const FluidState& st) const {
  require_state(st);
  VectorField vs = *st.v_s;  // the slot carries the advected velocity u
  ops::axpy_inplace(vs, -params.a_ion / params.R_hall, ops::sharp(*st.A));
  return vs;
}

VnSolveResult SfHall::normal_velocity(const FluidState& st) const {
  require_state(st);
  OneForm m_eff = st.m;
  ops::axpy_inplace(m_eff, -params.a_ion / params.R_hall, ops::mul_scalar(*st.A, st.rho));
  return solve_vn(m_eff, st.rho, st.S, superfluid_velocity(st), closure);
}

VectorField SfHall::electron_velocity(const FluidState& st) const {
  VnSolveResult vn = normal_velocity(st);
  VectorField vs = superfluid_velocity(st);
  VectorField r = ops::sub(vs, vn.v_n);
  OneForm p_mom = ops::mul_scalar(ops::flat(r), closure.rho_s_field(st.rho, st.S));
  VectorField D = ops::div_two(ops::d_oneform(*st.A));
  VectorField v = vn.v_n;
  ops::axpy_inplace(v, 1.0, ops::div_scalar(ops::sharp(p_mom), st.rho));
  ops::axpy_inplace(v, params.R_hall / params.a_ion, ops::div_scalar(D, st.rho));
  return v;
}

double SfHall::hamiltonian(const FluidState& st) const {
  require_state(st);
  VectorField v_n = normal_velocity(st).v_n;
  VectorField vs = superfluid_velocity(st);
  ScalarField r2 = ops::norm2(ops::sub(vs, v_n));
  OneForm m_eff = st.m;
  ops::axpy_inplace(m_eff, -params.a_ion / params.R_hall, ops::mul_scalar(*st.A, st.rho));
  double h = -0.5 * ops::integral(ops::pointwise_mul(ops::norm2(v_n), st.rho));
  h += ops::integral(ops::i_u_one(v_n, m_eff));
  h += ops::integral(closure.eps_field(st.rho, st.S, &r2));
  h += 0.5 * ops::integral(ops::norm2(ops::d_oneform(*st.A)));
  return h;
}

ScalarField SfHall::d_rho(const FluidState& st) const {
  VectorField v_n = normal_velocity(st).v_n;
  VectorField vs = superfluid_velocity(st);
  ScalarField r2 = ops::norm2(ops::sub(vs, v_n));
  ScalarField out = closure.mu_chem_field(st.rho, st.S, &r2);
  ops::axpy_inplace(out, -0.5, ops::norm2(v_n));
  ops::axpy_inplace(out, -params.a_ion / params.R_hall, ops::i_u_one(v_n, *st.A));
  return out;
}

FluidState SfHall::rhs(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  const double a = params.a_ion, R = params.R_hall;
  VectorField v_n = normal_velocity(st).v_n;
  VectorField vs = superfluid_velocity(st);
  VectorField r = ops::sub(vs, v_n);
  ScalarField r2 = ops::norm2(r);
  OneForm p_mom = ops::mul_scalar(ops::flat(r), closure.rho_s_field(st.rho, st.S));
  VectorField p_sharp = ops::sharp(p_mom);
  ScalarField mu = closure.mu_chem_field(st.rho, st.S, &r2);
  ScalarField Tf = closure.temperature_field(st.rho, st.S, &r2);
  TwoForm B = ops::d_oneform(*st.A);
  VectorField D = ops::div_two(B);

  FluidState out = state_zero_like(st);

  // advected densities
  VectorField flux = ops::mul_scalar(v_n, st.rho);
  ops::axpy_inplace(flux, 1.0, p_sharp);
  out.rho = ops::scaled(-1.0, ops::div_vec(flux));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(v_n, st.S));

  // A_dot = -i_{v_n} B - (1/rho) i_{p#} B - (R/(a rho)) i_D B
  VectorField v_el = v_n;
  ops::axpy_inplace(v_el, 1.0, ops::div_scalar(p_sharp, st.rho));
  ops::axpy_inplace(v_el, R / a, ops::div_scalar(D, st.rho));
  *out.A = ops::scaled(-1.0, ops::i_u_two(v_el, B));

  // n_dot = -div(n v_el)
  *out.n = ops::scaled(-1.0, ops::div_u_kappa(v_el, *st.n));

  // v_s_dot = -grad(g(v_s,v_n) + mu - |v_n|^2/2)
  //           + ((a/(R rho)) i_{p#} B + (1/rho) i_D B - i_{v_n} d v_s^flat)#
  ScalarField pot = ops::i_u_one(v_n, ops::flat(vs));
  ops::axpy_inplace(pot, 1.0, mu);
  ops::axpy_inplace(pot, -0.5, ops::norm2(v_n));
  VectorField vsdot = ops::scaled(-1.0, ops::sharp(ops::d_scalar(pot)));
  ops::axpy_inplace(vsdot, a / R, ops::div_scalar(ops::i_u_two(p_sharp, B), st.rho));
  ops::axpy_inplace(vsdot, 1.0, ops::div_scalar(ops::i_u_two(D, B), st.rho));
  ops::axpy_inplace(vsdot, -1.0, ops::sharp(ops::i_u_two(v_n, ops::d_oneform(ops::flat(vs)))));

  // the state carries u = v_s + (a/R) A#
  *out.v_s = vsdot;
  ops::axpy_inplace(*out.v_s, a / R, ops::sharp(*out.A));

  // m_dot from the affine Lie-Poisson block for (m, rho, S, u):
  // -L_{v_n} m - (div v_n) m - rho d nu - S dT - (div p#) u^flat + p# . i_(du^flat)
  ScalarField nu = mu;
  ops::axpy_inplace(nu, -0.5, ops::norm2(v_n));
  ops::axpy_inplace(nu, -a / R, ops::i_u_one(v_n, *st.A));
  OneForm acc = ops::lie_deriv_oneform(v_n, st.m);
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(st.m, ops::div_vec(v_n)));
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::d_scalar(nu), st.rho));
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::d_scalar(Tf), st.S));
  ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::flat(*st.v_s), ops::div_vec(p_sharp)));
  ops::axpy_inplace(acc, 1.0, ops::i_u_two(p_sharp, ops::d_oneform(ops::flat(*st.v_s))));
  out.m = ops::scaled(-1.0, acc);

  maybe_dealias(out, dealias);
  return out;
}

OneForm SfHall::stress_residual_modulo(const FluidState& st) const {
  require_state(st);
  const double a = params.a_ion, R = params.R_hall;
  FluidState t = rhs(st);
  // nm = (n/R) A, nm_dot = (n_dot A + n A_dot)/R
  OneForm nm_dot = ops::mul_scalar(*st.A, *t.n);
  ops::axpy_inplace(nm_dot, 1.0, ops::mul_scalar(*t.A, *st.n));
  nm_dot = ops::scaled(1.0 / R, nm_dot);

  VectorField v_n = normal_velocity(st).v_n;
  VectorField vs = superfluid_velocity(st);
  VectorField r = ops::sub(vs, v_n);
  ScalarField r2 = ops::norm2(r);
  OneForm p_mom = ops::mul_scalar(ops::flat(r), closure.rho_s_field(st.rho, st.S));
  TwoForm B = ops::d_oneform(*st.A);

  // T_known = v_n (x) (rho v_n^flat + p) + B.B + q delta
  OneForm rvp = ops::mul_scalar(ops::flat(v_n), st.rho);
  ops::axpy_inplace(rvp, 1.0, p_mom);
  Field T = outer_tensor(v_n, rvp);
  liealg::LieAlgebraSpec u1 = liealg::LieAlgebraSpec::u1();
  ops::axpy_inplace(T, 1.0, bb_tensor(u1, B));
  ScalarField q = closure.pressure_field(st.rho, st.S, &r2);
  ops::axpy_inplace(q, -0.5, ops::norm2(B));
  add_to_diag(T, q);

  OneForm resid = t.m;
  ops::axpy_inplace(resid, 1.0, nm_dot);
  ops::axpy_inplace(resid, 1.0, div_tensor(T));
  return resid;
}

OneForm SfHall::stress_residual_with_candidate(const FluidState& st,
                                               const VectorField& cand) const {
  VectorField v_n = normal_velocity(st).v_n;
  VectorField vs = superfluid_velocity(st);
  VectorField r = ops::sub(vs, v_n);
  OneForm p_mom = ops::mul_scalar(ops::flat(r), closure.rho_s_field(st.rho, st.S));
  OneForm resid = stress_residual_modulo(st);
  ops::axpy_inplace(resid, 1.0, div_tensor(outer_tensor(ops::sharp(p_mom), ops::flat(cand))));
  return resid;
}

double SfHallPrimitive::hamiltonian(const OneForm& m, const ScalarField& rho, const ScalarField& S,
                                    const VectorField& u, const OneForm& nm,
                                    const ScalarField& n) const {
  const double a = params.a_ion, R = params.R_hall;
  OneForm A = ops::scaled(R, ops::div_scalar(nm, n));
  VectorField vs = u;
  ops::axpy_inplace(vs, -a / R, ops::sharp(A));
  OneForm m_eff = m;
  ops::axpy_inplace(m_eff, -a / R, ops::mul_scalar(A, rho));
  VectorField v_n = solve_vn(m_eff, rho, S, vs, closure).v_n;
  ScalarField r2 = ops::norm2(ops::sub(vs, v_n));
  double h = -0.5 * ops::integral(ops::pointwise_mul(ops::norm2(v_n), rho));
  h += ops::integral(ops::i_u_one(v_n, m_eff));
  h += ops::integral(closure.eps_field(rho, S, &r2));
  h += 0.5 * ops::integral(ops::norm2(ops::d_oneform(A)));
  return h;
}

SfHallPrimitive::Grads SfHallPrimitive::grads(const OneForm& m, const ScalarField& rho,
                                              const ScalarField& S, const VectorField& u,
                                              const OneForm& nm, const ScalarField& n) const {
  const Grid& g = m.grid();
  const double a = params.a_ion, R = params.R_hall;
  OneForm A = ops::scaled(R, ops::div_scalar(nm, n));
  VectorField vs = u;
  ops::axpy_inplace(vs, -a / R, ops::sharp(A));
  OneForm m_eff = m;
  ops::axpy_inplace(m_eff, -a / R, ops::mul_scalar(A, rho));
  VectorField v_n = solve_vn(m_eff, rho, S, vs, closure).v_n;
  VectorField r = ops::sub(vs, v_n);
  ScalarField r2 = ops::norm2(r);
  OneForm p_mom = ops::mul_scalar(ops::flat(r), closure.rho_s_field(rho, S));
  VectorField D = ops::div_two(ops::d_oneform(A));

  Grads out{v_n, ScalarField(g, 1), ScalarField(g, 1), OneForm(g, g.dim), VectorField(g, g.dim),
            ScalarField(g, 1)};
  out.d_rho = closure.mu_chem_field(rho, S, &r2);
  ops::axpy_inplace(out.d_rho, -0.5, ops::norm2(v_n));
  ops::axpy_inplace(out.d_rho, -a / R, ops::i_u_one(v_n, A));
  out.d_S = closure.temperature_field(rho, S, &r2);
  out.d_u = p_mom;
  // delta h / delta A = -(a rho/R) v_n - (a/R) p# - D, chained through A = R nm / n
  VectorField dA = ops::scaled(-a / R, ops::mul_scalar(v_n, rho));
  ops::axpy_inplace(dA, -a / R, ops::sharp(p_mom));
  ops::axpy_inplace(dA, -1.0, D);
  out.d_nm = ops::scaled(R, ops::div_scalar(dA, n));
  ScalarField dn = ops::i_u_one(dA, A);
  out.d_n = ops::scaled(-1.0, ops::div_scalar(dn, n));
  return out;
}

}  // namespace alp::models
