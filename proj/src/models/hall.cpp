#include "alp/kernels.hpp"
#include "alp/models.hpp"

namespace alp::models {

namespace ops = fields::ops;
using fields::deriv_comp;
using fields::kernels::mul_add;

namespace {

void require_state(const FluidState& st) {
  if (!st.A || !st.n) throw std::invalid_argument("hall: state needs A and n");
  const int64_t nn = st.grid->n();
  for (int64_t i = 0; i < nn; ++i) {
    if (!(st.rho.comp(0)[i] > 0)) throw std::invalid_argument("hall: rho must be positive");
    if (st.n->comp(0)[i] == 0.0) throw std::invalid_argument("hall: n must not vanish");
  }
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

VectorField Hall::fluid_velocity(const FluidState& st) const {
  // u = (m - (a rho / R) A)# / rho
  const double aR = params.a_ion / params.R_hall;
  OneForm mm = st.m;
  ops::axpy_inplace(mm, -aR, ops::mul_scalar(*st.A, st.rho));
  return ops::div_scalar(mm, st.rho);
}

VectorField Hall::electron_velocity(const FluidState& st) const {
  VectorField u = fluid_velocity(st);
  VectorField D = ops::div_two(ops::d_oneform(*st.A));
  const double RA = params.R_hall / params.a_ion;
  ops::axpy_inplace(u, RA, ops::div_scalar(D, st.rho));
  return u;
}

double Hall::hamiltonian(const FluidState& st) const {
  require_state(st);
  VectorField u = fluid_velocity(st);
  double h = 0.5 * ops::integral(ops::pointwise_mul(ops::norm2(u), st.rho));
  h += ops::integral(closure.eps_field(st.rho, st.S, nullptr));
  h += 0.5 * ops::integral(ops::norm2(ops::d_oneform(*st.A)));
  return h;
}

ScalarField Hall::d_rho(const FluidState& st) const {
  VectorField u = fluid_velocity(st);
  ScalarField out = closure.mu_chem_field(st.rho, st.S, nullptr);
  ops::axpy_inplace(out, -0.5, ops::norm2(u));
  ops::axpy_inplace(out, -params.a_ion / params.R_hall, ops::i_u_one(u, *st.A));
  return out;
}

ScalarField Hall::d_S(const FluidState& st) const {
  return closure.temperature_field(st.rho, st.S, nullptr);
}

FluidState Hall::rhs(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  VectorField u = fluid_velocity(st);
  TwoForm B = ops::d_oneform(*st.A);
  VectorField D = ops::div_two(B);
  const double aR = params.a_ion / params.R_hall;
  const double RA = params.R_hall / params.a_ion;

  FluidState out = state_zero_like(st);

  // u_dot + (u.grad)u = -(1/rho)(grad p - (i_D B)#)
  ScalarField p = closure.pressure_field(st.rho, st.S, nullptr);
  OneForm grad_tot = ops::d_scalar(p);
  ops::axpy_inplace(grad_tot, -1.0, ops::i_u_two(D, B));
  VectorField udot = ops::scaled(-1.0, convective(u));
  ops::axpy_inplace(udot, -1.0, ops::div_scalar(grad_tot, st.rho));

  out.rho = ops::scaled(-1.0, ops::div_u_kappa(u, st.rho));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(u, st.S));

  // A_dot = -i_u B - (R/(a rho)) i_D B = -i_v B along the electron velocity
  VectorField v = u;
  ops::axpy_inplace(v, RA, ops::div_scalar(D, st.rho));
  *out.A = ops::scaled(-1.0, ops::i_u_two(v, B));

  // n_dot = -div(n v)
  *out.n = ops::scaled(-1.0, ops::div_u_kappa(v, *st.n));

  // m = rho u^flat + (a rho / R) A
  out.m = ops::mul_scalar(ops::flat(u), out.rho);
  ops::axpy_inplace(out.m, 1.0, ops::mul_scalar(ops::flat(udot), st.rho));
  ops::axpy_inplace(out.m, aR, ops::mul_scalar(*st.A, out.rho));
  ops::axpy_inplace(out.m, aR, ops::mul_scalar(*out.A, st.rho));

  maybe_dealias(out, dealias);
  return out;
}

FluidState Hall::rhs_3d(const FluidState& st) const {
  require_state(st);
  const Grid& g = *st.grid;
  if (g.dim != 3) throw std::invalid_argument("hall: rhs_3d needs a 3D grid");
  VectorField u = fluid_velocity(st);
  VectorField Bvec = ops::curl3(ops::sharp(*st.A));
  VectorField curlB = ops::curl3(Bvec);
  const double aR = params.a_ion / params.R_hall;
  const double RA = params.R_hall / params.a_ion;

  FluidState out = state_zero_like(st);

  ScalarField p = closure.pressure_field(st.rho, st.S, nullptr);
  VectorField force = ops::sharp(ops::d_scalar(p));
  ops::axpy_inplace(force, 1.0, cross(Bvec, curlB));
  VectorField udot = ops::scaled(-1.0, convective(u));
  ops::axpy_inplace(udot, -1.0, ops::div_scalar(force, st.rho));

  out.rho = ops::scaled(-1.0, ops::div_u_kappa(u, st.rho));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(u, st.S));

  // A_dot# = u x B + (R/(a rho)) B x curl B
  VectorField adot = cross(u, Bvec);
  ops::axpy_inplace(adot, RA, ops::div_scalar(cross(Bvec, curlB), st.rho));
  *out.A = ops::flat(adot);

  VectorField v = u;
  ops::axpy_inplace(v, -RA, ops::div_scalar(curlB, st.rho));  // (div B)# = -curl B
  *out.n = ops::scaled(-1.0, ops::div_u_kappa(v, *st.n));

  out.m = ops::mul_scalar(ops::flat(u), out.rho);
  ops::axpy_inplace(out.m, 1.0, ops::mul_scalar(ops::flat(udot), st.rho));
  ops::axpy_inplace(out.m, aR, ops::mul_scalar(*st.A, out.rho));
  ops::axpy_inplace(out.m, aR, ops::mul_scalar(*out.A, st.rho));

  maybe_dealias(out, dealias);
  return out;
}

OneForm Hall::bracket_m_dot(const FluidState& st) const {
  require_state(st);
  VectorField u = fluid_velocity(st);
  OneForm mdot = ops::lie_deriv_oneform(u, st.m);
  ops::axpy_inplace(mdot, 1.0, ops::mul_scalar(st.m, ops::div_vec(u)));
  ops::axpy_inplace(mdot, 1.0, ops::mul_scalar(ops::d_scalar(d_rho(st)), st.rho));
  ops::axpy_inplace(mdot, 1.0, ops::mul_scalar(ops::d_scalar(d_S(st)), st.S));
  return ops::scaled(-1.0, mdot);
}

OneForm Hall::bracket_nm_dot(const FluidState& st) const {
  require_state(st);
  // nm = (n/R) A with delta h / delta nm = -(a rho / n) u - (R/n) D and
  // delta h / delta n = (1/n)[(a rho / R) A(u) + A(D)]; at the reduced
  // constraint n = -a rho the first is the electron velocity.
  OneForm nm = ops::mul_scalar(*st.A, *st.n);
  nm = ops::scaled(1.0 / params.R_hall, nm);
  VectorField u = fluid_velocity(st);
  VectorField D = ops::div_two(ops::d_oneform(*st.A));
  VectorField v = ops::scaled(-params.a_ion, ops::mul_scalar(u, st.rho));
  ops::axpy_inplace(v, -params.R_hall, D);
  v = ops::div_scalar(v, *st.n);
  ScalarField dn = ops::i_u_one(u, *st.A);
  dn = ops::scaled(params.a_ion / params.R_hall, ops::pointwise_mul(dn, st.rho));
  ops::axpy_inplace(dn, 1.0, ops::i_u_one(D, *st.A));
  dn = ops::div_scalar(dn, *st.n);

  OneForm out = ops::lie_deriv_oneform(v, nm);
  ops::axpy_inplace(out, 1.0, ops::mul_scalar(nm, ops::div_vec(v)));
  ops::axpy_inplace(out, 1.0, ops::mul_scalar(ops::d_scalar(dn), *st.n));
  return ops::scaled(-1.0, out);
}

OneForm Hall::stress_m_plus_n_dot(const FluidState& st) const {
  require_state(st);
  VectorField u = fluid_velocity(st);
  TwoForm B = ops::d_oneform(*st.A);
  Field T = outer_tensor(u, ops::mul_scalar(ops::flat(u), st.rho));
  liealg::LieAlgebraSpec u1 = liealg::LieAlgebraSpec::u1();
  ops::axpy_inplace(T, 1.0, bb_tensor(u1, B));
  ScalarField q = closure.pressure_field(st.rho, st.S, nullptr);
  ops::axpy_inplace(q, -0.5, ops::norm2(B));
  add_to_diag(T, q);
  return ops::scaled(-1.0, div_tensor(T));
}

double HallPrimitive::hamiltonian(const OneForm& m, const ScalarField& rho, const ScalarField& S,
                                  const OneForm& nm, const ScalarField& n) const {
  OneForm A = ops::div_scalar(nm, n);
  A = ops::scaled(params.R_hall, A);
  OneForm meff = m;
  ops::axpy_inplace(meff, -params.a_ion / params.R_hall, ops::mul_scalar(A, rho));
  double h = 0.5 * ops::integral(ops::div_scalar(ops::norm2(meff), rho));
  h += ops::integral(closure.eps_field(rho, S, nullptr));
  h += 0.5 * ops::integral(ops::norm2(ops::d_oneform(A)));
  return h;
}

HallPrimitive::Grads HallPrimitive::grads(const OneForm& m, const ScalarField& rho,
                                          const ScalarField& S, const OneForm& nm,
                                          const ScalarField& n) const {
  const Grid& g = m.grid();
  const double a = params.a_ion, R = params.R_hall;
  OneForm A = ops::scaled(R, ops::div_scalar(nm, n));
  OneForm meff = m;
  ops::axpy_inplace(meff, -a / R, ops::mul_scalar(A, rho));
  VectorField u = ops::div_scalar(meff, rho);
  VectorField D = ops::div_two(ops::d_oneform(A));

  Grads out{u, ScalarField(g, 1), ScalarField(g, 1), VectorField(g, g.dim), ScalarField(g, 1)};
  out.d_rho = closure.mu_chem_field(rho, S, nullptr);
  ops::axpy_inplace(out.d_rho, -0.5, ops::norm2(u));
  ops::axpy_inplace(out.d_rho, -a / R, ops::i_u_one(u, A));
  out.d_S = closure.temperature_field(rho, S, nullptr);
  // delta h / delta A = -(a rho / R) u - D, then chain through A = R nm / n
  VectorField dA = ops::scaled(-a / R, ops::mul_scalar(u, rho));
  ops::axpy_inplace(dA, -1.0, D);
  out.d_nm = ops::scaled(R, ops::div_scalar(dA, n));
  ScalarField dn = ops::i_u_one(dA, A);
  out.d_n = ops::scaled(-1.0, ops::div_scalar(dn, n));
  return out;
}

}  // namespace alp::models
