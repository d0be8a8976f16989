#include "alp/kernels.hpp"
#include "alp/models.hpp"

namespace alp::models {

namespace ops = fields::ops;
using fields::deriv_comp;
using fields::kernels::axpy;
using fields::kernels::copy;
using fields::kernels::mul;
using fields::kernels::mul_add;
using fields::lie_idx;

namespace {

void require_cf(const FluidState& st) {
  if (!st.kappa || !st.gamma)
    throw std::invalid_argument("complex-fluid operation requires kappa and gamma");
}

/// i_u B per algebra component for an o-valued two-form.
fields::LieOneForm i_u_lie_two(const VectorField& u, const LieTwoForm& B, int adim) {
  const Grid& g = u.grid();
  const int n2 = g.two_form_comps();
  fields::LieOneForm out(g, adim * g.dim);
  TwoForm Ba(g, n2);
  for (int a = 0; a < adim; ++a) {
    for (int c = 0; c < n2; ++c) copy(Ba.comp(c), B.comp(a * n2 + c), g.n());
    OneForm ia = ops::i_u_two(u, Ba);
    for (int i = 0; i < g.dim; ++i) copy(out.comp(lie_idx(g.dim, a, i)), ia.comp(i), g.n());
  }
  return out;
}

/// ad_u v = -[u,v]_JL = (v.grad)u - (u.grad)v, the algebra bracket of X(D).
VectorField vector_algebra_bracket(const VectorField& u, const VectorField& v) {
  const Grid& g = u.grid();
  VectorField out(g, g.dim);
  std::vector<double> tmp(g.n());
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      deriv_comp(g, u.comp(i), tmp.data(), j);  // d_j u^i
      mul_add(out.comp(i), v.comp(j), tmp.data(), g.n());
      deriv_comp(g, v.comp(i), tmp.data(), j);
      fields::kernels::mul_sub(out.comp(i), u.comp(j), tmp.data(), g.n());
    }
  return out;
}

/// d nu . v for o-valued nu: (d nu . v)^a = v^j d_j nu^a.
LieFunc dnu_dot_v(const LieFunc& nu, const VectorField& v) {
  const Grid& g = nu.grid();
  LieFunc out(g, nu.ncomp());
  std::vector<double> tmp(g.n());
  for (int a = 0; a < nu.ncomp(); ++a)
    for (int j = 0; j < g.dim; ++j) {
      deriv_comp(g, nu.comp(a), tmp.data(), j);
      mul_add(out.comp(a), v.comp(j), tmp.data(), g.n());
    }
  return out;
}

}  // namespace

FluidState generic_rhs(const FluidState& st, const CFGrads& g) {
  require_cf(st);
  const Grid& gr = *st.grid;
  const LieAlgebraSpec& alg = *st.alg;
  const VectorField& u = g.d_m;
  const LieFunc& nu = g.d_kappa;
  const DualLieVec& w = g.d_gamma;
  const fields::LieOneForm& gamma = *st.gamma;

  FluidState out = state_zero_like(st);

  // m equation
  OneForm mdot = ops::lie_deriv_oneform(u, st.m);
  ScalarField divu = ops::div_vec(u);
  OneForm t = ops::mul_scalar(st.m, divu);
  ops::axpy_inplace(mdot, 1.0, t);
  ops::axpy_inplace(mdot, 1.0, ops::kappa_dot_dnu(*st.kappa, nu));
  ops::axpy_inplace(mdot, 1.0, ops::mul_scalar(ops::d_scalar(g.d_rho), st.rho));
  ops::axpy_inplace(mdot, 1.0, ops::mul_scalar(ops::d_scalar(g.d_S), st.S));
  ops::axpy_inplace(mdot, 1.0, ops::diamond1(alg, w, gamma));
  out.m = ops::scaled(-1.0, mdot);

  // kappa equation
  LieFunc kdot = ops::ad_star_ptwise(alg, nu, *st.kappa);
  ops::axpy_inplace(kdot, 1.0, ops::div_u_kappa(u, *st.kappa));
  ops::axpy_inplace(kdot, 1.0, ops::covariant_div_vec(alg, gamma, w));
  *out.kappa = ops::scaled(-1.0, kdot);

  // advected densities
  out.rho = ops::scaled(-1.0, ops::div_u_kappa(u, st.rho));
  out.S = ops::scaled(-1.0, ops::div_u_kappa(u, st.S));

  // gamma equation
  LieTwoForm B = ops::curvature(alg, gamma);
  fields::LieOneForm gdot = ops::covariant_d_func(alg, gamma, ops::gamma_of_u(gamma, u));
  ops::axpy_inplace(gdot, 1.0, i_u_lie_two(u, B, alg.dim));
  ops::axpy_inplace(gdot, 1.0, ops::covariant_d_func(alg, gamma, nu));
  *out.gamma = ops::scaled(-1.0, gdot);

  return out;
}

FluidState matrix_form_rhs(const FluidState& st, const CFGrads& g) {
  require_cf(st);
  const Grid& gr = *st.grid;
  const LieAlgebraSpec& alg = *st.alg;
  const int d = gr.dim, ad = alg.dim;
  const int64_t n = gr.n();
  const VectorField& u = g.d_m;
  const LieFunc& nu = g.d_kappa;
  const DualLieVec& w = g.d_gamma;
  const fields::LieOneForm& gamma = *st.gamma;

  FluidState out = state_zero_like(st);
  std::vector<double> tmp(n), prod(n);

  // m row: m_k d_i u^k + d_k(m_i u^k) + kappa_b d_i nu^b + rho d_i(dh/drho)
  //        + S d_i(dh/dS) + d_j(gamma^b_i w_b^j) - (d_i gamma^b_j) w_b^j
  for (int i = 0; i < d; ++i) {
    double* acc = out.m.comp(i);
    for (int k = 0; k < d; ++k) {
      deriv_comp(gr, u.comp(k), tmp.data(), i);
      mul_add(acc, st.m.comp(k), tmp.data(), n);
      mul(prod.data(), st.m.comp(i), u.comp(k), n);
      deriv_comp(gr, prod.data(), tmp.data(), k);
      axpy(acc, 1.0, tmp.data(), n);
    }
    for (int b = 0; b < ad; ++b) {
      deriv_comp(gr, nu.comp(b), tmp.data(), i);
      mul_add(acc, st.kappa->comp(b), tmp.data(), n);
    }
    deriv_comp(gr, g.d_rho.comp(0), tmp.data(), i);
    mul_add(acc, st.rho.comp(0), tmp.data(), n);
    deriv_comp(gr, g.d_S.comp(0), tmp.data(), i);
    mul_add(acc, st.S.comp(0), tmp.data(), n);
    for (int b = 0; b < ad; ++b)
      for (int j = 0; j < d; ++j) {
        mul(prod.data(), gamma.comp(lie_idx(d, b, i)), w.comp(lie_idx(d, b, j)), n);
        deriv_comp(gr, prod.data(), tmp.data(), j);
        axpy(acc, 1.0, tmp.data(), n);
        deriv_comp(gr, gamma.comp(lie_idx(d, b, j)), tmp.data(), i);
        mul(prod.data(), tmp.data(), w.comp(lie_idx(d, b, j)), n);
        axpy(acc, -1.0, prod.data(), n);
      }
  }
  // kappa row: d_k(kappa_a u^k) + kappa_c C^c_{ba} nu^b + d_j w^j_a - C^b_{ca} gamma^c_j w^j_b
  for (int a = 0; a < ad; ++a) {
    double* acc = out.kappa->comp(a);
    for (int k = 0; k < d; ++k) {
      mul(prod.data(), st.kappa->comp(a), u.comp(k), n);
      deriv_comp(gr, prod.data(), tmp.data(), k);
      axpy(acc, 1.0, tmp.data(), n);
    }
    for (int c = 0; c < ad; ++c)
      for (int b = 0; b < ad; ++b)
        if (alg.c(c, b, a) != 0.0)
          fields::kernels::mul_scaled_add(acc, alg.c(c, b, a), st.kappa->comp(c), nu.comp(b), n);
    for (int j = 0; j < d; ++j) {
      deriv_comp(gr, w.comp(lie_idx(d, a, j)), tmp.data(), j);
      axpy(acc, 1.0, tmp.data(), n);
    }
    for (int b = 0; b < ad; ++b)
      for (int c = 0; c < ad; ++c)
        if (alg.c(b, c, a) != 0.0)
          for (int j = 0; j < d; ++j) {
            mul(prod.data(), gamma.comp(lie_idx(d, c, j)), w.comp(lie_idx(d, b, j)), n);
            axpy(acc, -alg.c(b, c, a), prod.data(), n);
          }
  }
  // densities: d_k(a u^k)
  for (int k = 0; k < d; ++k) {
    mul(prod.data(), st.rho.comp(0), u.comp(k), n);
    deriv_comp(gr, prod.data(), tmp.data(), k);
    axpy(out.rho.comp(0), 1.0, tmp.data(), n);
    mul(prod.data(), st.S.comp(0), u.comp(k), n);
    deriv_comp(gr, prod.data(), tmp.data(), k);
    axpy(out.S.comp(0), 1.0, tmp.data(), n);
  }
  // gamma row: gamma^a_k d_i u^k + (d_k gamma^a_i) u^k + d_i nu^a + C^a_{cb} gamma^c_i nu^b
  for (int a = 0; a < ad; ++a)
    for (int i = 0; i < d; ++i) {
      double* acc = out.gamma->comp(lie_idx(d, a, i));
      for (int k = 0; k < d; ++k) {
        deriv_comp(gr, u.comp(k), tmp.data(), i);
        mul_add(acc, gamma.comp(lie_idx(d, a, k)), tmp.data(), n);
        deriv_comp(gr, gamma.comp(lie_idx(d, a, i)), tmp.data(), k);
        mul_add(acc, u.comp(k), tmp.data(), n);
      }
      deriv_comp(gr, nu.comp(a), tmp.data(), i);
      axpy(acc, 1.0, tmp.data(), n);
      for (int c = 0; c < ad; ++c)
        for (int b = 0; b < ad; ++b)
          if (alg.c(a, c, b) != 0.0)
            fields::kernels::mul_scaled_add(acc, alg.c(a, c, b), gamma.comp(lie_idx(d, c, i)),
                                            nu.comp(b), n);
    }

  // the operator above is minus the time derivative
  FluidState neg = state_zero_like(st);
  state_axpy(neg, -1.0, out);
  return neg;
}

double alpb_bracket(const FluidState& st, const CFGrads& f, const CFGrads& g) {
  require_cf(st);
  const LieAlgebraSpec& alg = *st.alg;
  double total = 0;
  // m . ad_{uf} ug
  total += ops::inner(st.m, vector_algebra_bracket(f.d_m, g.d_m));
  // kappa . (ad_{nuf} nug + d nuf . ug - d nug . uf)
  LieFunc kterm = ops::bracket_ptwise(alg, f.d_kappa, g.d_kappa);
  ops::axpy_inplace(kterm, 1.0, dnu_dot_v(f.d_kappa, g.d_m));
  ops::axpy_inplace(kterm, -1.0, dnu_dot_v(g.d_kappa, f.d_m));
  total += ops::inner(*st.kappa, kterm);
  // densities
  total += ops::inner(ops::mul_scalar(ops::d_scalar(f.d_rho), st.rho), g.d_m) -
           ops::inner(ops::mul_scalar(ops::d_scalar(g.d_rho), st.rho), f.d_m);
  total += ops::inner(ops::mul_scalar(ops::d_scalar(f.d_S), st.S), g.d_m) -
           ops::inner(ops::mul_scalar(ops::d_scalar(g.d_S), st.S), f.d_m);
  // gamma block: (d^g nuf + L_{uf} gamma) . wg - (d^g nug + L_{ug} gamma) . wf
  auto gamma_term = [&](const CFGrads& p) {
    fields::LieOneForm t = ops::covariant_d_func(alg, *st.gamma, p.d_kappa);
    ops::axpy_inplace(t, 1.0, ops::lie_deriv_lie_oneform(p.d_m, *st.gamma));
    return t;
  };
  total += ops::inner(gamma_term(f), g.d_gamma) - ops::inner(gamma_term(g), f.d_gamma);
  return total;
}

double pair_tangent(const FluidState& tangent, const CFGrads& f) {
  double total = ops::inner(tangent.m, f.d_m);
  total += ops::inner(*tangent.kappa, f.d_kappa);
  total += ops::inner(tangent.rho, f.d_rho);
  total += ops::inner(tangent.S, f.d_S);
  total += ops::inner(*tangent.gamma, f.d_gamma);
  return total;
}

VnSolveResult solve_vn(const OneForm& m_eff, const ScalarField& rho, const ScalarField& S,
                       const VectorField& v_s, const Closure& closure, int max_iter, double tol) {
  const Grid& g = m_eff.grid();
  const int64_t n = g.n();
  ScalarField rs = closure.rho_s_field(rho, S);
  // bijectivity: the map u -> (d2 eps/dr2) u - rho u must be invertible
  double min_gap = std::numeric_limits<double>::infinity();
  for (int64_t i = 0; i < n; ++i)
    min_gap = std::min(min_gap, std::abs(rho.comp(0)[i] - rs.comp(0)[i]));
  if (min_gap < 1e-10)
    throw SolverError("solve_vn: bijectivity violated, |rho - rho_s| too small");

  VectorField v(g, g.dim);  // start from m#/rho
  for (int i = 0; i < g.dim; ++i)
    fields::kernels::recip_mul(v.comp(i), m_eff.comp(i), rho.comp(0), n);

  std::vector<double> hist;
  VnSolveResult res;
  for (int it = 0; it < max_iter; ++it) {
    // F(v) = m# - rho v - rho_s (v_s - v); Newton step: v += F / (rho - rho_s)
    double max_res = 0;
    for (int c = 0; c < g.dim; ++c) {
#pragma omp parallel for schedule(static) reduction(max : max_res)
      for (int64_t i = 0; i < n; ++i) {
        const double F = m_eff.comp(c)[i] - rho.comp(0)[i] * v.comp(c)[i] -
                         rs.comp(0)[i] * (v_s.comp(c)[i] - v.comp(c)[i]);
        v.comp(c)[i] += F / (rho.comp(0)[i] - rs.comp(0)[i]);
        max_res = std::max(max_res, std::abs(F));
      }
    }
    hist.push_back(max_res);
    res.iterations = it + 1;
    // residual after the step
    double post = 0;
    for (int c = 0; c < g.dim; ++c) {
#pragma omp parallel for schedule(static) reduction(max : post)
      for (int64_t i = 0; i < n; ++i) {
        const double F = m_eff.comp(c)[i] - rho.comp(0)[i] * v.comp(c)[i] -
                         rs.comp(0)[i] * (v_s.comp(c)[i] - v.comp(c)[i]);
        post = std::max(post, std::abs(F));
      }
    }
    res.residual = post;
    if (post <= tol) {
      res.v_n = v;
      return res;
    }
  }
  throw SolverError("solve_vn: Newton did not converge", hist);
}

VectorField solve_vn_closed_form(const OneForm& m_eff, const ScalarField& rho,
                                 const ScalarField& S, const VectorField& v_s,
                                 const Closure& closure) {
  const Grid& g = m_eff.grid();
  const int64_t n = g.n();
  ScalarField rs = closure.rho_s_field(rho, S);
  VectorField v(g, g.dim);
  for (int c = 0; c < g.dim; ++c) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i)
      v.comp(c)[i] = (m_eff.comp(c)[i] - rs.comp(0)[i] * v_s.comp(c)[i]) /
                     (rho.comp(0)[i] - rs.comp(0)[i]);
  }
  return v;
}

}  // namespace alp::models
