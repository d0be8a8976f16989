#include "alp/affine.hpp"

#include <random>
#include <stdexcept>

namespace alp::affine {

using liealg::ad_star;
using liealg::Ad_star;
using liealg::group_exp;
using liealg::group_inv;
using liealg::lie_bracket;

Mat Representation::inf_action(const Vec& xi) const {
  Mat m = Mat::Zero(v_dim, v_dim);
  for (int b = 0; b < alg->dim; ++b) m += xi[b] * inf[b];
  return m;
}

Mat Representation::rho_dual(const GroupElement& g) const { return rho(g).transpose(); }

Vec Representation::dual_action(const Vec& xi, const Vec& a) const {
  return -inf_action(xi).transpose() * a;
}

namespace {

Representation inverse_rep(const LieAlgebraSpec& spec, int vdim) {
  Representation r;
  r.alg = &spec;
  r.v_dim = vdim;
  r.rho = [](const GroupElement& g) { return Mat(g.matrix.inverse()); };
  for (int b = 0; b < spec.dim; ++b) r.inf.push_back(-spec.generators[b]);
  return r;
}

// Shipped specs live as function-local statics so Representation instances can
// hold stable pointers.
const LieAlgebraSpec& shipped_so3() {
  static const LieAlgebraSpec s = LieAlgebraSpec::so3();
  return s;
}
const LieAlgebraSpec& shipped_u1() {
  static const LieAlgebraSpec s = LieAlgebraSpec::u1();
  return s;
}

}  // namespace

Representation Representation::so3_r3() { return inverse_rep(shipped_so3(), 3); }

Representation Representation::u1_r2() { return inverse_rep(shipped_u1(), 2); }

Representation Representation::u1_r2_trivial() {
  Representation r;
  r.alg = &shipped_u1();
  r.v_dim = 2;
  r.rho = [](const GroupElement&) { return Mat(Mat::Identity(2, 2)); };
  r.inf = {Mat::Zero(2, 2)};
  return r;
}

Cocycle Cocycle::zero(const Representation& rep) {
  Cocycle c;
  c.dc = Mat::Zero(rep.v_dim, rep.alg->dim);
  c.c = [vdim = rep.v_dim](const GroupElement&) { return Vec(Vec::Zero(vdim)); };
  return c;
}

Cocycle Cocycle::coboundary(const Representation& rep, const Vec& lambda) {
  if (lambda.size() != rep.v_dim) throw std::invalid_argument("coboundary: lambda size mismatch");
  Cocycle c;
  c.c = [rep, lambda](const GroupElement& g) {
    return Vec(rep.rho_dual(group_inv(g)) * lambda - lambda);
  };
  c.dc = Mat(rep.v_dim, rep.alg->dim);
  for (int b = 0; b < rep.alg->dim; ++b) c.dc.col(b) = -rep.inf[b].transpose() * lambda;
  return c;
}

Cocycle Cocycle::linear_abelian(const Representation& rep, const Mat& L) {
  if (L.rows() != rep.v_dim || L.cols() != rep.alg->dim)
    throw std::invalid_argument("linear_abelian: shape mismatch");
  if (rep.alg->dim != 1) throw std::invalid_argument("linear_abelian: needs a 1-d abelian chart");
  Cocycle c;
  // Chart: g = exp(theta J); recover theta from the SO(2) matrix entries when a
  // nontrivial rep matrix is around, else from the stored angle convention
  // rho == identity, where we use atan2 on the group matrix itself.
  c.c = [L](const GroupElement& g) {
    double theta = std::atan2(g.matrix(1, 0), g.matrix(0, 0));
    return Vec(theta * L.col(0));
  };
  c.dc = L;
  return c;
}

AffineSystem::AffineSystem(Representation rep, Cocycle coc)
    : rep_(std::move(rep)), coc_(std::move(coc)) {
  if (coc_.dc.rows() != rep_.v_dim || coc_.dc.cols() != rep_.alg->dim)
    throw std::invalid_argument("AffineSystem: cocycle shape mismatch");
}

Vec AffineSystem::diamond(const Vec& v, const Vec& a) const {
  if (v.size() != v_dim() || a.size() != v_dim())
    throw std::invalid_argument("diamond: dimension mismatch");
  Vec out(g_dim());
  for (int b = 0; b < g_dim(); ++b) out[b] = a.dot(rep_.inf[b] * v);
  return out;
}

SemidirectDualPoint AffineSystem::semidirect_ad_star(const AlgebraElement& xiv,
                                                     const SemidirectDualPoint& pt) const {
  if (xiv.xi.size() != g_dim() || pt.mu.size() != g_dim())
    throw std::invalid_argument("semidirect_ad_star: dimension mismatch");
  return {ad_star(*rep_.alg, xiv.xi, pt.mu) + diamond(xiv.v, pt.a),
          rep_.dual_action(xiv.xi, pt.a)};
}

CocycleReport AffineSystem::check_cocycle(int n_samples, unsigned seed) const {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  auto rand_vec = [&](int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = dist(rng);
    return v;
  };
  CocycleReport rep;
  rep.n_samples = n_samples;
  for (int s = 0; s < n_samples; ++s) {
    GroupElement f = group_exp(*rep_.alg, rand_vec(g_dim()));
    GroupElement g = group_exp(*rep_.alg, rand_vec(g_dim()));
    Vec lhs = coc_.c(liealg::group_mul(f, g));
    Vec rhs = rep_.rho_dual(group_inv(g)) * coc_.c(f) + coc_.c(g);
    rep.max_residual = std::max(rep.max_residual, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return rep;
}

double AffineSystem::sigma_form(const AlgebraElement& xiu, const AlgebraElement& etaw) const {
  return (coc_.dc * etaw.xi).dot(xiu.v) - (coc_.dc * xiu.xi).dot(etaw.v);
}

double pair_point(const SemidirectDualPoint& pt, const AlgebraElement& el) {
  return pt.mu.dot(el.xi) + pt.a.dot(el.v);
}

double AffineSystem::affine_lp_bracket(const SemidirectDualPoint& pt,
                                       const FunctionalGradient& gf,
                                       const FunctionalGradient& gg) const {
  if (gf.d_mu.size() != g_dim() || gg.d_mu.size() != g_dim() || gf.d_a.size() != v_dim() ||
      gg.d_a.size() != v_dim())
    throw std::invalid_argument("affine_lp_bracket: dimension mismatch");
  double lie = pt.mu.dot(lie_bracket(*rep_.alg, gf.d_mu, gg.d_mu));
  double adv = pt.a.dot(rep_.inf_action(gg.d_mu) * gf.d_a - rep_.inf_action(gf.d_mu) * gg.d_a);
  double coc = (coc_.dc * gf.d_mu).dot(gg.d_a) - (coc_.dc * gg.d_mu).dot(gf.d_a);
  return lie + adv + coc;
}

SemidirectDualPoint AffineSystem::affine_lp_rhs(const SemidirectDualPoint& pt,
                                                const FunctionalGradient& gh) const {
  if (gh.d_mu.size() != g_dim() || gh.d_a.size() != v_dim())
    throw std::invalid_argument("affine_lp_rhs: dimension mismatch");
  Vec mu_dot = -ad_star(*rep_.alg, gh.d_mu, pt.mu) - diamond(gh.d_a, pt.a) + coc_.dcT(gh.d_a);
  Vec a_dot = -rep_.dual_action(gh.d_mu, pt.a) - coc_.dc * gh.d_mu;
  return {mu_dot, a_dot};
}

SemidirectDualPoint AffineSystem::momentum_map(const Vec& beta_body, const Vec& u,
                                               const Vec& a) const {
  return {beta_body + diamond(u, a) - coc_.dcT(u), a};
}

SemidirectDualPoint AffineSystem::nonequivariance_cocycle(const GroupElement& f,
                                                          const Vec& u) const {
  Vec cf = coc_.c(f);
  return {diamond(u, cf) - coc_.dcT(u), cf};
}

SemidirectDualPoint AffineSystem::affine_orbit_point(const GroupElement& g, const Vec& u,
                                                     const SemidirectDualPoint& seed) const {
  Vec b = rep_.rho_dual(group_inv(g)) * seed.a + coc_.c(g);
  return {Ad_star(g, seed.mu) + diamond(u, b) - coc_.dcT(u), b};
}

double AffineSystem::orbit_symplectic_form(const SemidirectDualPoint& pt,
                                           const AlgebraElement& gen1,
                                           const AlgebraElement& gen2) const {
  // <lambda,[xi,eta]> + <b, u eta - w xi> - Sigma((xi,u),(eta,w)); the minus
  // sign makes the form agree with the bracket of the linear functionals.
  double lie = pt.mu.dot(lie_bracket(*rep_.alg, gen1.xi, gen2.xi));
  double adv = pt.a.dot(rep_.inf_action(gen2.xi) * gen1.v - rep_.inf_action(gen1.xi) * gen2.v);
  return lie + adv - sigma_form(gen1, gen2);
}

double AffineSystem::check_affine_jacobi(const SemidirectDualPoint& pt, const Functional& f,
                                         const Functional& g, const Functional& h,
                                         double fd_step) const {
  auto inner = [&](const Functional& p, const Functional& q, const SemidirectDualPoint& at) {
    return affine_lp_bracket(at, p.grad(at), q.grad(at));
  };
  auto outer = [&](const Functional& p, const Functional& q, const Functional& r) {
    // {p, {q, r}}(pt) with the gradient of {q,r} by central differences.
    FunctionalGradient gqr{Vec::Zero(g_dim()), Vec::Zero(v_dim())};
    for (int i = 0; i < g_dim(); ++i) {
      SemidirectDualPoint plus = pt, minus = pt;
      plus.mu[i] += fd_step;
      minus.mu[i] -= fd_step;
      gqr.d_mu[i] = (inner(q, r, plus) - inner(q, r, minus)) / (2 * fd_step);
    }
    for (int i = 0; i < v_dim(); ++i) {
      SemidirectDualPoint plus = pt, minus = pt;
      plus.a[i] += fd_step;
      minus.a[i] -= fd_step;
      gqr.d_a[i] = (inner(q, r, plus) - inner(q, r, minus)) / (2 * fd_step);
    }
    return affine_lp_bracket(pt, p.grad(pt), gqr);
  };
  return outer(f, g, h) + outer(g, h, f) + outer(h, f, g);
}

std::vector<Vec> AffineSystem::advected_evolution(const std::vector<GroupElement>& path,
                                                  const Vec& a0) const {
  std::vector<Vec> out;
  out.reserve(path.size());
  for (const auto& g : path)
    out.push_back(rep_.rho_dual(g) * a0 + coc_.c(group_inv(g)));
  return out;
}

std::pair<GroupElement, Vec> AffineSystem::group_mul(const std::pair<GroupElement, Vec>& s1,
                                                     const std::pair<GroupElement, Vec>& s2) const {
  return {liealg::group_mul(s1.first, s2.first), s2.second + rep_.rho(s2.first) * s1.second};
}

AlgebraElement AffineSystem::semidirect_Ad(const GroupElement& g, const Vec& v,
                                           const AlgebraElement& xiu) const {
  Vec adxi = liealg::Ad(g, xiu.xi);
  Vec second = rep_.rho(group_inv(g)) * (xiu.v + rep_.inf_action(xiu.xi) * v);
  return {adxi, second};
}

SemidirectDualPoint AffineSystem::semidirect_Ad_star(const GroupElement& g, const Vec& v,
                                                     const SemidirectDualPoint& pt) const {
  Vec b = rep_.rho_dual(group_inv(g)) * pt.a;
  return {Ad_star(g, pt.mu) + diamond(v, b), b};
}

namespace thm11 {

double lp_bracket(const Representation& rep, const SemidirectDualPoint& pt,
                  const FunctionalGradient& gf, const FunctionalGradient& gg) {
  const auto& spec = *rep.alg;
  const int n = spec.dim, m = rep.v_dim;
  double lie = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) lie += pt.mu[a] * spec.c(a, b, c) * gf.d_mu[b] * gg.d_mu[c];
  double adv = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int b = 0; b < n; ++b)
        adv += pt.a[i] * rep.inf[b](i, j) * (gg.d_mu[b] * gf.d_a[j] - gf.d_mu[b] * gg.d_a[j]);
  return lie + adv;
}

SemidirectDualPoint lp_rhs(const Representation& rep, const SemidirectDualPoint& pt,
                           const FunctionalGradient& gh) {
  const auto& spec = *rep.alg;
  const int n = spec.dim, m = rep.v_dim;
  Vec mu_dot = Vec::Zero(n), a_dot = Vec::Zero(m);
  // -(ad*_{dh} mu)_c = -mu_a C^a_{bc} dh^b
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) mu_dot[c] -= pt.mu[a] * spec.c(a, b, c) * gh.d_mu[b];
  // -(dh/da <> a)_b = -<a, inf(e_b) dh/da>
  for (int b = 0; b < n; ++b)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) mu_dot[b] -= pt.a[i] * rep.inf[b](i, j) * gh.d_a[j];
  // -(a xi)_i = +(inf(xi)^T a)_i
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int b = 0; b < n; ++b) a_dot[i] += rep.inf[b](j, i) * gh.d_mu[b] * pt.a[j];
  return {mu_dot, a_dot};
}

SemidirectDualPoint coadjoint_orbit_point(const Representation& rep, const GroupElement& g,
                                          const Vec& u, const SemidirectDualPoint& seed) {
  Vec b = rep.rho(group_inv(g)).transpose() * seed.a;
  Vec mu = Ad_star(g, seed.mu);
  for (int k = 0; k < rep.alg->dim; ++k) mu[k] += b.dot(rep.inf[k] * u);
  return {mu, b};
}

}  // namespace thm11

}  // namespace alp::affine
