#pragma once

#include <functional>

#include "alp/liealg.hpp"

namespace alp::affine {

using liealg::GroupElement;
using liealg::LieAlgebraSpec;
using liealg::Mat;
using liealg::Vec;

/// Right representation of a matrix group G on V = R^{v_dim}.
/// Right means the operator matrices compose as R(gh) = R(h) R(g).
struct Representation {
  const LieAlgebraSpec* alg = nullptr;
  int v_dim = 0;
  std::function<Mat(const GroupElement&)> rho;  // operator matrix on V
  std::vector<Mat> inf;                         // inf[b] = d/dt|_0 rho(exp(t e_b))

  Mat inf_action(const Vec& xi) const;          // v -> v xi
  Mat rho_dual(const GroupElement& g) const;    // rho*_g = rho(g)^T on V* coords
  /// a xi := d/dt|_0 rho*_{exp(-t xi)}(a) = -inf(xi)^T a
  Vec dual_action(const Vec& xi, const Vec& a) const;

  /// G = SO(3), V = R^3, rho_g(v) = g^{-1} v (heavy-top pattern).
  static Representation so3_r3();
  /// G = S^1 as SO(2), V = R^2, rho_g(v) = g^{-1} v.
  static Representation u1_r2();
  /// G = S^1, V = R^2 with the trivial representation (admits linear cocycles).
  static Representation u1_r2_trivial();
};

/// Group one-cocycle c : G -> V* with c(fg) = rho*_{g^{-1}} c(f) + c(g),
/// together with its derivative dc : g -> V* at the identity.
struct Cocycle {
  std::function<Vec(const GroupElement&)> c;
  Mat dc;  // v_dim x g_dim

  Vec dcT(const Vec& w) const { return dc.transpose() * w; }  // V -> g*
  bool is_zero() const { return dc.size() == 0 || dc.isZero(0.0); }

  static Cocycle zero(const Representation& rep);
  /// c(g) = rho*_{g^{-1}}(lambda) - lambda; a cocycle for any lambda.
  static Cocycle coboundary(const Representation& rep, const Vec& lambda);
  /// For abelian G with trivial rho: c(exp(theta e)) = theta * lambda0 extended
  /// linearly over the chart. Only a cocycle when rho* fixes lambda0.
  static Cocycle linear_abelian(const Representation& rep, const Mat& L);
};

struct SemidirectDualPoint {
  Vec mu;  // in g*
  Vec a;   // in V*
};

struct AlgebraElement {
  Vec xi;  // in g
  Vec v;   // in V
};

struct FunctionalGradient {
  Vec d_mu;  // delta f / delta mu, in g
  Vec d_a;   // delta f / delta a, in V
};

/// A functional on s* with an analytic gradient, used by the Jacobi check.
struct Functional {
  std::function<double(const SemidirectDualPoint&)> value;
  std::function<FunctionalGradient(const SemidirectDualPoint&)> grad;
};

struct CocycleReport {
  double max_residual = 0;
  int n_samples = 0;
};

/// Semidirect product s = g (x) V with an affine cotangent action given by a
/// group one-cocycle. Implements the affine Lie-Poisson bracket and equation,
/// momentum map, nonequivariance cocycle, and affine coadjoint orbits.
class AffineSystem {
 public:
  AffineSystem(Representation rep, Cocycle coc);

  const Representation& rep() const { return rep_; }
  const Cocycle& cocycle() const { return coc_; }
  int g_dim() const { return rep_.alg->dim; }
  int v_dim() const { return rep_.v_dim; }

  /// <v <> a, xi> = -<a xi, v>, i.e. (v <> a)_b = <a, inf(e_b) v>.
  Vec diamond(const Vec& v, const Vec& a) const;

  /// ad*_{(xi,v)}(mu,a) = (ad*_xi mu + v <> a, a xi)
  SemidirectDualPoint semidirect_ad_star(const AlgebraElement& xiv,
                                         const SemidirectDualPoint& pt) const;

  /// Max residual of c(fg) - rho*_{g^{-1}} c(f) - c(g) over random pairs.
  CocycleReport check_cocycle(int n_samples, unsigned seed = 7) const;

  /// Sigma((xi,u),(eta,w)) = <dc(eta),u> - <dc(xi),w>
  double sigma_form(const AlgebraElement& xiu, const AlgebraElement& etaw) const;

  double affine_lp_bracket(const SemidirectDualPoint& pt, const FunctionalGradient& gf,
                           const FunctionalGradient& gg) const;

  /// mu_dot = -ad*_{dh/dmu} mu - dh/da <> a + dc^T(dh/da)
  /// a_dot  = -a (dh/dmu) - dc(dh/dmu)
  SemidirectDualPoint affine_lp_rhs(const SemidirectDualPoint& pt,
                                    const FunctionalGradient& gh) const;

  /// J(beta,(u,a)) = (beta + u <> a - dc^T(u), a); beta already left-trivialized.
  SemidirectDualPoint momentum_map(const Vec& beta_body, const Vec& u, const Vec& a) const;

  /// sigma(f,u) = (u <> c(f) - dc^T(u), c(f))
  SemidirectDualPoint nonequivariance_cocycle(const GroupElement& f, const Vec& u) const;

  /// (Ad*_g mu + u <> (rho*_{g^-1} a + c(g)) - dc^T(u), rho*_{g^-1} a + c(g))
  SemidirectDualPoint affine_orbit_point(const GroupElement& g, const Vec& u,
                                         const SemidirectDualPoint& seed) const;

  /// Orbit symplectic form evaluated on the orbit tangents generated by
  /// (xi,u) and (eta,w); equals the bracket of the associated linear functionals.
  double orbit_symplectic_form(const SemidirectDualPoint& pt, const AlgebraElement& gen1,
                               const AlgebraElement& gen2) const;

  /// Cyclic sum {f,{g,h}} + {g,{h,f}} + {h,{f,g}} at pt, gradients of the inner
  /// bracket values by central finite differences (step fd_step).
  double check_affine_jacobi(const SemidirectDualPoint& pt, const Functional& f,
                             const Functional& g, const Functional& h,
                             double fd_step = 1e-5) const;

  /// a(t) = theta_{g(t)^{-1}}(a0) = rho*_{g(t)}(a0) + c(g(t)^{-1})
  std::vector<Vec> advected_evolution(const std::vector<GroupElement>& path, const Vec& a0) const;

  // Semidirect group machinery (used by cocycle identity tests).
  /// (g1,v1)(g2,v2) = (g1 g2, v2 + rho_{g2}(v1))
  std::pair<GroupElement, Vec> group_mul(const std::pair<GroupElement, Vec>& s1,
                                         const std::pair<GroupElement, Vec>& s2) const;
  /// Ad_{(g,v)}(xi,u) = (Ad_g xi, rho_{g^{-1}}(u + inf(xi) v))
  AlgebraElement semidirect_Ad(const GroupElement& g, const Vec& v, const AlgebraElement& xiu) const;
  /// <Ad*_{(g,v)}(mu,a), (xi,u)> = <(mu,a), Ad_{(g,v)}(xi,u)>
  SemidirectDualPoint semidirect_Ad_star(const GroupElement& g, const Vec& v,
                                         const SemidirectDualPoint& pt) const;

 private:
  Representation rep_;
  Cocycle coc_;
};

double pair_point(const SemidirectDualPoint& pt, const AlgebraElement& el);

/// Independent implementation of the ordinary (zero-cocycle) semidirect
/// Lie-Poisson structure, kept separate so the affine code can be checked
/// against it. Index arithmetic is written out directly on purpose.
namespace thm11 {

double lp_bracket(const Representation& rep, const SemidirectDualPoint& pt,
                  const FunctionalGradient& gf, const FunctionalGradient& gg);

SemidirectDualPoint lp_rhs(const Representation& rep, const SemidirectDualPoint& pt,
                           const FunctionalGradient& gh);

SemidirectDualPoint coadjoint_orbit_point(const Representation& rep, const GroupElement& g,
                                          const Vec& u, const SemidirectDualPoint& seed);

}  // namespace thm11

}  // namespace alp::affine
