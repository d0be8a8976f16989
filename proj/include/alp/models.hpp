#pragma once

#include "alp/closure.hpp"
#include "alp/ops.hpp"
#include "alp/state.hpp"

namespace alp::models {

using fields::DualLieVec;
using fields::LieTwoForm;
using fields::TwoForm;
using liealg::LieAlgebraSpec;

struct ModelParams {
  double a_ion = 1.0;   // ion charge-to-mass ratio
  double R_hall = 1.0;  // Hall scaling parameter
};

/// Functional derivatives of a Hamiltonian on the complex-fluid phase space
/// (m, kappa, rho, S, gamma).
struct CFGrads {
  VectorField d_m;     // delta h / delta m
  LieFunc d_kappa;     // delta h / delta kappa, o-valued
  ScalarField d_rho;
  ScalarField d_S;
  DualLieVec d_gamma;  // delta h / delta gamma, in X(D, o*)
};

/// The complex-fluid equations driven by arbitrary functional derivatives.
/// Requires kappa and gamma engaged on the state; tangent has the same shape.
FluidState generic_rhs(const FluidState& st, const CFGrads& g);
/// Independent coordinate-level implementation of the same Hamiltonian
/// operator (different discrete groupings of the derivative terms).
FluidState matrix_form_rhs(const FluidState& st, const CFGrads& g);
/// Affine Lie-Poisson bracket {f,g} evaluated by quadrature.
double alpb_bracket(const FluidState& st, const CFGrads& f, const CFGrads& g);
/// <tangent, gradient> pairing by quadrature.
double pair_tangent(const FluidState& tangent, const CFGrads& f);

/// Newton solve of m_eff - rho v_n^flat = (d eps/d r)(rho, S, v_s - v_n).
/// For the shipped quadratic-in-r closures the closed form
/// v_n = (m_eff# - rho_s v_s) / (rho - rho_s) is also available.
struct VnSolveResult {
  VectorField v_n;
  double residual = 0;
  int iterations = 0;
};
struct SolverError : std::runtime_error {
  std::vector<double> residual_history;
  explicit SolverError(const std::string& msg, std::vector<double> hist = {})
      : std::runtime_error(msg), residual_history(std::move(hist)) {}
};
VnSolveResult solve_vn(const OneForm& m_eff, const ScalarField& rho, const ScalarField& S,
                       const VectorField& v_s, const Closure& closure, int max_iter = 50,
                       double tol = 1e-12);
VectorField solve_vn_closed_form(const OneForm& m_eff, const ScalarField& rho,
                                 const ScalarField& S, const VectorField& v_s,
                                 const Closure& closure);

// ---- Yang-Mills MHD ----
struct Ymmhd {
  const LieAlgebraSpec* alg;
  Closure closure;
  bool dealias = false;

  double hamiltonian(const FluidState& st) const;
  CFGrads grads(const FluidState& st) const;
  /// Displayed equations in (u, Q, A, rho, S) variables, mapped back to the
  /// momentum representation.
  FluidState rhs(const FluidState& st) const;
  OneForm stress_m_dot(const FluidState& st) const;  // -Div T
  FluidState bracket_rhs(const FluidState& st) const;
};

// ---- abelian MHD (independent of the Ymmhd code path) ----
struct Mhd {
  Closure closure;
  bool dealias = false;

  double hamiltonian(const FluidState& st) const;
  FluidState rhs(const FluidState& st) const;      // dimension-agnostic form version
  FluidState rhs_3d(const FluidState& st) const;   // cross-product version, 3D only
  FluidState euler_rhs(const FluidState& st) const;  // B = 0 compressible adiabatic fluid
};

// ---- Hall MHD ----
/// State carries (m, rho, S, A, n) with m = rho u^flat + (a rho / R) A.
struct Hall {
  Closure closure;
  ModelParams params;
  bool dealias = false;

  VectorField fluid_velocity(const FluidState& st) const;
  VectorField electron_velocity(const FluidState& st) const;
  double hamiltonian(const FluidState& st) const;
  FluidState rhs(const FluidState& st) const;
  FluidState rhs_3d(const FluidState& st) const;
  /// Momentum tendencies of the two coupled Lie-Poisson systems.
  OneForm bracket_m_dot(const FluidState& st) const;
  OneForm bracket_nm_dot(const FluidState& st) const;  // for nm = (n/R) A
  OneForm stress_m_plus_n_dot(const FluidState& st) const;
  /// delta h / delta rho in the reduced variables (enters the Kelvin integrand).
  ScalarField d_rho(const FluidState& st) const;
  ScalarField d_S(const FluidState& st) const;
};

/// Hall Hamiltonian and gradients in the primitive variables (m, rho, S, nm, n)
/// where A = R nm / n; the surface checked against Gateaux finite differences.
struct HallPrimitive {
  Closure closure;
  ModelParams params;
  double hamiltonian(const OneForm& m, const ScalarField& rho, const ScalarField& S,
                     const OneForm& nm, const ScalarField& n) const;
  struct Grads {
    VectorField d_m;
    ScalarField d_rho, d_S;
    VectorField d_nm;
    ScalarField d_n;
  };
  Grads grads(const OneForm& m, const ScalarField& rho, const ScalarField& S, const OneForm& nm,
              const ScalarField& n) const;
};

// ---- two-fluid superfluid ----
struct Superfluid {
  Closure closure;
  bool dealias = false;

  VnSolveResult normal_velocity(const FluidState& st) const;
  double hamiltonian(const FluidState& st) const;
  FluidState rhs(const FluidState& st) const;  // displayed system, m by -Div T
  /// v_s equation in the nabla_{v_s} v_s form of the paper's rewrite.
  VectorField vs_rhs_nabla(const FluidState& st) const;
  VectorField vs_rhs_cross3d(const FluidState& st) const;
  OneForm bracket_m_dot(const FluidState& st) const;
  struct Grads {
    VectorField d_m;
    ScalarField d_rho, d_S;
    OneForm d_vs;
  };
  Grads grads(const FluidState& st) const;
};

// ---- superfluid Yang-Mills MHD ----
struct SfYmmhd {
  const LieAlgebraSpec* alg;
  Closure closure;
  bool dealias = false;

  VnSolveResult normal_velocity(const FluidState& st) const;
  double hamiltonian(const FluidState& st) const;
  FluidState rhs(const FluidState& st) const;
  OneForm stress_m_dot(const FluidState& st) const;
  OneForm bracket_m_dot(const FluidState& st) const;
};

// ---- superfluid Hall MHD ----
/// State: (m, rho, S, u in the v_s slot, A, n); v_s := u - (a/R) A#,
/// m = rho v_n^flat + (a rho / R) A + p.
struct SfHall {
  Closure closure;
  ModelParams params;
  bool dealias = false;

  VectorField superfluid_velocity(const FluidState& st) const;
  VnSolveResult normal_velocity(const FluidState& st) const;
  VectorField electron_velocity(const FluidState& st) const;
  double hamiltonian(const FluidState& st) const;
  FluidState rhs(const FluidState& st) const;
  ScalarField d_rho(const FluidState& st) const;
  /// (m + nm) tendency against -Div of the stress without the ambiguous
  /// middle term; returns the raw residual field.
  OneForm stress_residual_modulo(const FluidState& st) const;
  /// Residual after also subtracting Div(p# (x) cand^flat) for a candidate
  /// completion of the ambiguous term.
  OneForm stress_residual_with_candidate(const FluidState& st, const VectorField& cand) const;
};

/// Hamiltonian/gradients of superfluid Hall MHD in the primitive variables
/// (m, rho, S, u, nm, n).
struct SfHallPrimitive {
  Closure closure;
  ModelParams params;
  double hamiltonian(const OneForm& m, const ScalarField& rho, const ScalarField& S,
                     const VectorField& u, const OneForm& nm, const ScalarField& n) const;
  struct Grads {
    VectorField d_m;
    ScalarField d_rho, d_S;
    OneForm d_u;
    VectorField d_nm;
    ScalarField d_n;
  };
  Grads grads(const OneForm& m, const ScalarField& rho, const ScalarField& S, const VectorField& u,
              const OneForm& nm, const ScalarField& n) const;
};

// ---- stress helpers ----
/// (B.B)^i_j = sum_k k(B_{ik}, B_{jk}); dim*dim components indexed i*dim+j.
Field bb_tensor(const LieAlgebraSpec& s, const LieTwoForm& B);
Field outer_tensor(const VectorField& u, const OneForm& m);  // u^i m_j
void add_to_diag(Field& T, const ScalarField& q);
OneForm div_tensor(const Field& T);  // (Div T)_j = sum_i d_i T^i_j

}  // namespace alp::models
