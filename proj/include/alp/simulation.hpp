#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "alp/integrate.hpp"
#include "alp/models.hpp"

namespace alp::sim {

enum class ModelKind { mhd, ymmhd, hall, superfluid, sf_ymmhd, sf_hall };

enum class VelocitySel { fluid_u, normal_vn, electron_v };

std::string to_string(ModelKind k);
std::string to_string(VelocitySel v);
std::optional<ModelKind> model_kind_from(const std::string& s);
std::optional<VelocitySel> velocity_sel_from(const std::string& s);

/// Uniform interface over the shipped models for integration and diagnostics.
/// Owns the grid and order-parameter algebra so states can reference them.
class Model {
 public:
  Model(ModelKind kind, fields::Grid grid, const std::string& algebra_name,
        models::Closure closure, models::ModelParams params, bool dealias);

  ModelKind kind() const { return kind_; }
  const fields::Grid& grid() const { return grid_; }
  const liealg::LieAlgebraSpec& algebra() const { return alg_; }
  const models::Closure& closure() const { return closure_; }
  const models::ModelParams& params() const { return params_; }

  FluidState rhs(const FluidState& st) const;
  double hamiltonian(const FluidState& st) const;
  fields::VectorField velocity(const FluidState& st, VelocitySel sel) const;
  /// The Kelvin circulation one-form (1/rho) m.
  fields::OneForm kelvin_form(const FluidState& st) const;
  /// Right-hand-side one-form of the Kelvin-Noether theorem; models whose
  /// mass density is a momentum variable have no such form here.
  std::optional<fields::OneForm> kelvin_integrand(const FluidState& st) const;
  /// Abelian magnetic / connection potential whose loop integral is monitored.
  std::optional<fields::Field> gamma_form(const FluidState& st) const;
  /// Flat of the superfluid velocity (gamma-circulation of the v_s family).
  std::optional<fields::OneForm> vs_form(const FluidState& st) const;
  /// Flat of the advected velocity u of superfluid Hall MHD.
  std::optional<fields::OneForm> uadv_form(const FluidState& st) const;

  bool has_constraint() const { return kind_ == ModelKind::hall || kind_ == ModelKind::sf_hall; }
  bool has_vs() const {
    return kind_ == ModelKind::superfluid || kind_ == ModelKind::sf_ymmhd ||
           kind_ == ModelKind::sf_hall;
  }
  /// v_s as a vector field (derived for sf_hall).
  fields::VectorField superfluid_velocity(const FluidState& st) const;

 private:
  ModelKind kind_;
  fields::Grid grid_;
  liealg::LieAlgebraSpec alg_;
  models::Closure closure_;
  models::ModelParams params_;
  bool dealias_;

  models::Ymmhd ymmhd_() const;
  models::Mhd mhd_() const;
  models::Hall hall_() const;
  models::Superfluid superfluid_() const;
  models::SfYmmhd sf_ymmhd_() const;
  models::SfHall sf_hall_() const;
};

struct LoopSpec {
  std::array<double, 3> center{0, 0, 0};
  double radius = 0.2;
  int n_pts = 64;
  VelocitySel sel = VelocitySel::fluid_u;
};

struct DiagnosticsRecord {
  double time = 0;
  double hamiltonian = 0;
  double mass = 0;
  double entropy = 0;
  double max_arho_plus_n = 0;          // hall family
  double vorticity_residual = 0;       // superfluid family
  double max_dvs = 0;                  // superfluid family
  struct LoopRecord {
    double circ_u = 0;                 // loop integral of (dh/dm)^flat
    double circ_m_rho = 0;             // loop integral of (1/rho) m
    double kelvin_rhs = 0;             // quadrature of the Kelvin integrand
    double circ_vs = 0;                // loop integral of v_s^flat
    double circ_uadv = 0;              // sf_hall advected velocity
    std::vector<double> circ_gamma;    // per algebra component of A
  };
  std::vector<LoopRecord> loops;
};

DiagnosticsRecord collect_diagnostics(const Model& model, const FluidState& st,
                                      const std::vector<fields::LoopPolyline>& loops,
                                      const std::vector<LoopSpec>& specs, double time);

/// Central-difference d/dt of the (1/rho)m circulation series minus the
/// recorded Kelvin right-hand side, per interior record, per loop.
std::vector<std::vector<double>> kelvin_residual(const std::vector<DiagnosticsRecord>& records);

struct InitSpec {
  unsigned seed = 1;
  int cutoff = 4;          // max |frequency| of the random fields
  double rho0 = 1.0, S0 = 0.2;
  double amp_rho = 0.02, amp_S = 0.02, amp_v = 0.05, amp_gamma = 0.05, amp_vs = 0.05,
         amp_kappa = 0.02;
  bool vs_irrotational = false;
};

struct SimConfig {
  ModelKind kind = ModelKind::mhd;
  int dim = 2;
  std::array<int, 3> shape{32, 32, 1};
  std::array<double, 3> lengths{1, 1, 1};
  std::string algebra = "u1";
  models::Closure closure;
  models::ModelParams params;
  double dt = 1e-3;
  double t_end = 0.1;
  int cadence = 10;  // record every this many steps
  bool dealias = true;
  InitSpec init;
  std::vector<LoopSpec> loops;
  std::string output_dir;
  bool write_snapshots = false;
  int snapshot_every = 0;  // in records; 0 = final only
  int steps_override = -1;
  bool quiet = false;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 3 non-finite, 4 solver failure
  std::string error;
  std::vector<DiagnosticsRecord> records;
  std::optional<FluidState> final_state;
};

/// Band-limited random fields with the given cutoff, deterministic in seed.
fields::Field random_band_limited(const fields::Grid& g, int ncomp, int cutoff, double amp,
                                  std::mt19937_64& rng);
FluidState initial_state(const Model& model, const InitSpec& init);

RunResult run_simulation(const Model& model, const SimConfig& cfg);

/// Advance state and loops together through one RK4 step (loop points move
/// with the stage velocities of their selected field).
void step_with_loops(const Model& model, FluidState& st,
                     std::vector<fields::LoopPolyline>& loops, const std::vector<LoopSpec>& specs,
                     double dt);

std::string diagnostics_csv_header(const Model& model, const std::vector<LoopSpec>& specs);
std::string diagnostics_csv_row(const DiagnosticsRecord& r);

}  // namespace alp::sim
