#include "alp/simulation.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace alp::sim {

namespace ops = fields::ops;
using fields::Field;
using fields::FourierInterpolant;
using fields::Grid;
using fields::LoopPolyline;
using fields::OneForm;
using fields::ScalarField;
using fields::VectorField;

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::mhd: return "mhd";
    case ModelKind::ymmhd: return "ymmhd";
    case ModelKind::hall: return "hall";
    case ModelKind::superfluid: return "superfluid";
    case ModelKind::sf_ymmhd: return "sf-ymmhd";
    case ModelKind::sf_hall: return "sf-hall";
  }
  return "?";
}

std::string to_string(VelocitySel v) {
  switch (v) {
    case VelocitySel::fluid_u: return "u";
    case VelocitySel::normal_vn: return "vn";
    case VelocitySel::electron_v: return "electron";
  }
  return "?";
}

std::optional<ModelKind> model_kind_from(const std::string& s) {
  if (s == "mhd") return ModelKind::mhd;
  if (s == "ymmhd") return ModelKind::ymmhd;
  if (s == "hall") return ModelKind::hall;
  if (s == "superfluid") return ModelKind::superfluid;
  if (s == "sf-ymmhd") return ModelKind::sf_ymmhd;
  if (s == "sf-hall") return ModelKind::sf_hall;
  return std::nullopt;
}

std::optional<VelocitySel> velocity_sel_from(const std::string& s) {
  if (s == "u") return VelocitySel::fluid_u;
  if (s == "vn") return VelocitySel::normal_vn;
  if (s == "electron") return VelocitySel::electron_v;
  return std::nullopt;
}

Model::Model(ModelKind kind, fields::Grid grid, const std::string& algebra_name,
             models::Closure closure, models::ModelParams params, bool dealias)
    : kind_(kind), grid_(grid), closure_(closure), params_(params), dealias_(dealias) {
  if (algebra_name == "u1")
    alg_ = liealg::LieAlgebraSpec::u1();
  else if (algebra_name == "so3")
    alg_ = liealg::LieAlgebraSpec::so3();
  else
    throw std::invalid_argument("Model: unknown algebra '" + algebra_name + "'");
  if ((kind == ModelKind::mhd || kind == ModelKind::hall || kind == ModelKind::sf_hall ||
       kind == ModelKind::superfluid) &&
      alg_.dim != 1)
    throw std::invalid_argument("Model: " + to_string(kind) + " requires the u1 algebra");
}

models::Ymmhd Model::ymmhd_() const { return {&alg_, closure_, dealias_}; }
models::Mhd Model::mhd_() const { return {closure_, dealias_}; }
models::Hall Model::hall_() const { return {closure_, params_, dealias_}; }
models::Superfluid Model::superfluid_() const { return {closure_, dealias_}; }
models::SfYmmhd Model::sf_ymmhd_() const { return {&alg_, closure_, dealias_}; }
models::SfHall Model::sf_hall_() const { return {closure_, params_, dealias_}; }

FluidState Model::rhs(const FluidState& st) const {
  switch (kind_) {
    case ModelKind::mhd: return mhd_().rhs(st);
    case ModelKind::ymmhd: return ymmhd_().rhs(st);
    case ModelKind::hall: return hall_().rhs(st);
    case ModelKind::superfluid: return superfluid_().rhs(st);
    case ModelKind::sf_ymmhd: return sf_ymmhd_().rhs(st);
    case ModelKind::sf_hall: return sf_hall_().rhs(st);
  }
  throw std::logic_error("Model::rhs: bad kind");
}

double Model::hamiltonian(const FluidState& st) const {
  switch (kind_) {
    case ModelKind::mhd: return mhd_().hamiltonian(st);
    case ModelKind::ymmhd: return ymmhd_().hamiltonian(st);
    case ModelKind::hall: return hall_().hamiltonian(st);
    case ModelKind::superfluid: return superfluid_().hamiltonian(st);
    case ModelKind::sf_ymmhd: return sf_ymmhd_().hamiltonian(st);
    case ModelKind::sf_hall: return sf_hall_().hamiltonian(st);
  }
  throw std::logic_error("Model::hamiltonian: bad kind");
}

VectorField Model::velocity(const FluidState& st, VelocitySel sel) const {
  switch (sel) {
    case VelocitySel::fluid_u:
      switch (kind_) {
        case ModelKind::mhd:
        case ModelKind::ymmhd: return ops::div_scalar(st.m, st.rho);
        case ModelKind::hall: return hall_().fluid_velocity(st);
        case ModelKind::superfluid: return superfluid_().normal_velocity(st).v_n;
        case ModelKind::sf_ymmhd: return sf_ymmhd_().normal_velocity(st).v_n;
        case ModelKind::sf_hall: return sf_hall_().normal_velocity(st).v_n;
      }
      break;
    case VelocitySel::normal_vn:
      switch (kind_) {
        case ModelKind::superfluid: return superfluid_().normal_velocity(st).v_n;
        case ModelKind::sf_ymmhd: return sf_ymmhd_().normal_velocity(st).v_n;
        case ModelKind::sf_hall: return sf_hall_().normal_velocity(st).v_n;
        default: return velocity(st, VelocitySel::fluid_u);
      }
    case VelocitySel::electron_v:
      switch (kind_) {
        case ModelKind::hall: return hall_().electron_velocity(st);
        case ModelKind::sf_hall: return sf_hall_().electron_velocity(st);
        default: return velocity(st, VelocitySel::fluid_u);
      }
  }
  throw std::logic_error("Model::velocity: bad selector");
}

Field random_band_limited(const Grid& g, int ncomp, int cutoff, double amp,
                          std::mt19937_64& rng) {
  Field out(g, ncomp);
  std::uniform_real_distribution<double> uphase(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> uamp(0.0, 1.0);
  const int kx_max = std::min(cutoff, g.shape[0] / 2 - 1);
  const int ky_max = std::min(cutoff, g.shape[1] / 2 - 1);
  const int kz_max = g.dim == 3 ? std::min(cutoff, g.shape[2] / 2 - 1) : 0;
  for (int c = 0; c < ncomp; ++c) {
    double* p = out.comp(c);
    for (int kx = -kx_max; kx <= kx_max; ++kx)
      for (int ky = -ky_max; ky <= ky_max; ++ky)
        for (int kz = -kz_max; kz <= kz_max; ++kz) {
          if (kx == 0 && ky == 0 && kz == 0) continue;
          const double a = uamp(rng), ph = uphase(rng);
          const double norm = std::sqrt(double(kx * kx + ky * ky + kz * kz));
          const double w = a / (1.0 + norm * norm);
          const double fx = 2.0 * std::numbers::pi * kx / g.lengths[0];
          const double fy = 2.0 * std::numbers::pi * ky / g.lengths[1];
          const double fz = g.dim == 3 ? 2.0 * std::numbers::pi * kz / g.lengths[2] : 0;
          for (int ix = 0; ix < g.shape[0]; ++ix)
            for (int iy = 0; iy < g.shape[1]; ++iy)
              for (int iz = 0; iz < g.shape[2]; ++iz) {
                const double x = ix * g.spacing(0), y = iy * g.spacing(1),
                             z = g.dim == 3 ? iz * g.spacing(2) : 0;
                p[g.index(ix, iy, iz)] += w * std::cos(fx * x + fy * y + fz * z + ph);
              }
        }
    // normalize to unit max and scale
    double mx = fields::kernels::max_abs(p, g.n());
    if (mx > 0) fields::kernels::scale(p, amp / mx, p, g.n());
  }
  return out;
}

FluidState initial_state(const Model& model, const InitSpec& init) {
  const Grid& g = model.grid();
  const liealg::LieAlgebraSpec& alg = model.algebra();
  std::mt19937_64 rng(init.seed);
  auto rnd = [&](int ncomp, double amp) {
    return random_band_limited(g, ncomp, init.cutoff, amp, rng);
  };

  FluidState st;
  st.grid = &model.grid();
  st.alg = &model.algebra();
  ScalarField frho = rnd(1, init.amp_rho);
  ScalarField fS = rnd(1, init.amp_S);
  st.rho = ScalarField(g, 1);
  st.S = ScalarField(g, 1);
  for (int64_t i = 0; i < g.n(); ++i) {
    st.rho.comp(0)[i] = init.rho0 * std::exp(frho.comp(0)[i]);
    st.S.comp(0)[i] = init.S0 * std::exp(fS.comp(0)[i]);
  }
  VectorField u = rnd(g.dim, init.amp_v);

  const double a = model.params().a_ion, R = model.params().R_hall;
  switch (model.kind()) {
    case ModelKind::mhd:
    case ModelKind::ymmhd: {
      st.kappa = rnd(alg.dim, init.amp_kappa);
      st.gamma = rnd(alg.dim * g.dim, init.amp_gamma);
      st.m = ops::mul_scalar(ops::flat(u), st.rho);
      break;
    }
    case ModelKind::hall: {
      st.A = rnd(g.dim, init.amp_gamma);
      st.n = ops::scaled(-a, st.rho);
      st.m = ops::mul_scalar(ops::flat(u), st.rho);
      ops::axpy_inplace(st.m, a / R, ops::mul_scalar(*st.A, st.rho));
      break;
    }
    case ModelKind::superfluid:
    case ModelKind::sf_ymmhd: {
      VectorField vs = init.vs_irrotational ? ops::sharp(ops::d_scalar(rnd(1, init.amp_vs)))
                                            : rnd(g.dim, init.amp_vs);
      st.v_s = vs;
      // m = rho v_n^flat + rho_s (v_s - v_n)^flat with v_n = u
      ScalarField rs = model.closure().rho_s_field(st.rho, st.S);
      st.m = ops::mul_scalar(ops::flat(u), st.rho);
      OneForm p = ops::mul_scalar(ops::flat(ops::sub(vs, u)), rs);
      ops::axpy_inplace(st.m, 1.0, p);
      if (model.kind() == ModelKind::sf_ymmhd) {
        st.kappa = rnd(alg.dim, init.amp_kappa);
        st.gamma = rnd(alg.dim * g.dim, init.amp_gamma);
      }
      break;
    }
    case ModelKind::sf_hall: {
      st.A = rnd(g.dim, init.amp_gamma);
      st.n = ops::scaled(-a, st.rho);
      VectorField vs = init.vs_irrotational ? ops::sharp(ops::d_scalar(rnd(1, init.amp_vs)))
                                            : rnd(g.dim, init.amp_vs);
      VectorField uadv = vs;  // state slot holds u = v_s + (a/R) A#
      ops::axpy_inplace(uadv, a / R, ops::sharp(*st.A));
      st.v_s = uadv;
      ScalarField rs = model.closure().rho_s_field(st.rho, st.S);
      st.m = ops::mul_scalar(ops::flat(u), st.rho);  // v_n = u
      ops::axpy_inplace(st.m, a / R, ops::mul_scalar(*st.A, st.rho));
      OneForm p = ops::mul_scalar(ops::flat(ops::sub(vs, u)), rs);
      ops::axpy_inplace(st.m, 1.0, p);
      break;
    }
  }
  return st;
}

void step_with_loops(const Model& model, FluidState& st, std::vector<LoopPolyline>& loops,
                     const std::vector<LoopSpec>& specs, double dt) {
  const Grid& g = model.grid();
  const int d = g.dim;
  const size_t nl = loops.size();

  struct LoopK {
    std::vector<std::array<double, 3>> v;
  };
  auto loop_velocities = [&](const FluidState& stage,
                             const std::vector<LoopPolyline>& pos) -> std::vector<LoopK> {
    std::map<VelocitySel, FourierInterpolant> interps;
    for (const auto& s : specs)
      if (!interps.count(s.sel))
        interps.emplace(s.sel, FourierInterpolant(model.velocity(stage, s.sel)));
    std::vector<LoopK> ks(nl);
    for (size_t l = 0; l < nl; ++l) {
      const auto& it = interps.at(specs[l].sel);
      ks[l].v.resize(pos[l].pts.size());
      double vv[3] = {0, 0, 0};
      for (size_t p = 0; p < pos[l].pts.size(); ++p) {
        it.eval(pos[l].pts[p].data(), vv);
        for (int i = 0; i < d; ++i) ks[l].v[p][i] = vv[i];
        for (int i = d; i < 3; ++i) ks[l].v[p][i] = 0;
      }
    }
    return ks;
  };
  auto advance = [&](const std::vector<LoopPolyline>& base, const std::vector<LoopK>& k,
                     double h) {
    std::vector<LoopPolyline> out = base;
    for (size_t l = 0; l < nl; ++l)
      for (size_t p = 0; p < base[l].pts.size(); ++p)
        for (int i = 0; i < d; ++i) out[l].pts[p][i] = base[l].pts[p][i] + h * k[l].v[p][i];
    return out;
  };

  FluidState k1 = model.rhs(st);
  auto kl1 = loop_velocities(st, loops);
  FluidState y2 = st;
  models::state_axpy(y2, 0.5 * dt, k1);
  auto L2 = advance(loops, kl1, 0.5 * dt);
  FluidState k2 = model.rhs(y2);
  auto kl2 = loop_velocities(y2, L2);
  FluidState y3 = st;
  models::state_axpy(y3, 0.5 * dt, k2);
  auto L3 = advance(loops, kl2, 0.5 * dt);
  FluidState k3 = model.rhs(y3);
  auto kl3 = loop_velocities(y3, L3);
  FluidState y4 = st;
  models::state_axpy(y4, dt, k3);
  auto L4 = advance(loops, kl3, dt);
  FluidState k4 = model.rhs(y4);
  auto kl4 = loop_velocities(y4, L4);

  models::state_axpy(st, dt / 6.0, k1);
  models::state_axpy(st, dt / 3.0, k2);
  models::state_axpy(st, dt / 3.0, k3);
  models::state_axpy(st, dt / 6.0, k4);
  for (size_t l = 0; l < nl; ++l)
    for (size_t p = 0; p < loops[l].pts.size(); ++p)
      for (int i = 0; i < d; ++i) {
        loops[l].pts[p][i] += dt / 6.0 * (kl1[l].v[p][i] + 2 * kl2[l].v[p][i] +
                                          2 * kl3[l].v[p][i] + kl4[l].v[p][i]);
        loops[l].pts[p][i] = g.wrap(i, loops[l].pts[p][i]);
      }
  if (!models::state_all_finite(st)) throw std::runtime_error("step: non-finite state");
}

RunResult run_simulation(const Model& model, const SimConfig& cfg) {
  RunResult res;
  try {
    FluidState st = initial_state(model, cfg.init);
    std::vector<LoopPolyline> loops;
    for (const auto& ls : cfg.loops)
      loops.push_back(LoopPolyline::circle(model.grid(), ls.center, ls.radius, ls.n_pts));

    int n_steps = cfg.steps_override >= 0 ? cfg.steps_override
                                          : int(std::llround(cfg.t_end / cfg.dt));
    res.records.push_back(collect_diagnostics(model, st, loops, cfg.loops, 0.0));
    for (int step = 1; step <= n_steps; ++step) {
      try {
        step_with_loops(model, st, loops, cfg.loops, cfg.dt);
      } catch (const models::SolverError& e) {
        res.exit_code = 4;
        res.error = std::string("solver failure at step ") + std::to_string(step) + ": " + e.what();
        return res;
      } catch (const std::runtime_error& e) {
        res.exit_code = 3;
        res.error = std::string("at step ") + std::to_string(step) + ": " + e.what();
        return res;
      }
      if (step % cfg.cadence == 0 || step == n_steps)
        res.records.push_back(collect_diagnostics(model, st, loops, cfg.loops, step * cfg.dt));
    }
    res.final_state = std::move(st);
  } catch (const models::SolverError& e) {
    res.exit_code = 4;
    res.error = e.what();
  } catch (const std::exception& e) {
    res.exit_code = 3;
    res.error = e.what();
  }
  return res;
}

}  // namespace alp::sim
