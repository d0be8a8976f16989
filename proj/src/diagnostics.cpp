#include <sstream>

#include "alp/simulation.hpp"

namespace alp::sim {

namespace ops = fields::ops;
using fields::Field;
using fields::FourierInterpolant;
using fields::LoopPolyline;
using fields::OneForm;
using fields::VectorField;

fields::OneForm Model::kelvin_form(const FluidState& st) const {
  return ops::div_scalar(st.m, st.rho);
}

std::optional<fields::OneForm> Model::kelvin_integrand(const FluidState& st) const {
  // -(1/rho)[ kappa . d(dh/dkappa) + rho d(dh/drho) + S d(dh/dS)
  //          + (dh/dgamma) <>_1 gamma ], models with advected mass density.
  switch (kind_) {
    case ModelKind::mhd:
    case ModelKind::ymmhd: {
      models::Ymmhd ym = ymmhd_();
      models::CFGrads gr = ym.grads(st);
      OneForm acc = ops::mul_scalar(ops::d_scalar(gr.d_rho), st.rho);
      ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::d_scalar(gr.d_S), st.S));
      ops::axpy_inplace(acc, 1.0, ops::diamond1(alg_, gr.d_gamma, *st.gamma));
      return ops::scaled(-1.0, ops::div_scalar(acc, st.rho));
    }
    case ModelKind::hall: {
      models::Hall h = hall_();
      OneForm acc = ops::mul_scalar(ops::d_scalar(h.d_rho(st)), st.rho);
      ops::axpy_inplace(acc, 1.0, ops::mul_scalar(ops::d_scalar(h.d_S(st)), st.S));
      return ops::scaled(-1.0, ops::div_scalar(acc, st.rho));
    }
    default:
      return std::nullopt;
  }
}

std::optional<fields::Field> Model::gamma_form(const FluidState& st) const {
  switch (kind_) {
    case ModelKind::mhd:
    case ModelKind::ymmhd:
    case ModelKind::sf_ymmhd:
      return *st.gamma;
    case ModelKind::hall:
    case ModelKind::sf_hall:
      return *st.A;
    default:
      return std::nullopt;
  }
}

std::optional<fields::OneForm> Model::vs_form(const FluidState& st) const {
  if (!has_vs()) return std::nullopt;
  return ops::flat(superfluid_velocity(st));
}

std::optional<fields::OneForm> Model::uadv_form(const FluidState& st) const {
  if (kind_ != ModelKind::sf_hall) return std::nullopt;
  return ops::flat(*st.v_s);
}

fields::VectorField Model::superfluid_velocity(const FluidState& st) const {
  if (kind_ == ModelKind::sf_hall) return sf_hall_().superfluid_velocity(st);
  return *st.v_s;
}

DiagnosticsRecord collect_diagnostics(const Model& model, const FluidState& st,
                                      const std::vector<LoopPolyline>& loops,
                                      const std::vector<LoopSpec>& specs, double time) {
  const fields::Grid& g = model.grid();
  DiagnosticsRecord rec;
  rec.time = time;
  rec.hamiltonian = model.hamiltonian(st);
  rec.mass = ops::integral(st.rho);
  rec.entropy = ops::integral(st.S);
  if (model.has_constraint()) {
    fields::ScalarField c = ops::scaled(model.params().a_ion, st.rho);
    ops::axpy_inplace(c, 1.0, *st.n);
    rec.max_arho_plus_n = ops::max_abs(c);
  }
  if (model.has_vs()) {
    VectorField vs = model.superfluid_velocity(st);
    fields::TwoForm dvs = ops::d_oneform(ops::flat(vs));
    rec.max_dvs = ops::max_abs(dvs);
    // transport residual: d(vs_dot^flat) + L_{v_n}(d vs^flat)
    FluidState tang = model.rhs(st);
    VectorField vs_dot;
    if (model.kind() == ModelKind::sf_hall) {
      // d/dt v_s = d/dt u - (a/R) d/dt A#
      vs_dot = *tang.v_s;
      ops::axpy_inplace(vs_dot, -model.params().a_ion / model.params().R_hall,
                        ops::sharp(*tang.A));
    } else {
      vs_dot = *tang.v_s;
    }
    VectorField vn = model.velocity(st, VelocitySel::normal_vn);
    fields::TwoForm lhs = ops::d_oneform(ops::flat(vs_dot));
    ops::axpy_inplace(lhs, 1.0, ops::lie_deriv_twoform_exact(vn, dvs));
    rec.vorticity_residual = ops::max_abs(lhs);
  }

  OneForm kform = model.kelvin_form(st);
  std::optional<OneForm> kint = model.kelvin_integrand(st);
  std::optional<Field> gform = model.gamma_form(st);
  std::optional<OneForm> vsf = model.vs_form(st);
  std::optional<OneForm> uaf = model.uadv_form(st);
  VectorField u = model.velocity(st, VelocitySel::fluid_u);

  FourierInterpolant ik(kform);
  std::optional<FourierInterpolant> iki, igf, ivs, iua;
  if (kint) iki.emplace(*kint);
  if (gform) igf.emplace(*gform);
  if (vsf) ivs.emplace(*vsf);
  if (uaf) iua.emplace(*uaf);
  FourierInterpolant iu(ops::flat(u));

  for (size_t l = 0; l < loops.size(); ++l) {
    DiagnosticsRecord::LoopRecord lr;
    lr.circ_m_rho = fields::loop_integral(g, loops[l], ik)[0];
    lr.circ_u = fields::loop_integral(g, loops[l], iu)[0];
    if (iki) lr.kelvin_rhs = fields::loop_integral(g, loops[l], *iki)[0];
    if (igf) {
      Eigen::VectorXd ga = fields::loop_integral(g, loops[l], *igf);
      lr.circ_gamma.assign(ga.data(), ga.data() + ga.size());
    }
    if (ivs) lr.circ_vs = fields::loop_integral(g, loops[l], *ivs)[0];
    if (iua) lr.circ_uadv = fields::loop_integral(g, loops[l], *iua)[0];
    rec.loops.push_back(std::move(lr));
  }
  return rec;
}

std::vector<std::vector<double>> kelvin_residual(const std::vector<DiagnosticsRecord>& records) {
  if (records.size() < 3) throw std::invalid_argument("kelvin_residual: need >= 3 records");
  const size_t nl = records.front().loops.size();
  std::vector<std::vector<double>> out(nl);
  for (size_t k = 1; k + 1 < records.size(); ++k) {
    const double dt2 = records[k + 1].time - records[k - 1].time;
    for (size_t l = 0; l < nl; ++l) {
      const double dcirc =
          (records[k + 1].loops[l].circ_m_rho - records[k - 1].loops[l].circ_m_rho) / dt2;
      out[l].push_back(dcirc - records[k].loops[l].kelvin_rhs);
    }
  }
  return out;
}

std::string diagnostics_csv_header(const Model& model, const std::vector<LoopSpec>& specs) {
  std::ostringstream os;
  os << "time,hamiltonian,mass,entropy,max_arho_plus_n,vorticity_residual,max_dvs";
  for (size_t l = 0; l < specs.size(); ++l) {
    os << ",loop" << l << "_circ_u,loop" << l << "_circ_m_rho,loop" << l << "_kelvin_rhs,loop" << l
       << "_circ_vs,loop" << l << "_circ_uadv";
    const int adim = model.algebra().dim;
    const bool has_gamma = model.kind() != ModelKind::superfluid;
    const int ng = has_gamma ? ((model.kind() == ModelKind::hall || model.kind() == ModelKind::sf_hall) ? 1 : adim) : 0;
    for (int a = 0; a < ng; ++a) os << ",loop" << l << "_circ_A" << a;
  }
  return os.str();
}

std::string diagnostics_csv_row(const DiagnosticsRecord& r) {
  std::ostringstream os;
  os.precision(17);
  os << r.time << ',' << r.hamiltonian << ',' << r.mass << ',' << r.entropy << ','
     << r.max_arho_plus_n << ',' << r.vorticity_residual << ',' << r.max_dvs;
  for (const auto& l : r.loops) {
    os << ',' << l.circ_u << ',' << l.circ_m_rho << ',' << l.kelvin_rhs << ',' << l.circ_vs << ','
       << l.circ_uadv;
    for (double gval : l.circ_gamma) os << ',' << gval;
  }
  return os.str();
}

}  // namespace alp::sim
