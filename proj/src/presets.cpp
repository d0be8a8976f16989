#include "alp/config.hpp"

namespace alp::cli {

namespace {

std::string common_tail(double dt, double t_end, const std::string& loops) {
  return std::string("[integrate]\ndt = ") + std::to_string(dt) +
         "\nt_end = " + std::to_string(t_end) +
         "\ncadence = 10\ndealias = true\n\n[loops]\n" + loops + "\n[output]\ndir = out\n";
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> p = {
      {"mhd2d-32", "compressible ideal MHD, 2D 32^2", "seconds",
       "[grid]\ndim = 2\nshape = 32 32\nlengths = 1 1\n\n"
       "[model]\nid = mhd\nalgebra = u1\n\n"
       "[closure]\nkind = polytropic\nK = 1\ngamma_ad = 1.6666666666666667\n\n"
       "[init]\nseed = 11\ncutoff = 4\nrho0 = 1\ns0 = 0.2\namp_v = 0.08\namp_rho = 0.03\n"
       "amp_s = 0.03\namp_gamma = 0.08\namp_kappa = 0.02\n\n" +
           common_tail(1e-3, 1.0,
                       "loop = 0.5 0.5 0 0.21 96 u\nloop = 0.32 0.62 0 0.13 96 u\n")},
      {"mhd3d-16", "compressible ideal MHD, 3D 16^3", "tens of seconds",
       "[grid]\ndim = 3\nshape = 16 16 16\nlengths = 1 1 1\n\n"
       "[model]\nid = mhd\nalgebra = u1\n\n"
       "[closure]\nkind = polytropic\nK = 1\ngamma_ad = 1.6666666666666667\n\n"
       "[init]\nseed = 12\ncutoff = 3\nrho0 = 1\ns0 = 0.2\namp_v = 0.06\namp_rho = 0.02\n"
       "amp_s = 0.02\namp_gamma = 0.06\namp_kappa = 0.02\n\n" +
           common_tail(2e-3, 0.5, "loop = 0.5 0.5 0.5 0.21 96 u\n")},
      {"ymmhd-su2-2d-32", "Yang-Mills MHD with O = SU(2) (so3 algebra), 2D 32^2", "tens of seconds",
       "[grid]\ndim = 2\nshape = 32 32\nlengths = 1 1\n\n"
       "[model]\nid = ymmhd\nalgebra = so3\n\n"
       "[closure]\nkind = polytropic\nK = 1\ngamma_ad = 1.6666666666666667\n\n"
       "[init]\nseed = 13\ncutoff = 3\nrho0 = 1\ns0 = 0.2\namp_v = 0.05\namp_rho = 0.02\n"
       "amp_s = 0.02\namp_gamma = 0.05\namp_kappa = 0.02\n\n" +
           common_tail(1e-3, 0.5, "loop = 0.5 0.5 0 0.21 96 u\n")},
      {"hall2d-32", "Hall MHD, 2D 32^2", "seconds",
       "[grid]\ndim = 2\nshape = 32 32\nlengths = 1 1\n\n"
       "[model]\nid = hall\nalgebra = u1\na_ion = 1\nr_hall = 0.5\n\n"
       "[closure]\nkind = polytropic\nK = 1\ngamma_ad = 1.6666666666666667\n\n"
       "[init]\nseed = 14\ncutoff = 4\nrho0 = 1\ns0 = 0.2\namp_v = 0.06\namp_rho = 0.02\n"
       "amp_s = 0.02\namp_gamma = 0.06\n\n" +
           common_tail(1e-3, 0.5,
                       "loop = 0.5 0.5 0 0.21 96 u\nloop = 0.4 0.45 0 0.17 96 electron\n")},
      {"superfluid2d-32", "two-fluid superfluid, 2D 32^2", "seconds",
       "[grid]\ndim = 2\nshape = 32 32\nlengths = 1 1\n\n"
       "[model]\nid = superfluid\nalgebra = u1\n\n"
       "[closure]\nkind = polytropic\nK = 1\ngamma_ad = 1.6666666666666667\nsigma = 0.3\n\n"
       "[init]\nseed = 15\ncutoff = 4\nrho0 = 1\ns0 = 0.2\namp_v = 0.06\namp_rho = 0.02\n"
       "amp_s = 0.02\namp_vs = 0.06\n\n" +
           common_tail(1e-3, 0.5, "loop = 0.5 0.5 0 0.21 96 vn\n")},
      {"sf-ymmhd-2d-16", "superfluid Yang-Mills MHD with so3, 2D 16^2", "tens of seconds",
       "[grid]\ndim = 2\nshape = 16 16\nlengths = 1 1\n\n"
       "[model]\nid = sf-ymmhd\nalgebra = so3\n\n"
       "[closure]\nkind = polytropic\nK = 1\ngamma_ad = 1.6666666666666667\nsigma = 0.3\n\n"
       "[init]\nseed = 16\ncutoff = 3\nrho0 = 1\ns0 = 0.2\namp_v = 0.05\namp_rho = 0.02\n"
       "amp_s = 0.02\namp_vs = 0.05\namp_gamma = 0.05\namp_kappa = 0.02\n\n" +
           common_tail(1e-3, 0.3, "loop = 0.5 0.5 0 0.21 96 vn\n")},
      {"sf-hall-2d-32", "superfluid Hall MHD, 2D 32^2", "seconds",
       "[grid]\ndim = 2\nshape = 32 32\nlengths = 1 1\n\n"
       "[model]\nid = sf-hall\nalgebra = u1\na_ion = 1\nr_hall = 0.5\n\n"
       "[closure]\nkind = polytropic\nK = 1\ngamma_ad = 1.6666666666666667\nsigma = 0.3\n\n"
       "[init]\nseed = 17\ncutoff = 3\nrho0 = 1\ns0 = 0.2\namp_v = 0.05\namp_rho = 0.02\n"
       "amp_s = 0.02\namp_vs = 0.05\namp_gamma = 0.05\n\n" +
           common_tail(1e-3, 0.3,
                       "loop = 0.5 0.5 0 0.21 96 vn\nloop = 0.4 0.45 0 0.17 96 electron\n")},
  };
  return p;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace alp::cli
