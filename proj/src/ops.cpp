#include "alp/ops.hpp"

#include <stdexcept>

#include "alp/kernels.hpp"

namespace alp::fields::ops {

namespace {

void check_same(const Field& a, const Field& b, const char* what) {
  if (!(a.grid() == b.grid()) || a.ncomp() != b.ncomp())
    throw std::invalid_argument(std::string("ops: shape mismatch in ") + what);
}

int alg_dim(const Field& f, int space_comps) {
  if (f.ncomp() % space_comps != 0) throw std::invalid_argument("ops: bad component split");
  return f.ncomp() / space_comps;
}

}  // namespace

Field add(const Field& a, const Field& b) {
  check_same(a, b, "add");
  Field out(a.grid(), a.ncomp());
  kernels::add(out.raw().data(), a.raw().data(), b.raw().data(), int64_t(a.raw().size()));
  return out;
}

Field sub(const Field& a, const Field& b) {
  check_same(a, b, "sub");
  Field out(a.grid(), a.ncomp());
  kernels::sub(out.raw().data(), a.raw().data(), b.raw().data(), int64_t(a.raw().size()));
  return out;
}

Field scaled(double s, const Field& a) {
  Field out(a.grid(), a.ncomp());
  kernels::scale(out.raw().data(), s, a.raw().data(), int64_t(a.raw().size()));
  return out;
}

void axpy_inplace(Field& y, double s, const Field& x) {
  check_same(y, x, "axpy");
  kernels::axpy(y.raw().data(), s, x.raw().data(), int64_t(y.raw().size()));
}

Field mul_scalar(const Field& f, const ScalarField& s) {
  if (s.ncomp() != 1) throw std::invalid_argument("mul_scalar: s must be scalar");
  Field out(f.grid(), f.ncomp());
  for (int c = 0; c < f.ncomp(); ++c)
    kernels::mul(out.comp(c), f.comp(c), s.comp(0), f.n());
  return out;
}

Field div_scalar(const Field& f, const ScalarField& s) {
  Field out(f.grid(), f.ncomp());
  for (int c = 0; c < f.ncomp(); ++c)
    kernels::recip_mul(out.comp(c), f.comp(c), s.comp(0), f.n());
  return out;
}

Field pointwise_mul(const Field& a, const Field& b) {
  check_same(a, b, "pointwise_mul");
  Field out(a.grid(), a.ncomp());
  kernels::mul(out.raw().data(), a.raw().data(), b.raw().data(), int64_t(a.raw().size()));
  return out;
}

double integral(const ScalarField& f) {
  if (f.ncomp() != 1) throw std::invalid_argument("integral: scalar field expected");
  return f.grid().cell_volume() * kernels::sum(f.comp(0), f.n());
}

double inner(const Field& a, const Field& b) {
  check_same(a, b, "inner");
  return a.grid().cell_volume() *
         kernels::dot_sum(a.raw().data(), b.raw().data(), int64_t(a.raw().size()));
}

double max_abs(const Field& f) {
  return kernels::max_abs(f.raw().data(), int64_t(f.raw().size()));
}

double max_abs_diff(const Field& a, const Field& b) {
  check_same(a, b, "max_abs_diff");
  return kernels::max_abs_diff(a.raw().data(), b.raw().data(), int64_t(a.raw().size()));
}

bool all_finite(const Field& f) {
  return kernels::all_finite(f.raw().data(), int64_t(f.raw().size()));
}

OneForm d_scalar(const ScalarField& f) {
  const Grid& g = f.grid();
  OneForm out(g, g.dim);
  for (int i = 0; i < g.dim; ++i) deriv_comp(g, f.comp(0), out.comp(i), i);
  return out;
}

TwoForm d_oneform(const OneForm& m) {
  const Grid& g = m.grid();
  TwoForm out(g, g.two_form_comps());
  Field dm(g, g.dim * g.dim);  // dm(i*dim+j) = d_i m_j
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) deriv_comp(g, m.comp(j), dm.comp(i * g.dim + j), i);
  if (g.dim == 2) {
    kernels::sub(out.comp(0), dm.comp(0 * 2 + 1), dm.comp(1 * 2 + 0), g.n());
  } else {
    kernels::sub(out.comp(0), dm.comp(1 * 3 + 2), dm.comp(2 * 3 + 1), g.n());
    kernels::sub(out.comp(1), dm.comp(2 * 3 + 0), dm.comp(0 * 3 + 2), g.n());
    kernels::sub(out.comp(2), dm.comp(0 * 3 + 1), dm.comp(1 * 3 + 0), g.n());
  }
  return out;
}

ScalarField div_vec(const VectorField& u) {
  const Grid& g = u.grid();
  ScalarField out(g, 1);
  std::vector<double> tmp(g.n());
  for (int i = 0; i < g.dim; ++i) {
    deriv_comp(g, u.comp(i), tmp.data(), i);
    kernels::axpy(out.comp(0), 1.0, tmp.data(), g.n());
  }
  return out;
}

int two_comp(int dim, int i, int j, double& sign) {
  if (dim == 2) {
    sign = (i == 0) ? 1.0 : -1.0;
    return 0;
  }
  const int c = 3 - i - j;
  const bool cyclic = (i == (j + 2) % 3);  // (1,2),(2,0),(0,1)
  sign = cyclic ? 1.0 : -1.0;
  return c;
}

VectorField div_two(const TwoForm& W) {
  const Grid& g = W.grid();
  VectorField out(g, g.dim);
  std::vector<double> tmp(g.n());
  for (int j = 0; j < g.dim; ++j)
    for (int i = 0; i < g.dim; ++i) {
      if (i == j) continue;
      double sign;
      const int c = two_comp(g.dim, i, j, sign);
      deriv_comp(g, W.comp(c), tmp.data(), i);
      kernels::axpy(out.comp(j), sign, tmp.data(), g.n());
    }
  return out;
}

VectorField curl3(const VectorField& u) {
  if (u.grid().dim != 3) throw std::invalid_argument("curl3: 3D only");
  return d_oneform(u);
}

OneForm i_u_two(const VectorField& u, const TwoForm& W) {
  const Grid& g = u.grid();
  OneForm out(g, g.dim);
  for (int j = 0; j < g.dim; ++j)
    for (int i = 0; i < g.dim; ++i) {
      if (i == j) continue;
      double sign;
      const int c = two_comp(g.dim, i, j, sign);
      kernels::mul_scaled_add(out.comp(j), sign, u.comp(i), W.comp(c), g.n());
    }
  return out;
}

ScalarField i_u_one(const VectorField& u, const OneForm& m) {
  check_same(u, m, "i_u_one");
  const Grid& g = u.grid();
  ScalarField out(g, 1);
  for (int i = 0; i < g.dim; ++i) kernels::mul_add(out.comp(0), u.comp(i), m.comp(i), g.n());
  return out;
}

OneForm lie_deriv_oneform(const VectorField& u, const OneForm& m) {
  OneForm out = i_u_two(u, d_oneform(m));
  OneForm d_ium = d_scalar(i_u_one(u, m));
  axpy_inplace(out, 1.0, d_ium);
  return out;
}

OneForm lie_deriv_oneform_coord(const VectorField& u, const OneForm& m) {
  const Grid& g = u.grid();
  OneForm out(g, g.dim);
  std::vector<double> tmp(g.n());
  for (int i = 0; i < g.dim; ++i) {
    for (int j = 0; j < g.dim; ++j) {
      deriv_comp(g, m.comp(i), tmp.data(), j);  // d_j m_i
      kernels::mul_add(out.comp(i), u.comp(j), tmp.data(), g.n());
      deriv_comp(g, u.comp(j), tmp.data(), i);  // d_i u^j
      kernels::mul_add(out.comp(i), m.comp(j), tmp.data(), g.n());
    }
  }
  return out;
}

TwoForm lie_deriv_twoform_exact(const VectorField& u, const TwoForm& W) {
  return d_oneform(i_u_two(u, W));
}

VectorField sharp(const OneForm& m) { return m; }
OneForm flat(const VectorField& u) { return u; }

ScalarField norm2(const Field& m) {
  ScalarField out(m.grid(), 1);
  for (int c = 0; c < m.ncomp(); ++c) kernels::mul_add(out.comp(0), m.comp(c), m.comp(c), m.n());
  return out;
}

LieFunc bracket_ptwise(const LieAlgebraSpec& s, const LieFunc& xi, const LieFunc& eta) {
  check_same(xi, eta, "bracket_ptwise");
  LieFunc out(xi.grid(), s.dim);
  kernels::bracket_field(s.C.data(), s.dim, xi.raw().data(), eta.raw().data(), out.raw().data(),
                         xi.n());
  return out;
}

LieFunc ad_star_ptwise(const LieAlgebraSpec& s, const LieFunc& nu, const LieFunc& kappa) {
  check_same(nu, kappa, "ad_star_ptwise");
  LieFunc out(nu.grid(), s.dim);
  kernels::ad_star_field(s.C.data(), s.dim, nu.raw().data(), kappa.raw().data(), out.raw().data(),
                         nu.n());
  return out;
}

ScalarField contract_lie(const LieFunc& kappa, const LieFunc& nu) {
  check_same(kappa, nu, "contract_lie");
  ScalarField out(kappa.grid(), 1);
  for (int a = 0; a < kappa.ncomp(); ++a)
    kernels::mul_add(out.comp(0), kappa.comp(a), nu.comp(a), kappa.n());
  return out;
}

LieFunc div_u_kappa(const VectorField& u, const LieFunc& kappa) {
  const Grid& g = u.grid();
  LieFunc out(g, kappa.ncomp());
  Field prod(g, 1);
  std::vector<double> tmp(g.n());
  for (int a = 0; a < kappa.ncomp(); ++a)
    for (int i = 0; i < g.dim; ++i) {
      kernels::mul(prod.comp(0), u.comp(i), kappa.comp(a), g.n());
      deriv_comp(g, prod.comp(0), tmp.data(), i);
      kernels::axpy(out.comp(a), 1.0, tmp.data(), g.n());
    }
  return out;
}

LieOneForm covariant_d_func(const LieAlgebraSpec& s, const LieOneForm& gamma, const LieFunc& nu) {
  const Grid& g = nu.grid();
  const int d = g.dim;
  LieOneForm out(g, s.dim * d);
  const int64_t n = g.n();
  for (int a = 0; a < s.dim; ++a)
    for (int i = 0; i < d; ++i) deriv_comp(g, nu.comp(a), out.comp(lie_idx(d, a, i)), i);
  // add [gamma_i, nu] per point
  for (int i = 0; i < d; ++i) {
#pragma omp parallel for schedule(static)
    for (int64_t p = 0; p < n; ++p) {
      for (int a = 0; a < s.dim; ++a) {
        double acc = 0;
        for (int b = 0; b < s.dim; ++b)
          for (int c = 0; c < s.dim; ++c)
            acc += s.c(a, b, c) * gamma.comp(lie_idx(d, b, i))[p] * nu.comp(c)[p];
        out.comp(lie_idx(d, a, i))[p] += acc;
      }
    }
  }
  return out;
}

LieTwoForm curvature(const LieAlgebraSpec& s, const LieOneForm& gamma) {
  const Grid& g = gamma.grid();
  const int d = g.dim, n2 = g.two_form_comps();
  LieTwoForm out(g, s.dim * n2);
  const int64_t n = g.n();
  // d gamma per algebra component
  for (int a = 0; a < s.dim; ++a) {
    OneForm ga(g, d);
    for (int i = 0; i < d; ++i) kernels::copy(ga.comp(i), gamma.comp(lie_idx(d, a, i)), n);
    TwoForm dga = d_oneform(ga);
    for (int c = 0; c < n2; ++c) kernels::copy(out.comp(a * n2 + c), dga.comp(c), n);
  }
  // + [gamma_i, gamma_j] on each stored (i<j) slot
  auto pair_of = [&](int c, int& i, int& j) {
    if (d == 2) {
      i = 0;
      j = 1;
    } else {
      i = (c + 1) % 3;
      j = (c + 2) % 3;
    }
  };
  for (int c = 0; c < n2; ++c) {
    int i, j;
    pair_of(c, i, j);
#pragma omp parallel for schedule(static)
    for (int64_t p = 0; p < n; ++p) {
      for (int a = 0; a < s.dim; ++a) {
        double acc = 0;
        for (int b = 0; b < s.dim; ++b)
          for (int e = 0; e < s.dim; ++e)
            acc += s.c(a, b, e) * gamma.comp(lie_idx(d, b, i))[p] * gamma.comp(lie_idx(d, e, j))[p];
        out.comp(a * n2 + c)[p] += acc;
      }
    }
  }
  return out;
}

LieTwoForm covariant_d_oneform(const LieAlgebraSpec& s, const LieOneForm& gamma,
                               const LieOneForm& alpha) {
  const Grid& g = gamma.grid();
  const int d = g.dim, n2 = g.two_form_comps();
  LieTwoForm out(g, s.dim * n2);
  const int64_t n = g.n();
  for (int a = 0; a < s.dim; ++a) {
    OneForm aa(g, d);
    for (int i = 0; i < d; ++i) kernels::copy(aa.comp(i), alpha.comp(lie_idx(d, a, i)), n);
    TwoForm daa = d_oneform(aa);
    for (int c = 0; c < n2; ++c) kernels::copy(out.comp(a * n2 + c), daa.comp(c), n);
  }
  auto pair_of = [&](int c, int& i, int& j) {
    if (d == 2) {
      i = 0;
      j = 1;
    } else {
      i = (c + 1) % 3;
      j = (c + 2) % 3;
    }
  };
  for (int c = 0; c < n2; ++c) {
    int i, j;
    pair_of(c, i, j);
#pragma omp parallel for schedule(static)
    for (int64_t p = 0; p < n; ++p) {
      for (int a = 0; a < s.dim; ++a) {
        double acc = 0;
        for (int b = 0; b < s.dim; ++b)
          for (int e = 0; e < s.dim; ++e)
            acc += s.c(a, b, e) * (gamma.comp(lie_idx(d, b, i))[p] * alpha.comp(lie_idx(d, e, j))[p] -
                                   gamma.comp(lie_idx(d, b, j))[p] * alpha.comp(lie_idx(d, e, i))[p]);
        out.comp(a * n2 + c)[p] += acc;
      }
    }
  }
  return out;
}

LieFunc covariant_div_vec(const LieAlgebraSpec& s, const LieOneForm& gamma, const DualLieVec& w) {
  const Grid& g = gamma.grid();
  const int d = g.dim;
  LieFunc out(g, s.dim);
  const int64_t n = g.n();
  std::vector<double> tmp(n);
  for (int a = 0; a < s.dim; ++a)
    for (int i = 0; i < d; ++i) {
      deriv_comp(g, w.comp(lie_idx(d, a, i)), tmp.data(), i);
      kernels::axpy(out.comp(a), 1.0, tmp.data(), n);
    }
  // - sum_i ad*_{gamma_i} w^i, with (ad*_xi mu)_c = mu_a C^a_{bc} xi^b
  for (int i = 0; i < d; ++i) {
#pragma omp parallel for schedule(static)
    for (int64_t p = 0; p < n; ++p) {
      for (int c = 0; c < s.dim; ++c) {
        double acc = 0;
        for (int a = 0; a < s.dim; ++a)
          for (int b = 0; b < s.dim; ++b)
            acc += w.comp(lie_idx(d, a, i))[p] * s.c(a, b, c) * gamma.comp(lie_idx(d, b, i))[p];
        out.comp(c)[p] -= acc;
      }
    }
  }
  return out;
}

DualLieVec covariant_div_two(const LieAlgebraSpec& s, const LieOneForm& gamma,
                             const LieTwoForm& W) {
  const Grid& g = gamma.grid();
  const int d = g.dim, n2 = g.two_form_comps();
  DualLieVec out(g, s.dim * d);
  const int64_t n = g.n();
  std::vector<double> tmp(n);
  for (int a = 0; a < s.dim; ++a)
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) {
        if (i == j) continue;
        double sign;
        const int c = two_comp(d, i, j, sign);
        deriv_comp(g, W.comp(a * n2 + c), tmp.data(), i);
        kernels::axpy(out.comp(lie_idx(d, a, j)), sign, tmp.data(), n);
      }
  // - sum_i ad*_{gamma_i} W^{ij}
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      if (i == j) continue;
      double sign;
      const int c2 = two_comp(d, i, j, sign);
#pragma omp parallel for schedule(static)
      for (int64_t p = 0; p < n; ++p) {
        for (int cc = 0; cc < s.dim; ++cc) {
          double acc = 0;
          for (int a = 0; a < s.dim; ++a)
            for (int b = 0; b < s.dim; ++b)
              acc += sign * W.comp(a * n2 + c2)[p] * s.c(a, b, cc) * gamma.comp(lie_idx(d, b, i))[p];
          out.comp(lie_idx(d, cc, j))[p] -= acc;
        }
      }
    }
  return out;
}

OneForm w_dot_iB(const LieAlgebraSpec& s, const DualLieVec& w, const LieTwoForm& B) {
  const Grid& g = w.grid();
  const int d = g.dim, n2 = g.two_form_comps();
  OneForm out(g, d);
  const int64_t n = g.n();
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      if (i == j) continue;
      double sign;
      const int c = two_comp(d, j, i, sign);  // B_{ji}
      for (int a = 0; a < s.dim; ++a)
        kernels::mul_scaled_add(out.comp(j), sign, w.comp(lie_idx(d, a, i)), B.comp(a * n2 + c), n);
    }
  return out;
}

OneForm diamond1(const LieAlgebraSpec& s, const DualLieVec& w, const LieOneForm& gamma) {
  const Grid& g = gamma.grid();
  const int d = g.dim;
  LieFunc divw = covariant_div_vec(s, gamma, w);
  OneForm out(g, d);
  for (int i = 0; i < d; ++i)
    for (int a = 0; a < s.dim; ++a)
      kernels::mul_add(out.comp(i), divw.comp(a), gamma.comp(lie_idx(d, a, i)), g.n());
  OneForm wiB = w_dot_iB(s, w, curvature(s, gamma));
  axpy_inplace(out, -1.0, wiB);
  return out;
}

LieFunc diamond2(const LieAlgebraSpec& s, const DualLieVec& w, const LieOneForm& gamma) {
  const Grid& g = gamma.grid();
  const int d = g.dim;
  LieFunc out(g, s.dim);
  const int64_t n = g.n();
  for (int i = 0; i < d; ++i) {
#pragma omp parallel for schedule(static)
    for (int64_t p = 0; p < n; ++p) {
      for (int c = 0; c < s.dim; ++c) {
        double acc = 0;
        for (int a = 0; a < s.dim; ++a)
          for (int b = 0; b < s.dim; ++b)
            acc += w.comp(lie_idx(d, a, i))[p] * s.c(a, b, c) * gamma.comp(lie_idx(d, b, i))[p];
        out.comp(c)[p] -= acc;
      }
    }
  }
  return out;
}

OneForm kappa_dot_dnu(const LieFunc& kappa, const LieFunc& nu) {
  const Grid& g = kappa.grid();
  OneForm out(g, g.dim);
  std::vector<double> tmp(g.n());
  for (int i = 0; i < g.dim; ++i)
    for (int a = 0; a < kappa.ncomp(); ++a) {
      deriv_comp(g, nu.comp(a), tmp.data(), i);
      kernels::mul_add(out.comp(i), kappa.comp(a), tmp.data(), g.n());
    }
  return out;
}

LieFunc gamma_of_u(const LieOneForm& gamma, const VectorField& u) {
  const Grid& g = u.grid();
  const int d = g.dim;
  const int adim = alg_dim(gamma, d);
  LieFunc out(g, adim);
  for (int a = 0; a < adim; ++a)
    for (int i = 0; i < d; ++i)
      kernels::mul_add(out.comp(a), gamma.comp(lie_idx(d, a, i)), u.comp(i), g.n());
  return out;
}

Field apply_k(const LieAlgebraSpec& s, const Field& f, int space_comps) {
  const int adim = alg_dim(f, space_comps);
  if (adim != s.dim) throw std::invalid_argument("apply_k: algebra dim mismatch");
  Field out(f.grid(), f.ncomp());
  for (int c = 0; c < space_comps; ++c)
    for (int a = 0; a < adim; ++a)
      for (int b = 0; b < adim; ++b)
        if (s.k(a, b) != 0.0)
          kernels::axpy(out.comp(a * space_comps + c), s.k(a, b), f.comp(b * space_comps + c),
                        f.n());
  return out;
}

Field apply_k_inv(const LieAlgebraSpec& s, const Field& f, int space_comps) {
  const int adim = alg_dim(f, space_comps);
  Eigen::MatrixXd kinv = s.k.inverse();
  Field out(f.grid(), f.ncomp());
  for (int c = 0; c < space_comps; ++c)
    for (int a = 0; a < adim; ++a)
      for (int b = 0; b < adim; ++b)
        if (kinv(a, b) != 0.0)
          kernels::axpy(out.comp(a * space_comps + c), kinv(a, b), f.comp(b * space_comps + c),
                        f.n());
  return out;
}

ScalarField norm2_gk(const LieAlgebraSpec& s, const Field& B, int space_comps) {
  return contract_gk(s, B, B, space_comps);
}

ScalarField contract_gk(const LieAlgebraSpec& s, const Field& X, const Field& Y, int space_comps) {
  check_same(X, Y, "contract_gk");
  const int adim = alg_dim(X, space_comps);
  ScalarField out(X.grid(), 1);
  for (int c = 0; c < space_comps; ++c)
    for (int a = 0; a < adim; ++a)
      for (int b = 0; b < adim; ++b)
        if (s.k(a, b) != 0.0)
          kernels::mul_scaled_add(out.comp(0), s.k(a, b), X.comp(a * space_comps + c),
                                  Y.comp(b * space_comps + c), X.n());
  return out;
}

LieOneForm lie_deriv_lie_oneform(const VectorField& u, const LieOneForm& gamma) {
  const Grid& g = u.grid();
  const int d = g.dim;
  const int adim = alg_dim(gamma, d);
  LieOneForm out(g, gamma.ncomp());
  OneForm ga(g, d);
  for (int a = 0; a < adim; ++a) {
    for (int i = 0; i < d; ++i) kernels::copy(ga.comp(i), gamma.comp(lie_idx(d, a, i)), g.n());
    OneForm lga = lie_deriv_oneform(u, ga);
    for (int i = 0; i < d; ++i) kernels::copy(out.comp(lie_idx(d, a, i)), lga.comp(i), g.n());
  }
  return out;
}

}  // namespace alp::fields::ops
