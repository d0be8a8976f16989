#include "alp/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

#include "alp/kernels.hpp"

namespace alp::fields {

namespace {

struct PlanSet {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  int64_t nreal = 0;
  int64_t ncplx = 0;
  std::array<int, 3> shape{};
  int rank = 0;
  // per-axis wavenumber factor at each complex index (Nyquist zeroed)
  std::array<std::vector<double>, 3> kfac;
  std::vector<unsigned char> dealias_mask;
};

std::mutex plan_mutex;

PlanSet& plans_for(const Grid& g) {
  static std::map<std::array<double, 6>, PlanSet> cache;
  std::array<double, 6> key{double(g.shape[0]), double(g.shape[1]), double(g.shape[2]),
                            g.lengths[0], g.lengths[1], g.lengths[2]};
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PlanSet& p = cache[key];
  p.shape = g.shape;
  p.rank = g.dim;
  int n[3] = {g.shape[0], g.shape[1], g.shape[2]};
  const int last = g.dim - 1;
  int64_t ncplx = 1;
  for (int a = 0; a < g.dim; ++a) ncplx *= (a == last) ? (n[a] / 2 + 1) : n[a];
  p.nreal = g.n();
  p.ncplx = ncplx;

  std::vector<double> rbuf(p.nreal);
  std::vector<std::complex<double>> cbuf(p.ncplx);
  p.r2c = fftw_plan_dft_r2c(g.dim, n, rbuf.data(), reinterpret_cast<fftw_complex*>(cbuf.data()),
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.c2r = fftw_plan_dft_c2r(g.dim, n, reinterpret_cast<fftw_complex*>(cbuf.data()), rbuf.data(),
                            FFTW_ESTIMATE | FFTW_UNALIGNED);

  // complex index -> (k0,k1[,k2]) with the last axis halved
  const int nlast_c = n[last] / 2 + 1;
  for (int a = 0; a < g.dim; ++a) p.kfac[a].assign(p.ncplx, 0.0);
  p.dealias_mask.assign(p.ncplx, 1);
  for (int64_t ci = 0; ci < p.ncplx; ++ci) {
    int idx[3] = {0, 0, 0};
    int64_t rem = ci;
    idx[last] = int(rem % nlast_c);
    rem /= nlast_c;
    if (g.dim == 3) {
      idx[1] = int(rem % n[1]);
      rem /= n[1];
      idx[0] = int(rem);
    } else {
      idx[0] = int(rem);
    }
    bool keep = true;
    for (int a = 0; a < g.dim; ++a) {
      const int f = g.freq(a, idx[a]);
      const bool nyq = (n[a] % 2 == 0) && (idx[a] == n[a] / 2);
      p.kfac[a][ci] = nyq ? 0.0 : 2.0 * std::numbers::pi / g.lengths[a] * f;
      if (std::abs(f) > n[a] / 3) keep = false;
    }
    p.dealias_mask[ci] = keep ? 1 : 0;
  }
  return p;
}

}  // namespace

void deriv_comp(const Grid& g, const double* in, double* out, int axis) {
  PlanSet& p = plans_for(g);
  std::vector<double> rbuf(in, in + p.nreal);
  std::vector<std::complex<double>> cbuf(p.ncplx);
  fftw_execute_dft_r2c(p.r2c, rbuf.data(), reinterpret_cast<fftw_complex*>(cbuf.data()));
  kernels::spectral_ik(reinterpret_cast<double*>(cbuf.data()), p.kfac[axis].data(), p.ncplx);
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(cbuf.data()), rbuf.data());
  kernels::scale(out, 1.0 / double(p.nreal), rbuf.data(), p.nreal);
}

Field deriv(const Field& f, int axis) {
  Field out(f.grid(), f.ncomp());
  for (int c = 0; c < f.ncomp(); ++c) deriv_comp(f.grid(), f.comp(c), out.comp(c), axis);
  return out;
}

void dealias_inplace(Field& f) {
  PlanSet& p = plans_for(f.grid());
  std::vector<std::complex<double>> cbuf(p.ncplx);
  std::vector<double> rbuf(p.nreal);
  for (int c = 0; c < f.ncomp(); ++c) {
    kernels::copy(rbuf.data(), f.comp(c), p.nreal);
    fftw_execute_dft_r2c(p.r2c, rbuf.data(), reinterpret_cast<fftw_complex*>(cbuf.data()));
    kernels::spectral_mask(reinterpret_cast<double*>(cbuf.data()), p.dealias_mask.data(), p.ncplx);
    fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(cbuf.data()), rbuf.data());
    kernels::scale(f.comp(c), 1.0 / double(p.nreal), rbuf.data(), p.nreal);
  }
}

FourierInterpolant::FourierInterpolant(const Field& f) : grid_(&f.grid()), ncomp_(f.ncomp()) {
  const Grid& g = *grid_;
  PlanSet& p = plans_for(g);
  const int last = g.dim - 1;
  const int nlast_c = g.shape[last] / 2 + 1;
  spec_.resize(ncomp_);
  std::vector<double> rbuf(p.nreal);
  std::vector<std::complex<double>> half(p.ncplx);
  const int nx = g.shape[0], ny = g.shape[1], nz = g.shape[2];
  for (int c = 0; c < ncomp_; ++c) {
    kernels::copy(rbuf.data(), f.comp(c), p.nreal);
    fftw_execute_dft_r2c(p.r2c, rbuf.data(), reinterpret_cast<fftw_complex*>(half.data()));
    auto& full = spec_[c];
    full.assign(size_t(nx) * ny * nz, {0, 0});
    auto half_at = [&](int i, int j, int k) {
      int64_t ci = g.dim == 3 ? (int64_t(i) * ny + j) * nlast_c + k : int64_t(i) * nlast_c + j;
      return half[ci];
    };
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j)
        for (int k = 0; k < nz; ++k) {
          const int lst = g.dim == 3 ? k : j;
          std::complex<double> v;
          if (lst < nlast_c) {
            v = half_at(i, j, k);
          } else {
            const int im = (nx - i) % nx, jm = (ny - j) % ny, km = (nz - k) % nz;
            v = std::conj(g.dim == 3 ? half_at(im, jm, km) : half_at(im, jm, 0));
          }
          full[(size_t(i) * ny + j) * nz + k] = v / double(p.nreal);
        }
  }
}

void FourierInterpolant::eval(const double* x, double* out) const {
  const Grid& g = *grid_;
  const int nx = g.shape[0], ny = g.shape[1], nz = g.shape[2];
  auto phases = [&](int axis, std::vector<std::complex<double>>& ph) {
    const int n = g.shape[axis];
    ph.resize(n);
    const double xi = g.wrap(axis, x[axis]);
    for (int i = 0; i < n; ++i) {
      const double k = 2.0 * std::numbers::pi / g.lengths[axis] * g.freq(axis, i);
      ph[i] = std::polar(1.0, k * xi);
    }
  };
  std::vector<std::complex<double>> px, py, pz;
  phases(0, px);
  phases(1, py);
  if (g.dim == 3) {
    phases(2, pz);
  } else {
    pz.assign(1, {1.0, 0.0});
  }
  for (int c = 0; c < ncomp_; ++c) {
    const auto& full = spec_[c];
    std::complex<double> acc{0, 0};
    for (int i = 0; i < nx; ++i) {
      std::complex<double> accx{0, 0};
      for (int j = 0; j < ny; ++j) {
        std::complex<double> accy{0, 0};
        const size_t base = (size_t(i) * ny + j) * nz;
        for (int k = 0; k < nz; ++k) accy += full[base + k] * pz[k];
        accx += accy * py[j];
      }
      acc += accx * px[i];
    }
    out[c] = acc.real();
  }
}

}  // namespace alp::fields
