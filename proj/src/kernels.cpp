#include "alp/kernels.hpp"

#include <cmath>

namespace alp::fields::kernels {

void copy(double* y, const double* x, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) y[i] = x[i];
}

void fill(double* y, double v, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) y[i] = v;
}

void scale(double* y, double a, const double* x, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) y[i] = a * x[i];
}

void axpy(double* y, double a, const double* x, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void add(double* z, const double* x, const double* y, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) z[i] = x[i] + y[i];
}

void sub(double* z, const double* x, const double* y, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) z[i] = x[i] - y[i];
}

void mul(double* z, const double* x, const double* y, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) z[i] = x[i] * y[i];
}

void mul_add(double* z, const double* x, const double* y, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) z[i] += x[i] * y[i];
}

void mul_sub(double* z, const double* x, const double* y, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) z[i] -= x[i] * y[i];
}

void mul_scaled_add(double* z, double a, const double* x, const double* y, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) z[i] += a * x[i] * y[i];
}

void recip_mul(double* z, const double* x, const double* r, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) z[i] = x[i] / r[i];
}

void recip(double* z, const double* r, int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) z[i] = 1.0 / r[i];
}

void bracket_field(const double* C, int d, const double* xi, const double* eta, double* out,
                   int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    for (int a = 0; a < d; ++a) {
      double s = 0;
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) s += C[(a * d + b) * d + c] * xi[b * n + i] * eta[c * n + i];
      out[a * n + i] = s;
    }
  }
}

void ad_star_field(const double* C, int d, const double* xi, const double* mu, double* out,
                   int64_t n) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    for (int c = 0; c < d; ++c) {
      double s = 0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) s += mu[a * n + i] * C[(a * d + b) * d + c] * xi[b * n + i];
      out[c * n + i] = s;
    }
  }
}

void spectral_ik(double* c, const double* k, int64_t nc) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < nc; ++i) {
    const double re = c[2 * i], im = c[2 * i + 1];
    c[2 * i] = -k[i] * im;
    c[2 * i + 1] = k[i] * re;
  }
}

void spectral_mask(double* c, const unsigned char* mask, int64_t nc) {
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < nc; ++i) {
    if (!mask[i]) {
      c[2 * i] = 0;
      c[2 * i + 1] = 0;
    }
  }
}

double sum(const double* x, int64_t n) {
  double s = 0;
  for (int64_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot_sum(const double* x, const double* y, int64_t n) {
  double s = 0;
  for (int64_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double max_abs(const double* x, int64_t n) {
  double m = 0;
  for (int64_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double max_abs_diff(const double* x, const double* y, int64_t n) {
  double m = 0;
  for (int64_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

bool all_finite(const double* x, int64_t n) {
  for (int64_t i = 0; i < n; ++i)
    if (!std::isfinite(x[i])) return false;
  return true;
}

}  // namespace alp::fields::kernels
