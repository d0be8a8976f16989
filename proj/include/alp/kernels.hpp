#pragma once

#include <cstdint>
#include <vector>

namespace alp::fields::kernels {

// Pointwise grid kernels, OpenMP-parallel over grid points. A serial mirror of
// each lives in kernels::serial and must stay element-for-element identical in
// arithmetic so tests can compare the two bit-for-bit.

void copy(double* y, const double* x, int64_t n);
void fill(double* y, double v, int64_t n);
void scale(double* y, double a, const double* x, int64_t n);       // y = a x
void axpy(double* y, double a, const double* x, int64_t n);        // y += a x
void add(double* z, const double* x, const double* y, int64_t n);  // z = x + y
void sub(double* z, const double* x, const double* y, int64_t n);  // z = x - y
void mul(double* z, const double* x, const double* y, int64_t n);  // z = x y
void mul_add(double* z, const double* x, const double* y, int64_t n);        // z += x y
void mul_sub(double* z, const double* x, const double* y, int64_t n);        // z -= x y
void mul_scaled_add(double* z, double a, const double* x, const double* y, int64_t n);
void recip_mul(double* z, const double* x, const double* r, int64_t n);      // z = x / r
void recip(double* z, const double* r, int64_t n);                           // z = 1 / r

/// out^a = C^a_{bc} xi^b eta^c pointwise; fields stored component-major with
/// component stride n. C is the flat structure constant array of dimension d.
void bracket_field(const double* C, int d, const double* xi, const double* eta, double* out,
                   int64_t n);
/// out_c = mu_a C^a_{bc} xi^b pointwise (coadjoint action on o*).
void ad_star_field(const double* C, int d, const double* xi, const double* mu, double* out,
                   int64_t n);

/// Complex spectrum scaling: (re,im) interleaved buffer of nc complex values,
/// multiplied in place by i*k (i.e. (re,im) -> (-k*im, k*re)).
void spectral_ik(double* c, const double* k, int64_t nc);
/// Zero the spectrum where mask == 0.
void spectral_mask(double* c, const unsigned char* mask, int64_t nc);

// Reductions are kept serial so results do not depend on the thread count.
double sum(const double* x, int64_t n);
double dot_sum(const double* x, const double* y, int64_t n);
double max_abs(const double* x, int64_t n);
double max_abs_diff(const double* x, const double* y, int64_t n);
bool all_finite(const double* x, int64_t n);

namespace serial {
void copy(double* y, const double* x, int64_t n);
void fill(double* y, double v, int64_t n);
void scale(double* y, double a, const double* x, int64_t n);
void axpy(double* y, double a, const double* x, int64_t n);
void add(double* z, const double* x, const double* y, int64_t n);
void sub(double* z, const double* x, const double* y, int64_t n);
void mul(double* z, const double* x, const double* y, int64_t n);
void mul_add(double* z, const double* x, const double* y, int64_t n);
void mul_sub(double* z, const double* x, const double* y, int64_t n);
void mul_scaled_add(double* z, double a, const double* x, const double* y, int64_t n);
void recip_mul(double* z, const double* x, const double* r, int64_t n);
void recip(double* z, const double* r, int64_t n);
void bracket_field(const double* C, int d, const double* xi, const double* eta, double* out,
                   int64_t n);
void ad_star_field(const double* C, int d, const double* xi, const double* mu, double* out,
                   int64_t n);
void spectral_ik(double* c, const double* k, int64_t nc);
void spectral_mask(double* c, const unsigned char* mask, int64_t nc);
}  // namespace serial

}  // namespace alp::fields::kernels
