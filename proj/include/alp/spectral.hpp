#pragma once

#include <complex>
#include <vector>

#include "alp/field.hpp"

namespace alp::fields {

/// Spectral derivative along an axis; Nyquist modes on that axis are zeroed.
/// Exact for band-limited grid functions.
void deriv_comp(const Grid& g, const double* in, double* out, int axis);
Field deriv(const Field& f, int axis);

/// 2/3-rule dealiasing projection (zero all modes with any |freq| > n/3).
void dealias_inplace(Field& f);

/// Trigonometric-interpolation evaluator for off-grid points. Builds the full
/// complex spectrum of each component once; eval is exact for band-limited
/// fields.
class FourierInterpolant {
 public:
  explicit FourierInterpolant(const Field& f);
  /// Evaluate all components at physical position x (wrapped internally).
  void eval(const double* x, double* out) const;
  int ncomp() const { return ncomp_; }

 private:
  const Grid* grid_;
  int ncomp_;
  std::vector<std::vector<std::complex<double>>> spec_;  // per component, full box
};

}  // namespace alp::fields
