#pragma once

#include <span>
#include <vector>

#include "alp/grid.hpp"

namespace alp::fields {

/// Grid function with ncomp components, stored component-major (SoA).
/// The same container backs scalars, vectors, one-forms, o-valued fields and
/// (skew) two-forms; the operations in ops.hpp fix the component meaning.
class Field {
 public:
  Field() = default;
  Field(const Grid& g, int ncomp) : grid_(&g), ncomp_(ncomp), data_(size_t(ncomp) * g.n(), 0.0) {}

  const Grid& grid() const { return *grid_; }
  int ncomp() const { return ncomp_; }
  int64_t n() const { return grid_->n(); }

  double* comp(int c) { return data_.data() + size_t(c) * n(); }
  const double* comp(int c) const { return data_.data() + size_t(c) * n(); }
  std::span<double> comp_span(int c) { return {comp(c), size_t(n())}; }
  std::span<const double> comp_span(int c) const { return {comp(c), size_t(n())}; }

  double& at(int c, int64_t i) { return data_[size_t(c) * n() + i]; }
  double at(int c, int64_t i) const { return data_[size_t(c) * n() + i]; }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

 private:
  const Grid* grid_ = nullptr;
  int ncomp_ = 0;
  std::vector<double> data_;
};

// Semantic aliases; components per alias:
//   ScalarField: 1
//   VectorField / OneForm: grid.dim
//   TwoForm: 1 in 2D (the (1,2) slot), 3 in 3D ordered (23), (31), (12)
//   LieFunc: algebra dim           (o- or o*-valued functions)
//   LieOneForm / DualLieVec: algebra dim x grid dim, index a*dim + i
//   LieTwoForm: algebra dim x two_form_comps
using ScalarField = Field;
using VectorField = Field;
using OneForm = Field;
using TwoForm = Field;
using LieFunc = Field;
using LieOneForm = Field;
using DualLieVec = Field;
using LieTwoForm = Field;

inline int lie_idx(int dim_space, int a, int i) { return a * dim_space + i; }

}  // namespace alp::fields
