#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>
#include <filesystem>

namespace alp::liealg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Finite-dimensional Lie algebra given by structure constants C^a_{bc}
/// ([e_b, e_c] = C^a_{bc} e_a) plus an Ad-invariant inner product k.
/// Shipped algebras carry a faithful matrix representation so that group
/// elements, exp and Ad are available; file-loaded specs may omit it.
struct LieAlgebraSpec {
  std::string name;
  int dim = 0;
  std::vector<double> C;        // flat a*dim*dim + b*dim + c
  Mat k;                        // dim x dim, symmetric positive definite
  std::vector<Mat> generators;  // matrix rep of the basis; empty if none
  Mat gen_pinv;                 // maps vec(matrix) -> coordinates

  double c(int a, int b, int c_) const { return C[(a * dim + b) * dim + c_]; }
  void set_c(int a, int b, int c_, double v) { C[(a * dim + b) * dim + c_] = v; }
  bool has_rep() const { return !generators.empty(); }

  /// Matrix of the basis expansion sum_a xi^a G_a.
  Mat algebra_matrix(const Vec& xi) const;
  /// Coordinates of a matrix lying in the span of the generators.
  Vec coords_of(const Mat& m) const;

  static LieAlgebraSpec u1();
  static LieAlgebraSpec so3();
  static LieAlgebraSpec product(const LieAlgebraSpec& a, const LieAlgebraSpec& b);
  static LieAlgebraSpec from_file(const std::filesystem::path& path);

  void finalize();  // builds gen_pinv, checks sizes
};

struct GroupElement {
  Mat matrix;
  const LieAlgebraSpec* spec = nullptr;
};

/// [xi,eta]^a = C^a_{bc} xi^b eta^c
Vec lie_bracket(const LieAlgebraSpec& spec, const Vec& xi, const Vec& eta);

/// ad_xi as a matrix on coordinates, (ad_xi)^a_c = C^a_{bc} xi^b
Mat ad_matrix(const LieAlgebraSpec& spec, const Vec& xi);

/// <ad*_xi mu, eta> = <mu, [xi, eta]>
Vec ad_star(const LieAlgebraSpec& spec, const Vec& xi, const Vec& mu);

/// Matrix exponential by scaling-and-squaring with a truncated series.
Mat expm(const Mat& m);

GroupElement group_exp(const LieAlgebraSpec& spec, const Vec& xi);
GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupElement& g);

/// Ad_g xi in coordinates (g G(xi) g^-1 pulled back through the basis).
Vec Ad(const GroupElement& g, const Vec& xi);
/// <Ad*_g mu, eta> = <mu, Ad_g eta>
Vec Ad_star(const GroupElement& g, const Vec& mu);
/// Coordinate matrix of Ad_g.
Mat Ad_matrix(const GroupElement& g);

struct ValidationReport {
  double antisymmetry = 0;  // max |C^a_{bc} + C^a_{cb}|
  double jacobi = 0;        // max norm of the Jacobi sum
  double k_invariance = 0;  // max |k([e_a,e_b],e_c) + k(e_b,[e_a,e_c])|
  double rep_bracket = 0;   // max |[G_b,G_c] - C^a_{bc} G_a| when a rep exists
  bool pass(double tol = 1e-12) const {
    return antisymmetry <= tol && jacobi <= tol && k_invariance <= tol && rep_bracket <= 1e-10;
  }
};

ValidationReport validate_spec(const LieAlgebraSpec& spec);

}  // namespace alp::liealg
