#include "alp/kernels.hpp"
#include "alp/models.hpp"

namespace alp::models {

namespace ops = fields::ops;
using fields::kernels::mul_scaled_add;
using fields::lie_idx;

Field bb_tensor(const LieAlgebraSpec& s, const LieTwoForm& B) {
  const Grid& g = B.grid();
  const int d = g.dim, n2 = g.two_form_comps();
  Field T(g, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if (k == i || k == j) continue;
        double s1, s2;
        const int c1 = ops::two_comp(d, i, k, s1);
        const int c2 = ops::two_comp(d, j, k, s2);
        for (int a = 0; a < s.dim; ++a)
          for (int b = 0; b < s.dim; ++b)
            if (s.k(a, b) != 0.0)
              mul_scaled_add(T.comp(i * d + j), s.k(a, b) * s1 * s2, B.comp(a * n2 + c1),
                             B.comp(b * n2 + c2), g.n());
      }
  return T;
}

Field outer_tensor(const VectorField& u, const OneForm& m) {
  const Grid& g = u.grid();
  const int d = g.dim;
  Field T(g, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      fields::kernels::mul(T.comp(i * d + j), u.comp(i), m.comp(j), g.n());
  return T;
}

void add_to_diag(Field& T, const ScalarField& q) {
  const Grid& g = T.grid();
  const int d = g.dim;
  for (int i = 0; i < d; ++i)
    fields::kernels::axpy(T.comp(i * d + i), 1.0, q.comp(0), g.n());
}

OneForm div_tensor(const Field& T) {
  const Grid& g = T.grid();
  const int d = g.dim;
  OneForm out(g, d);
  std::vector<double> tmp(g.n());
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      fields::deriv_comp(g, T.comp(i * d + j), tmp.data(), i);
      fields::kernels::axpy(out.comp(j), 1.0, tmp.data(), g.n());
    }
  return out;
}

}  // namespace alp::models
