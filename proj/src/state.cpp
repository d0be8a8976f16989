#include "alp/state.hpp"

#include <stdexcept>

#include "alp/kernels.hpp"

namespace alp::models {

void state_axpy(FluidState& y, double s, const FluidState& x) {
  if (y.kappa.has_value() != x.kappa.has_value() || y.gamma.has_value() != x.gamma.has_value() ||
      y.v_s.has_value() != x.v_s.has_value() || y.A.has_value() != x.A.has_value() ||
      y.n.has_value() != x.n.has_value())
    throw std::invalid_argument("state_axpy: engagement mismatch");
  auto op = [&](Field& yf, const Field& xf) {
    fields::kernels::axpy(yf.raw().data(), s, xf.raw().data(), int64_t(yf.raw().size()));
  };
  op(y.m, x.m);
  op(y.rho, x.rho);
  op(y.S, x.S);
  if (y.kappa) op(*y.kappa, *x.kappa);
  if (y.gamma) op(*y.gamma, *x.gamma);
  if (y.v_s) op(*y.v_s, *x.v_s);
  if (y.A) op(*y.A, *x.A);
  if (y.n) op(*y.n, *x.n);
}

FluidState state_zero_like(const FluidState& x) {
  FluidState z = x;
  z.for_each_field([](Field& f) { f.fill(0.0); });
  return z;
}

double state_max_abs_diff(const FluidState& a, const FluidState& b) {
  double m = 0;
  const FluidState* pb = &b;
  // walk both in lockstep through copies of the field list
  std::vector<const Field*> fa, fb;
  a.for_each_field([&](const Field& f) { fa.push_back(&f); });
  pb->for_each_field([&](const Field& f) { fb.push_back(&f); });
  if (fa.size() != fb.size()) throw std::invalid_argument("state_max_abs_diff: engagement mismatch");
  for (size_t i = 0; i < fa.size(); ++i)
    m = std::max(m, fields::kernels::max_abs_diff(fa[i]->raw().data(), fb[i]->raw().data(),
                                                  int64_t(fa[i]->raw().size())));
  return m;
}

bool state_all_finite(const FluidState& a) {
  bool ok = true;
  a.for_each_field([&](const Field& f) {
    ok = ok && fields::kernels::all_finite(f.raw().data(), int64_t(f.raw().size()));
  });
  return ok;
}

}  // namespace alp::models
