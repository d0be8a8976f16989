#include "alp/closure.hpp"

#include <cmath>

namespace alp::models {

double Closure::eps0(double rho, double S) const {
  if (kind == Kind::polytropic) return K * std::pow(rho, gamma_ad) * std::exp(S / rho);
  return 0.5 * c_rho * rho * rho + 0.5 * c_S * S * S + c_cross * rho * S;
}

double Closure::deps0_drho(double rho, double S) const {
  if (kind == Kind::polytropic)
    return K * std::exp(S / rho) * (gamma_ad * std::pow(rho, gamma_ad - 1.0) -
                                    S * std::pow(rho, gamma_ad - 2.0));
  return c_rho * rho + c_cross * S;
}

double Closure::deps0_dS(double rho, double S) const {
  if (kind == Kind::polytropic) return K * std::pow(rho, gamma_ad - 1.0) * std::exp(S / rho);
  return c_S * S + c_cross * rho;
}

namespace {

template <class F>
ScalarField map_field(const ScalarField& rho, const ScalarField& S, const ScalarField* r2, F&& f) {
  ScalarField out(rho.grid(), 1);
  const int64_t n = rho.n();
  const double* pr = rho.comp(0);
  const double* ps = S.comp(0);
  const double* p2 = r2 ? r2->comp(0) : nullptr;
  double* po = out.comp(0);
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) po[i] = f(pr[i], ps[i], p2 ? p2[i] : 0.0);
  return out;
}

}  // namespace

ScalarField Closure::eps_field(const ScalarField& rho, const ScalarField& S,
                               const ScalarField* r2) const {
  return map_field(rho, S, r2, [this](double r, double s, double q) { return eps(r, s, q); });
}

ScalarField Closure::mu_chem_field(const ScalarField& rho, const ScalarField& S,
                                   const ScalarField* r2) const {
  return map_field(rho, S, r2, [this](double r, double s, double q) { return mu_chem(r, s, q); });
}

ScalarField Closure::temperature_field(const ScalarField& rho, const ScalarField& S,
                                       const ScalarField* r2) const {
  return map_field(rho, S, r2,
                   [this](double r, double s, double q) { return temperature(r, s, q); });
}

ScalarField Closure::pressure_field(const ScalarField& rho, const ScalarField& S,
                                    const ScalarField* r2) const {
  return map_field(rho, S, r2, [this](double r, double s, double q) { return pressure(r, s, q); });
}

ScalarField Closure::rho_s_field(const ScalarField& rho, const ScalarField& S) const {
  return map_field(rho, S, nullptr, [this](double r, double s, double) { return rho_s(r, s); });
}

}  // namespace alp::models
