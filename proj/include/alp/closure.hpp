#pragma once

#include "alp/field.hpp"

namespace alp::models {

using fields::Field;
using fields::ScalarField;

/// Internal energy density eps(rho, S, r) = eps0(rho, S) + (1/2) rho_s(rho,S) |r|^2
/// with rho_s = sigma * rho. The quadratic r-dependence keeps the implicit
/// normal-velocity condition linear and satisfies the bijectivity requirement
/// whenever sigma < 1.
struct Closure {
  enum class Kind { polytropic, quadratic_test };
  Kind kind = Kind::polytropic;
  double K = 1.0;
  double gamma_ad = 5.0 / 3.0;
  double c_rho = 1.0, c_S = 1.0, c_cross = 0.2;  // quadratic_test coefficients
  double sigma = 0.0;                            // superfluid fraction, in [0,1)

  double eps0(double rho, double S) const;
  double deps0_drho(double rho, double S) const;
  double deps0_dS(double rho, double S) const;

  double rho_s(double rho, double /*S*/) const { return sigma * rho; }
  double drho_s_drho() const { return sigma; }

  double eps(double rho, double S, double r2) const { return eps0(rho, S) + 0.5 * rho_s(rho, S) * r2; }
  double mu_chem(double rho, double S, double r2) const {
    return deps0_drho(rho, S) + 0.5 * drho_s_drho() * r2;
  }
  double temperature(double rho, double S, double /*r2*/) const { return deps0_dS(rho, S); }
  double pressure(double rho, double S, double r2) const {
    return rho * mu_chem(rho, S, r2) + S * temperature(rho, S, r2) - eps(rho, S, r2);
  }

  // Grid versions; r2 may be null for models without counterflow.
  ScalarField eps_field(const ScalarField& rho, const ScalarField& S, const ScalarField* r2) const;
  ScalarField mu_chem_field(const ScalarField& rho, const ScalarField& S,
                            const ScalarField* r2) const;
  ScalarField temperature_field(const ScalarField& rho, const ScalarField& S,
                                const ScalarField* r2) const;
  ScalarField pressure_field(const ScalarField& rho, const ScalarField& S,
                             const ScalarField* r2) const;
  ScalarField rho_s_field(const ScalarField& rho, const ScalarField& S) const;
};

}  // namespace alp::models
