#pragma once

#include <complex>

#include "heatflux/constants.hpp"

namespace heatflux {

// Single-oscillator Drude-Lorentz permittivity model
//   eps(w) = eps_inf - omegap^2 / (w^2 - omega0^2 + i gamma w).
struct DrudeLorentzParams {
  double eps_inf = 1.0; // dimensionless high-frequency constant
  double omega0 = 0.0;  // resonance frequency, rad/s
  double omegap = 0.0;  // plasma frequency, rad/s
  double gamma = 0.0;   // damping rate, rad/s
};

// Derived resonance quantities of the dipole polarizability.
//   omega0_alpha^2 = omega0^2 + omegap^2/(eps_inf+2)
//   beta^2         = omega0_alpha^2 - gamma^2/4
//   beta_tilde^2   = omega0^2 + omegap^2/(eps_inf-1) - gamma^2/4
//   alpha_inf      = (eps_inf-1)/(eps_inf+2) R^3
struct DerivedMaterial {
  double beta = 0.0;         // rad/s
  double beta_tilde = 0.0;   // rad/s
  double omega0_alpha = 0.0; // rad/s
  double alpha_inf = 0.0;    // m^3
};

struct Particle {
  DrudeLorentzParams material;
  double radius = 0.0; // m
  double volume = 0.0; // m^3, 4 pi R^3 / 3

  static Particle make(const DrudeLorentzParams& m, double radius);
};

// omega_T = kB T / hbar, lambda_T = hbar c / (kB T); omega_T * lambda_T = c.
struct ThermalScales {
  double omega_T = 0.0;  // rad/s
  double lambda_T = 0.0; // m
};

// Delta weight (coefficient of delta(t)) and smooth part of the causal
// time-domain polarizability
//   alpha(t) = alpha_inf delta(t)
//            + [3 omegap^2 R^3 / ((eps_inf+2)^2 beta)] e^{-gamma t/2} sin(beta t) theta(t).
struct TimePolarizability {
  double delta_weight = 0.0; // m^3
  double smooth_part = 0.0;  // m^3/s
};

// Validates the model invariants (gamma > 0, eps_inf > 1/4, beta^2 > 0,
// beta_tilde^2 > 0, omega0 >= 0, omegap >= 0); throws ConfigError on violation.
void validate_material(const DrudeLorentzParams& p);

std::complex<double> permittivity(const DrudeLorentzParams& p, double omega);

// alpha(w) = (eps-1)/(eps+2) R^3, evaluated through the complex rational form.
std::complex<double> polarizability_freq(const Particle& pt, double omega);

// Throws ConfigError when beta^2 <= 0 or beta_tilde^2 <= 0 (out-of-model material).
DerivedMaterial derived_material(const Particle& pt);

TimePolarizability polarizability_time(const Particle& pt, double t);

// Throws DomainError for T <= 0.
ThermalScales thermal_scales(double T, const PhysicalConstants& pc = {});

// Thermal occupation 1/(e^{w/w_T} - 1), expm1-stable over w/w_T in [1e-12, 1e4].
double planck_factor(double omega, double omega_T);

// w / (e^{w/w_T} - 1) = w_T x/(e^x - 1); finite (-> w_T) as w -> 0.
double planck_times_omega(double omega, double omega_T);

// Precomputed scalar factors of the explicit real/imaginary polarizability
// forms, shared by all spectral kernels:
//   K      = 3 omegap^2 R^3 / (eps_inf+2)^2
//   den(w) = (w^2 - omega0_alpha^2)^2 + gamma^2 w^2
//   Im alpha          =  K gamma w / den
//   Re alpha - a_inf  = -K (w^2 - omega0_alpha^2) / den
struct AlphaFactors {
  double K = 0.0;         // m^3 s^-2
  double w0a2 = 0.0;      // omega0_alpha^2
  double gamma = 0.0;     // rad/s
  double beta = 0.0;      // rad/s
  double alpha_inf = 0.0; // m^3
  double volume = 0.0;    // m^3

  static AlphaFactors from(const Particle& pt);

  double den(double w) const {
    const double u = w * w - w0a2;
    return u * u + gamma * gamma * w * w;
  }
  // Im alpha / w; finite at w = 0 (-> K gamma / omega0_alpha^4).
  double im_alpha_over_omega(double w) const { return K * gamma / den(w); }
  double im_alpha(double w) const { return w * im_alpha_over_omega(w); }
  double re_alpha_minus_inf(double w) const {
    return -K * (w * w - w0a2) / den(w);
  }
};

} // namespace heatflux
