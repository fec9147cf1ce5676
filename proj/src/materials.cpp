#include "heatflux/materials.hpp"

#include <cmath>
#include <string>

#include "heatflux/errors.hpp"

namespace heatflux {

namespace {

double beta_sq(const DrudeLorentzParams& p) {
  return p.omega0 * p.omega0 + p.omegap * p.omegap / (p.eps_inf + 2.0) -
         0.25 * p.gamma * p.gamma;
}

double beta_tilde_sq(const DrudeLorentzParams& p) {
  // The pole term vanishes with omegap; this also keeps eps_inf = 1 finite.
  const double pole =
      p.omegap > 0.0 ? p.omegap * p.omegap / (p.eps_inf - 1.0) : 0.0;
  return p.omega0 * p.omega0 + pole - 0.25 * p.gamma * p.gamma;
}

} // namespace

void validate_material(const DrudeLorentzParams& p) {
  if (!(p.gamma > 0.0))
    throw ConfigError("material: gamma must be > 0 (lossless limit excluded)");
  if (!(p.eps_inf > 0.25))
    throw ConfigError("material: eps_inf must exceed 1/4");
  if (p.omega0 < 0.0 || p.omegap < 0.0)
    throw ConfigError("material: omega0 and omegap must be >= 0");
  if (!(beta_sq(p) > 0.0))
    throw ConfigError("material: beta^2 <= 0, outside the underdamped model");
  if (!(beta_tilde_sq(p) > 0.0))
    throw ConfigError("material: beta_tilde^2 <= 0, outside the underdamped model");
}

Particle Particle::make(const DrudeLorentzParams& m, double radius) {
  if (!(radius > 0.0)) throw ConfigError("particle: radius must be > 0");
  validate_material(m);
  Particle pt;
  pt.material = m;
  pt.radius = radius;
  pt.volume = 4.0 * pi * radius * radius * radius / 3.0;
  return pt;
}

std::complex<double> permittivity(const DrudeLorentzParams& p, double omega) {
  const std::complex<double> den(omega * omega - p.omega0 * p.omega0,
                                 p.gamma * omega);
  return std::complex<double>(p.eps_inf, 0.0) - p.omegap * p.omegap / den;
}

std::complex<double> polarizability_freq(const Particle& pt, double omega) {
  const std::complex<double> eps = permittivity(pt.material, omega);
  const double r3 = pt.radius * pt.radius * pt.radius;
  return (eps - 1.0) / (eps + 2.0) * r3;
}

DerivedMaterial derived_material(const Particle& pt) {
  const DrudeLorentzParams& p = pt.material;
  const double b2 = beta_sq(p);
  const double bt2 = beta_tilde_sq(p);
  if (!(b2 > 0.0) || !(bt2 > 0.0))
    throw ConfigError("derived_material: beta^2 or beta_tilde^2 <= 0");
  const double r3 = pt.radius * pt.radius * pt.radius;
  DerivedMaterial d;
  d.beta = std::sqrt(b2);
  d.beta_tilde = std::sqrt(bt2);
  d.omega0_alpha =
      std::sqrt(p.omega0 * p.omega0 + p.omegap * p.omegap / (p.eps_inf + 2.0));
  d.alpha_inf = (p.eps_inf - 1.0) / (p.eps_inf + 2.0) * r3;
  return d;
}

TimePolarizability polarizability_time(const Particle& pt, double t) {
  const DerivedMaterial d = derived_material(pt);
  TimePolarizability out;
  out.delta_weight = d.alpha_inf;
  if (t <= 0.0) return out;
  const DrudeLorentzParams& p = pt.material;
  const double r3 = pt.radius * pt.radius * pt.radius;
  const double epsp2 = p.eps_inf + 2.0;
  const double pre = 3.0 * p.omegap * p.omegap * r3 / (epsp2 * epsp2 * d.beta);
  out.smooth_part = pre * std::exp(-0.5 * p.gamma * t) * std::sin(d.beta * t);
  return out;
}

ThermalScales thermal_scales(double T, const PhysicalConstants& pc) {
  if (!(T > 0.0))
    throw DomainError("thermal_scales: temperature must be > 0, got " +
                      std::to_string(T));
  ThermalScales s;
  s.omega_T = pc.kB * T / pc.hbar;
  s.lambda_T = pc.hbar * pc.c / (pc.kB * T);
  return s;
}

double planck_factor(double omega, double omega_T) {
  return 1.0 / std::expm1(omega / omega_T);
}

double planck_times_omega(double omega, double omega_T) {
  const double x = omega / omega_T;
  if (x < 1e-8) return omega_T * (1.0 - 0.5 * x); // x/expm1(x) to O(x^2)
  return omega / std::expm1(x);
}

AlphaFactors AlphaFactors::from(const Particle& pt) {
  const DerivedMaterial d = derived_material(pt);
  const DrudeLorentzParams& p = pt.material;
  const double r3 = pt.radius * pt.radius * pt.radius;
  const double epsp2 = p.eps_inf + 2.0;
  AlphaFactors f;
  f.K = 3.0 * p.omegap * p.omegap * r3 / (epsp2 * epsp2);
  f.w0a2 = d.omega0_alpha * d.omega0_alpha;
  f.gamma = p.gamma;
  f.beta = d.beta;
  f.alpha_inf = d.alpha_inf;
  f.volume = pt.volume;
  return f;
}

} // namespace heatflux
