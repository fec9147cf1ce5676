#pragma once

#include <array>
#include <string>
#include <vector>

#include "heatflux/greens.hpp"
#include "heatflux/materials.hpp"
#include "heatflux/quadrature.hpp"

namespace heatflux {

// Two dipoles in vacuum, particle 1 thermalized at T1, particle 2 cold.
struct PairConfig {
  Particle particle1;
  Particle particle2;
  double d = 0.0;   // center-to-center separation (m)
  double T1 = 0.0;  // emitter temperature (K)
};

// Throws ConfigError on invalid fields; material validation included.
void validate_pair(const PairConfig& cfg);

// Point-dipole validity advisories (radius vs separation and vs thermal
// wavelength). Empty when the configuration is comfortably in regime.
std::vector<std::string> validity_warnings(const PairConfig& cfg,
                                           const PhysicalConstants& pc = {});

struct StationaryResult {
  double value = 0.0;
  bool absolute = false;  // false: normalized per particle volume(s)
  // Distance-power decomposition {d^-2, d^-4, d^-6}. Resolved for the vacuum
  // closed forms; an opaque environment trace reports only the total.
  std::array<double, 3> channels{};
  bool channels_resolved = true;
};

// Spectral density of the stationary transfer at frequency omega,
// per unit omega, normalized per V1 V2 (or absolute with the flag).
double stationary_flux_spectrum(const PairConfig& cfg, double omega,
                                bool absolute = false,
                                const PhysicalConstants& pc = {});

// Frequency integral of the spectrum: the stationary heat transfer H_st.
// omega_max > 0 overrides the automatic upper spectral cutoff.
StationaryResult stationary_flux(const PairConfig& cfg, bool absolute = false,
                                 double rel_tol = 1e-8,
                                 const PhysicalConstants& pc = {},
                                 double omega_max = 0.0);

// Environment-generic form built on the field-correlator trace; reduces to
// stationary_flux for the vacuum trace.
StationaryResult stationary_flux_generic(const PairConfig& cfg,
                                         const EnvTraceProvider& env,
                                         bool absolute = false,
                                         double rel_tol = 1e-8,
                                         const PhysicalConstants& pc = {});

// Stationary magnetic-field energy density at the position of particle 2,
// normalized per V1 (d^-2 and d^-4 channels only).
StationaryResult stationary_energy_density_H(const PairConfig& cfg,
                                             bool absolute = false,
                                             double rel_tol = 1e-8,
                                             const PhysicalConstants& pc = {});

// Stationary electric-field energy density at the position of particle 2,
// normalized per V1 (adds the d^-6 near-field channel).
StationaryResult stationary_energy_density_E0(const PairConfig& cfg,
                                              bool absolute = false,
                                              double rel_tol = 1e-8,
                                              const PhysicalConstants& pc = {});

namespace detail {

// Shared quadrature setup for spectra of this pair: cutoffs spanning both
// resonances and the thermal window, peak panels on each resonance.
struct PairQuad {
  QuadSpec spec;
  std::vector<PeakHint> peaks;
  AlphaFactors a1, a2;
  double omega_T = 0.0;
};
// omega_max_override > 0 replaces the automatic upper cutoff (it must still
// exceed the lower cutoff).
PairQuad make_pair_quad(const PairConfig& cfg, double rel_tol,
                        const PhysicalConstants& pc,
                        double omega_max_override = 0.0);

} // namespace detail

} // namespace heatflux
