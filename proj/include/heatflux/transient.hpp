#pragma once

#include <utility>
#include <vector>

#include "heatflux/constants.hpp"
#include "heatflux/materials.hpp"
#include "heatflux/quadrature.hpp"
#include "heatflux/stationary.hpp"

namespace heatflux {

// Retarded-time flux decomposition at tau = t - d/c. All three quantities
// vanish identically for tau < 0 (no field has reached the receiver yet);
// total = udot + transfer by construction.
struct FluxDecomposition {
  double tau = 0.0;
  double total = 0.0;    // full energy flux into the receiver volume
  double udot = 0.0;     // non-dissipative electric energy change
  double transfer = 0.0; // dissipative heat transfer rate
};

// S = int_0^tau e^{-gamma s/2} sin(beta s) sin(omega s) ds and
// C = int_0^tau e^{-gamma s/2} sin(beta s) cos(omega s) ds in closed form.
struct DampedSineIntegrals {
  double S = 0.0;
  double C = 0.0;
};

// Requires tau > 0, gamma > 0, beta > 0; any real omega (S is odd and C is
// even under omega -> -omega, and omega = 0 gives S = 0).
DampedSineIntegrals damped_sine_integrals(double omega, double tau,
                                          double beta, double gamma);

struct ChannelParts {
  double transfer = 0.0; // part proportional to Im alpha_2 (dissipative)
  double energy = 0.0;   // part proportional to Re alpha_2 - alpha_inf
};

// The five distance channels of the time-integral kernel entering the
// transient flux at a single frequency.
struct KernelChannels {
  ChannelParts d2, d3, d4, d5, d6;

  double transfer_sum() const {
    return d2.transfer + d3.transfer + d4.transfer + d5.transfer + d6.transfer;
  }
  double energy_sum() const {
    return d2.energy + d3.energy + d4.energy + d5.energy + d6.energy;
  }
  double total() const { return transfer_sum() + energy_sum(); }
};

// Closed-form channel kernels for a receiving particle described by recv at
// separation d, evaluated at (omega, tau). Both parts of every channel are
// zero for tau < 0; tau = 0 (the wavefront arrival, where a delta pulse
// lives) is rejected with DomainError, as are omega <= 0 and d <= 0.
KernelChannels channel_kernels(double omega, double tau,
                               const AlphaFactors& recv, double d,
                               const PhysicalConstants& pc = {});

// Shared setup (material factors, spectral cutoffs, resonance hints, the
// stationary transfer used as the absolute error scale) for repeated
// evaluations at many tau. All returned flux quantities are normalized per
// unit volume product V1 V2 unless stated otherwise.
class TransientEvaluator {
 public:
  // omega_max > 0 overrides the automatic upper spectral cutoff.
  TransientEvaluator(const PairConfig& cfg, double rel_tol = 1e-8,
                     const PhysicalConstants& pc = {}, double omega_max = 0.0);

  // Spectral densities (integrands over omega) of the two flux parts,
  // normalized per V1 V2. Zero for tau < 0; DomainError at tau = 0.
  double udot_spectrum(double omega, double tau) const;
  double transfer_spectrum(double omega, double tau) const;

  // Flux decomposition at one retarded time, integrating both spectra over
  // the shared adaptive panels with oscillation hint 2 pi / tau.
  FluxDecomposition flux_at(double tau) const;

  // tau -> 0+ limits (udot0, transfer0), both positive; transfer0 scales as
  // d^-3 exactly.
  std::pair<double, double> limit_tau0() const;

  // Electric energy density at the receiver position (per V1; absolute gives
  // J m^-3). Magnetic density is stationary for all tau > 0.
  double energy_density_E0(double tau, bool absolute = false) const;
  double energy_density_H(double tau, bool absolute = false) const;

  // Time derivative of the electric energy inside the receiver volume,
  // d/dtau [V2 u_E0]; normalized per V1 V2 (absolute gives W).
  double ddt_uE0(double tau, bool absolute = false) const;

  // Stationary transfer per V1 V2, the large-tau limit of the total flux.
  double stationary_value() const { return h_st_; }

  const PairConfig& config() const { return cfg_; }

 private:
  struct TauCtx {
    double tau = 0.0;
    double eg = 0.0; // e^{-gamma2 tau / 2}
    double sb = 0.0; // sin(beta2 tau)
    double cb = 0.0; // cos(beta2 tau)
  };

  TauCtx tau_ctx(double tau) const;
  double transfer_integrand(double w, const TauCtx& t) const;
  double udot_integrand(double w, const TauCtx& t) const;
  double density_E0_integrand(double w, const TauCtx& t) const;
  double ddt_integrand(double w, const TauCtx& t) const;

  PairConfig cfg_;
  PhysicalConstants pc_;
  double rel_tol_;
  AlphaFactors a1_, a2_;
  double omega_T_ = 0.0;
  QuadSpec spec_;
  std::vector<PeakHint> peaks_;
  double inv_v1v2_ = 0.0;
  double vol_term_ = 0.0; // (V2 + 4 pi alpha_inf2) / (V1 V2)
  double h_st_ = 0.0;
  double uE0_scale_ = 0.0; // stationary electric density per V1
  double ddt_scale_ = 0.0; // envelope magnitude of ddt_uE0 per V1 V2
};

// One-shot wrappers; series work should construct a TransientEvaluator once.
FluxDecomposition flux_at(const PairConfig& cfg, double tau,
                          double rel_tol = 1e-8,
                          const PhysicalConstants& pc = {});
double udot_spectrum(const PairConfig& cfg, double omega, double tau,
                     const PhysicalConstants& pc = {});
double transfer_spectrum(const PairConfig& cfg, double omega, double tau,
                         const PhysicalConstants& pc = {});
double energy_density_E0(const PairConfig& cfg, double tau,
                         bool absolute = false, double rel_tol = 1e-8,
                         const PhysicalConstants& pc = {});
double energy_density_H(const PairConfig& cfg, double tau,
                        bool absolute = false, double rel_tol = 1e-8,
                        const PhysicalConstants& pc = {});
double ddt_uE0(const PairConfig& cfg, double tau, bool absolute = false,
               double rel_tol = 1e-8, const PhysicalConstants& pc = {});
std::pair<double, double> limit_tau0(const PairConfig& cfg,
                                     double rel_tol = 1e-8,
                                     const PhysicalConstants& pc = {});

} // namespace heatflux
