#pragma once

#include <vector>

#include "heatflux/constants.hpp"
#include "heatflux/stationary.hpp"

namespace heatflux {

// Retarded-time grid with the three flux observables, normalized per V1 V2.
struct TimeSeries {
  std::vector<double> taus; // strictly increasing (s)
  std::vector<double> total;
  std::vector<double> udot;
  std::vector<double> transfer;
};

enum class FluxChannel { total, udot, transfer };

struct ExtremumPoint {
  double tau = 0.0;
  double value = 0.0;
};

// Located maxima/minima of one observable and the oscillation averages,
// estimated per the midpoint rule: positions (tau_max + tau_min)/2 and
// values halfway between adjacent extremum values.
struct ExtremaSet {
  std::vector<ExtremumPoint> maxima;
  std::vector<ExtremumPoint> minima;
  std::vector<ExtremumPoint> averages;
};

// Parameters of the closed-form flux-maxima model
//   H_st (1 - e^{-gamma tau}) + tau^{3/4} (a e^{-gamma tau} + b e^{-gamma tau/2}),
// pinned so the model peaks at (tau_max, phi_max).
struct FitParams {
  double a = 0.0; // J s^-1 m^-6 s^-3/4
  double b = 0.0; // J s^-1 m^-6 s^-3/4
  double tau_max = 0.0;
  double phi_max = 0.0;
  double H_st = 0.0;
  double gamma = 0.0; // relaxation rate entering the exponentials (rad/s)
};

// Computes the flux decomposition on a uniform tau grid. The step is 1/64th
// (or 1/samples_per_period) of the resonance period 2 pi / omega0_alpha of
// the receiving particle; below 100 K the step also resolves the thermal
// time 1/(4 omega_T) when that is shorter. Grid evaluation parallelizes over
// tau with the worker count capped by HEATFLUX_THREADS; output ordering is
// deterministic.
TimeSeries flux_series(const PairConfig& cfg, double tau_min, double tau_max,
                       int samples_per_period = 64, double rel_tol = 1e-8,
                       const PhysicalConstants& pc = {},
                       double omega_max = 0.0);

// Locates local extrema by sign changes of first differences, refined with
// a 3-point parabolic fit, then forms the midpoint averages. When a
// positive period_hint is given and the series spans at least 3 periods,
// finding fewer than 2 extrema throws TooCoarse; the hint also enforces the
// >= 16 samples/period precondition.
ExtremaSet find_extrema(const TimeSeries& s,
                        FluxChannel channel = FluxChannel::total,
                        double period_hint = 0.0);

// Exponential relaxation of the oscillation-averaged total flux:
// H_st (1 - e^{-gamma tau}).
double flux_average_model(double h_st, double gamma, double tau);

// Pins the two free amplitudes of the maxima model from the observed global
// maximum. Throws DegenerateFit when gamma*tau_max is within 1e-6 of 3/2
// (the b denominator vanishes) and DomainError for tau_max <= 0.
FitParams fit_max_params(double tau_max, double phi_max, double h_st,
                         double gamma);

// The maxima model itself; tends to H_st for large tau and to 0 for
// tau -> 0+.
double flux_max_model(const FitParams& fp, double tau);

// Oscillatory near-field approximation: average model minus
// eta(tau) cos(omega0_alpha tau) with eta = tau^{3/4}(a e^{-gamma tau} +
// b e^{-gamma tau/2}). Touches the maxima model at cos = -1.
double near_field_approx(const FitParams& fp, double omega0_alpha, double tau);

struct FarFieldApprox {
  double value = 0.0;
  // The closed form is not applicable for extremely small tau; flagged when
  // tau <= pi / (2 omega0_alpha).
  bool out_of_validity = false;
};

// Far-field approximation H_st (1 - e^{-gamma tau})
//   - (gamma / (2 omega0_alpha)) H_st sin(2 omega0_alpha tau),
// oscillating at half the near-field period.
FarFieldApprox far_field_approx(double h_st, double gamma,
                                double omega0_alpha, double tau);

} // namespace heatflux
