#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heatflux/constants.hpp"
#include "heatflux/stationary.hpp"

namespace heatflux {

// Outcome of one brute-force cross-check. max_rel_err is normalized to the
// check's own tolerance ladder where several thresholds apply (then pass
// means max_rel_err <= 1); for single-tolerance oracles it is the plain
// relative error and pass compares it against that tolerance.
struct OracleReport {
  std::string name;
  std::size_t samples = 0;
  double max_rel_err = 0.0;
  bool pass = false;
  std::string worst_case;
};

inline constexpr std::uint64_t kDefaultOracleSeed = 0;

// Damped-sine overlap integrals: closed forms against a direct composite
// Gauss-Kronrod quadrature of e^{-gamma s/2} sin(beta s) {sin,cos}(omega s)
// over [0, tau], evaluated in extended precision so cancellation-heavy
// detuned samples stay resolvable. Tolerance 1e-8 relative with an absolute
// floor of 1e-20 on the difference.
OracleReport oracle_damped_integrals(std::size_t n_samples = 200,
                                     std::uint64_t seed = kDefaultOracleSeed);

// Per-channel kernels: rebuilds each distance channel from the intermediate
// building blocks (damped-sine integrals plus the oscillator kernel and its
// derivative) and compares against the consolidated forms used in
// production. Tolerance 1e-9 relative per channel.
OracleReport oracle_channel_reconstruction(std::size_t n_samples = 500,
                                           std::uint64_t seed = kDefaultOracleSeed);

// Green-function traces: explicit 3x3 matrix products Tr{G G^dagger} against
// the closed-form traces, plus invariance of the traces under rotation of
// the separation vector. Tolerance 1e-10 relative.
OracleReport oracle_gf_traces(std::size_t n_samples = 100,
                              std::uint64_t seed = kDefaultOracleSeed);

// Long-time limit: the transient total flux at tau = {20, 40, 80}/gamma2
// must approach the stationary transfer rate through the ladder
// {1e-2, 3e-3, 1e-3} with monotonically shrinking error, and the two
// independent stationary routes (folded spectrum vs generic trace form)
// must agree to 1e-10. max_rel_err is the worst threshold-normalized ratio.
OracleReport oracle_stationary_limit(const PairConfig& cfg,
                                     const PhysicalConstants& pc = {});

// Energy-density derivative: central finite differences of the local field
// energy density against the analytic time derivative at each requested
// tau. Tolerance 1e-4 relative; the step scales linearly with tau.
OracleReport oracle_energy_derivative(const PairConfig& cfg,
                                      std::span<const double> taus,
                                      const PhysicalConstants& pc = {});

// Runs the full suite at the contract sample counts. Deterministic for a
// fixed seed.
std::vector<OracleReport> run_all_oracles(const PairConfig& cfg,
                                          std::uint64_t seed = kDefaultOracleSeed,
                                          const PhysicalConstants& pc = {});

// Renders reports as aligned human-readable lines followed by
// machine-readable key=value records (one oracle per line).
std::string format_reports(const std::vector<OracleReport>& reports);

namespace detail {

// Deterministic 64-bit stream for reproducible sampling.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double log_uniform(double lo, double hi);
};

} // namespace detail

} // namespace heatflux
