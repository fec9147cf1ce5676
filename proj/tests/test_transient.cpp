#include <cmath>

#include <doctest.h>

#include "heatflux/errors.hpp"
#include "heatflux/materials.hpp"
#include "heatflux/transient.hpp"
#include "heatflux/validation.hpp"

using namespace heatflux;

namespace {

DrudeLorentzParams sic() {
  DrudeLorentzParams p;
  p.eps_inf = 6.7;
  p.omega0 = 1.49e14;
  p.omegap = 2.71e14;
  p.gamma = 8.93e11;
  return p;
}

PairConfig sic_pair(double d, double T) {
  PairConfig cfg;
  cfg.particle1 = Particle::make(sic(), 5e-9);
  cfg.particle2 = Particle::make(sic(), 5e-9);
  cfg.d = d;
  cfg.T1 = T;
  return cfg;
}

} // namespace

TEST_CASE("damped sine integrals: analytic limits and symmetries") {
  const double beta = 1.75e14, gamma = 8.93e11;
  const double W = beta * beta + 0.25 * gamma * gamma;

  SUBCASE("omega = 0 reduces to the plain damped-sine antiderivative") {
    for (double tau : {1e-14, 5e-13, 4e-12}) {
      const auto r = damped_sine_integrals(0.0, tau, beta, gamma);
      CHECK(r.S == 0.0);
      const double eg = std::exp(-0.5 * gamma * tau);
      const double expected =
          (beta - eg * (beta * std::cos(beta * tau) +
                        0.5 * gamma * std::sin(beta * tau))) /
          W;
      CHECK(r.C == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  SUBCASE("late-time value of C at omega = 0 is beta / W") {
    const auto r = damped_sine_integrals(0.0, 100.0 / gamma, beta, gamma);
    CHECK(r.C == doctest::Approx(beta / W).epsilon(1e-12));
  }

  SUBCASE("short-time expansion: S ~ beta omega tau^3 / 3, C ~ beta tau^2 / 2") {
    const double tau = 1e-17, omega = 3e13;
    const auto r = damped_sine_integrals(omega, tau, beta, gamma);
    CHECK(r.S ==
          doctest::Approx(beta * omega * tau * tau * tau / 3.0).epsilon(1e-3));
    CHECK(r.C == doctest::Approx(beta * tau * tau / 2.0).epsilon(1e-3));
  }

  SUBCASE("S is odd and C is even under omega -> -omega") {
    for (double omega : {4e12, 1.75e14, 9e15}) {
      const auto plus = damped_sine_integrals(omega, 7e-13, beta, gamma);
      const auto minus = damped_sine_integrals(-omega, 7e-13, beta, gamma);
      CHECK(plus.S == doctest::Approx(-minus.S).epsilon(1e-14));
      CHECK(plus.C == doctest::Approx(minus.C).epsilon(1e-14));
    }
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(damped_sine_integrals(1e14, 0.0, beta, gamma),
                    DomainError);
    CHECK_THROWS_AS(damped_sine_integrals(1e14, -1e-15, beta, gamma),
                    DomainError);
    CHECK_THROWS_AS(damped_sine_integrals(1e14, 1e-13, 0.0, gamma),
                    DomainError);
    CHECK_THROWS_AS(damped_sine_integrals(1e14, 1e-13, beta, 0.0),
                    DomainError);
  }
}

TEST_CASE("channel kernels: domain guards and pre-arrival zeros") {
  const auto recv = AlphaFactors::from(Particle::make(sic(), 5e-9));
  const auto k = channel_kernels(1.6e14, -1e-15, recv, 1e-7);
  CHECK(k.d2.transfer == 0.0);
  CHECK(k.d3.energy == 0.0);
  CHECK(k.total() == 0.0);
  CHECK_THROWS_AS(channel_kernels(1.6e14, 0.0, recv, 1e-7), DomainError);
  CHECK_THROWS_AS(channel_kernels(0.0, 1e-13, recv, 1e-7), DomainError);
  CHECK_THROWS_AS(channel_kernels(1.6e14, 1e-13, recv, 0.0), DomainError);
}

TEST_CASE("production spectra equal the channel-kernel sums") {
  // The production integrands fold the Planck factor and the emitter
  // polarizability into consolidated per-distance-power brackets; here they
  // are rebuilt from the independently coded per-channel kernels plus the
  // volume and alpha_inf terms, at 500 random (omega, tau) points per
  // configuration.
  const PhysicalConstants pc{};
  detail::SplitMix64 rng{20260816ull};

  for (const auto& [d, T] : {std::pair{1e-7, 300.0}, std::pair{1e-3, 30.0}}) {
    const auto cfg = sic_pair(d, T);
    const TransientEvaluator ev(cfg);
    const auto a1 = AlphaFactors::from(cfg.particle1);
    const auto a2 = AlphaFactors::from(cfg.particle2);
    const double wT = thermal_scales(T, pc).omega_T;
    const double v1 = cfg.particle1.volume, v2 = cfg.particle2.volume;
    const double gamma = cfg.particle2.material.gamma;
    const double c = pc.c;
    // Sample within the spectral window the integrator actually visits.
    // Beyond the upper cutoff the Planck tail drives intermediate products
    // toward the underflow range, where the two assembly orders stop being
    // comparable at a relative tolerance.
    const double w_hi =
        default_cutoffs(T, derived_material(cfg.particle2), gamma, pc).second;

    for (int i = 0; i < 500; ++i) {
      const double w = rng.log_uniform(1e12, w_hi);
      const double tau = rng.log_uniform(0.01, 30.0) / gamma;

      const auto k = channel_kernels(w, tau, a2, d, pc);
      const double factor = 2.0 * pc.hbar / (pi * v1 * v2) *
                            planck_times_omega(w, wT) * a1.im_alpha(w) * w;

      // Transfer: the kernels' dissipative parts carry everything.
      const double exp_t = factor * k.transfer_sum();
      const double got_t = ev.transfer_spectrum(w, tau);
      const double env_t =
          std::fabs(factor) *
          (std::fabs(k.d2.transfer) + std::fabs(k.d3.transfer) +
           std::fabs(k.d4.transfer) + std::fabs(k.d5.transfer) +
           std::fabs(k.d6.transfer));
      CHECK(std::fabs(got_t - exp_t) <=
            1e-9 * std::max(std::fabs(exp_t), 1e-7 * env_t) + 1e-300);

      // Energy change: kernel dispersive parts plus the volume and
      // instantaneous-response bracket.
      const double d4 = d * d * d * d, d5 = d4 * d, d6 = d5 * d;
      const double brk = -w * w * w * std::sin(w * tau) / d4 +
                         3.0 * c * w * w * std::cos(w * tau) / d5 +
                         3.0 * c * c * w * std::sin(w * tau) / d6;
      const double brk_env = w * w * w / d4 + 3.0 * c * w * w / d5 +
                             3.0 * c * c * w / d6;
      const double cvol = (v2 + 4.0 * pi * a2.alpha_inf) / (v1 * v2) *
                          pc.hbar / (pi * pi * c * c) *
                          planck_times_omega(w, wT) * a1.im_alpha_over_omega(w);
      const double exp_u = factor * k.energy_sum() + cvol * brk;
      const double got_u = ev.udot_spectrum(w, tau);
      const double env_u =
          std::fabs(factor) *
              (std::fabs(k.d2.energy) + std::fabs(k.d3.energy) +
               std::fabs(k.d4.energy) + std::fabs(k.d5.energy) +
               std::fabs(k.d6.energy)) +
          std::fabs(cvol) * brk_env;
      CHECK(std::fabs(got_u - exp_u) <=
            1e-9 * std::max(std::fabs(exp_u), 1e-7 * env_u) + 1e-300);
    }
  }
}

TEST_CASE("causality and the wavefront singularity") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const TransientEvaluator ev(cfg);
  const auto before = ev.flux_at(-1e-15);
  CHECK(before.total == 0.0);
  CHECK(before.udot == 0.0);
  CHECK(before.transfer == 0.0);
  CHECK(ev.udot_spectrum(1e14, -1e-15) == 0.0);
  CHECK(ev.transfer_spectrum(1e14, -1e-15) == 0.0);
  CHECK(ev.energy_density_E0(-1e-15) == 0.0);
  CHECK(ev.ddt_uE0(-1e-15) == 0.0);
  CHECK_THROWS_AS(ev.flux_at(0.0), DomainError);
  CHECK_THROWS_AS(ev.udot_spectrum(1e14, 0.0), DomainError);
  // The free-function wrapper short-circuits without quadrature setup.
  const auto free_before = flux_at(cfg, -2e-14);
  CHECK(free_before.total == 0.0);
}

TEST_CASE("decomposition identity and approach to the stationary value") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const TransientEvaluator ev(cfg);
  const double gamma = cfg.particle2.material.gamma;
  for (double tau : {1e-14, 3e-13, 2e-12}) {
    const auto r = ev.flux_at(tau);
    CHECK(r.total == r.udot + r.transfer);
  }
  const auto late = ev.flux_at(20.0 / gamma);
  CHECK(std::fabs(late.total - ev.stationary_value()) <
        1e-2 * ev.stationary_value());
}

TEST_CASE("wavefront limits: positivity, d^-3 scaling, continuity") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const TransientEvaluator ev(cfg);
  const auto [udot0, transfer0] = ev.limit_tau0();
  CHECK(udot0 > 0.0);
  CHECK(transfer0 > 0.0);

  auto cfg2 = cfg;
  cfg2.d = 2e-7;
  const auto [udot0_2d, transfer0_2d] = TransientEvaluator(cfg2).limit_tau0();
  CHECK(transfer0_2d / transfer0 == doctest::Approx(0.125).epsilon(1e-10));

  // The kernel continuity check needs a tighter absolute budget than the
  // default evaluator (flux_at scales its tolerance with the stationary
  // value, which exceeds the wavefront transfer by orders of magnitude)
  // and an intermediate separation: the flux departs from the wavefront
  // limits linearly in c tau / d, so in the near field the comparison
  // window at tau = 1e-17 s closes.
  const TransientEvaluator fine(sic_pair(1e-5, 300.0), 1e-10);
  const auto [udot0f, transfer0f] = fine.limit_tau0();
  const auto near_front = fine.flux_at(1e-17);
  CHECK(near_front.transfer == doctest::Approx(transfer0f).epsilon(0.01));
  CHECK(near_front.udot == doctest::Approx(udot0f).epsilon(0.01));
}

TEST_CASE("transfer oscillation is periodic at late times") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const TransientEvaluator ev(cfg);
  const double gamma = cfg.particle2.material.gamma;
  const double w0a = derived_material(cfg.particle2).omega0_alpha;
  const double period = 2.0 * pi / w0a;

  // Recurrence over one period. The second difference cancels the slow
  // envelope relaxation (about 1 percent of the ringing amplitude per
  // period here), which a direct one-period comparison would report as
  // aperiodicity; what remains is genuine period or phase error.
  for (double tau : {5.0 / gamma, 6.5 / gamma, 8.0 / gamma}) {
    const double h0 = ev.flux_at(tau).transfer;
    const double h1 = ev.flux_at(tau + period).transfer;
    const double h2 = ev.flux_at(tau + 2.0 * period).transfer;
    CHECK(std::fabs(h0 - 2.0 * h1 + h2) / ev.stationary_value() < 2e-3);
  }

  // Maxima sit at odd multiples of pi / omega0_alpha throughout the late
  // window, pinning the oscillation phase in absolute terms.
  for (int n : {156, 176, 196}) {
    const double tau_n = pi * (2 * n - 1) / w0a;
    const double at_max = ev.flux_at(tau_n).transfer;
    CHECK(at_max > ev.flux_at(tau_n - 0.25 * period).transfer);
    CHECK(at_max > ev.flux_at(tau_n + 0.25 * period).transfer);
  }
}

TEST_CASE("magnetic energy density is stationary from the wavefront on") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const TransientEvaluator ev(cfg);
  CHECK(ev.energy_density_H(-1e-15) == 0.0);
  const double early = ev.energy_density_H(1e-15);
  const double late = ev.energy_density_H(1.0);
  CHECK(early == doctest::Approx(late).epsilon(1e-12));
  CHECK(early > 0.0);
}

TEST_CASE("energy derivative fades and isolates the volume term") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const TransientEvaluator ev(cfg);
  const double gamma = cfg.particle2.material.gamma;

  // Large tau: the settling derivative no longer contributes.
  CHECK(std::fabs(ev.ddt_uE0(100.0 / gamma)) < 1e-3 * ev.stationary_value());

  // Receiver with alpha_2 identically zero (eps_inf = 1, no oscillator
  // strength): the whole udot flux reduces to the volume term, which is
  // exactly what ddt_uE0 integrates. ddt_uE0 itself does not depend on the
  // receiver response, so the original evaluator supplies the reference.
  DrudeLorentzParams inert;
  inert.eps_inf = 1.0;
  inert.omega0 = 1.49e14;
  inert.omegap = 0.0;
  inert.gamma = 8.93e11;
  auto cfg2 = cfg;
  cfg2.particle2 = Particle::make(inert, 5e-9);
  const TransientEvaluator ev2(cfg2);
  for (double tau : {3e-14, 1.2e-13}) {
    const auto r = ev2.flux_at(tau);
    CHECK(r.transfer == 0.0);
    CHECK(r.udot == doctest::Approx(ev.ddt_uE0(tau)).epsilon(1e-6));
  }
}
