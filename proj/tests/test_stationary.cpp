#include <cmath>

#include <doctest.h>

#include "heatflux/errors.hpp"
#include "heatflux/greens.hpp"
#include "heatflux/materials.hpp"
#include "heatflux/stationary.hpp"

using namespace heatflux;

namespace {

PairConfig sic_pair(double d, double T) {
  DrudeLorentzParams p;
  p.eps_inf = 6.7;
  p.omega0 = 1.49e14;
  p.omegap = 2.71e14;
  p.gamma = 8.93e11;
  PairConfig cfg;
  cfg.particle1 = Particle::make(p, 5e-9);
  cfg.particle2 = Particle::make(p, 5e-9);
  cfg.d = d;
  cfg.T1 = T;
  return cfg;
}

} // namespace

TEST_CASE("pair validation rejects nonphysical inputs") {
  auto cfg = sic_pair(1e-7, 300.0);
  CHECK_NOTHROW(validate_pair(cfg));
  cfg.d = 0.0;
  CHECK_THROWS_AS(validate_pair(cfg), ConfigError);
  cfg = sic_pair(1e-7, 300.0);
  cfg.T1 = -5.0;
  CHECK_THROWS_AS(validate_pair(cfg), ConfigError);
}

TEST_CASE("validity advisories trip when the dipole picture degrades") {
  CHECK(validity_warnings(sic_pair(1e-7, 300.0)).empty());
  // Radius above d/10.
  CHECK(!validity_warnings(sic_pair(1.2e-8, 300.0)).empty());
}

TEST_CASE("reference stationary transfer in the near field") {
  const auto r = stationary_flux(sic_pair(1e-7, 300.0));
  CHECK(!r.absolute);
  CHECK(r.channels_resolved);
  CHECK(r.value == doctest::Approx(1.15e34).epsilon(0.02));
  CHECK(r.channels[0] + r.channels[1] + r.channels[2] ==
        doctest::Approx(r.value).epsilon(1e-12));
  // At 100 nm the d^-6 channel carries essentially all of the transfer.
  CHECK(r.channels[2] / r.value > 0.99);
}

TEST_CASE("reference stationary transfer in the far field") {
  const auto r = stationary_flux(sic_pair(1e-3, 30.0));
  CHECK(r.value == doctest::Approx(2.44e6).epsilon(0.02));
  // At 1 mm the d^-2 channel dominates.
  CHECK(r.channels[0] / r.value > 0.99);
}

TEST_CASE("absolute result scales by the two particle volumes") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const auto rn = stationary_flux(cfg, false);
  const auto ra = stationary_flux(cfg, true);
  CHECK(ra.absolute);
  CHECK(ra.value ==
        doctest::Approx(rn.value * cfg.particle1.volume *
                        cfg.particle2.volume)
            .epsilon(1e-12));
}

TEST_CASE("distance scaling exponents in the two regimes") {
  auto slope = [&](double d1, double d2, double T) {
    const double f1 = stationary_flux(sic_pair(d1, T)).value;
    const double f2 = stationary_flux(sic_pair(d2, T)).value;
    return std::log(f2 / f1) / std::log(d2 / d1);
  };
  CHECK(slope(1e-8, 1e-7, 300.0) == doctest::Approx(-6.0).epsilon(0.02));
  CHECK(slope(1e-2, 1e-1, 300.0) == doctest::Approx(-2.0).epsilon(0.02));
}

TEST_CASE("generic environment route agrees with the closed vacuum route") {
  for (double d : {1e-7, 1e-5, 1e-3}) {
    const auto cfg = sic_pair(d, 300.0);
    const auto direct = stationary_flux(cfg);
    const auto generic = stationary_flux_generic(cfg, VacuumEnv{});
    CHECK(generic.value == doctest::Approx(direct.value).epsilon(1e-10));
    // The opaque-environment route reports only the total.
    CHECK(!generic.channels_resolved);
  }
}

TEST_CASE("spectrum is nonnegative and peaks at the dressed resonance") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const auto dm = derived_material(cfg.particle2);
  const double at_res = stationary_flux_spectrum(cfg, dm.omega0_alpha);
  CHECK(at_res > 0.0);
  for (double w : {1e12, 1e13, 1e14, 2e14, 1e15}) {
    const double s = stationary_flux_spectrum(cfg, w);
    CHECK(s >= 0.0);
    CHECK(s <= at_res);
  }
  // Detuning by many linewidths collapses the spectrum by orders of magnitude.
  CHECK(stationary_flux_spectrum(cfg, 1.3 * dm.omega0_alpha) < 1e-3 * at_res);
}

TEST_CASE("stationary energy densities are positive and near-field dominated") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const auto e0 = stationary_energy_density_E0(cfg);
  const auto h = stationary_energy_density_H(cfg);
  CHECK(e0.value > 0.0);
  CHECK(h.value > 0.0);
  // The electric density carries the d^-6 channel the magnetic one lacks.
  CHECK(e0.channels[2] > 0.0);
  CHECK(h.channels[2] == 0.0);
}

TEST_CASE("omega_max override truncates the spectral integral") {
  const auto cfg = sic_pair(1e-7, 300.0);
  const auto full = stationary_flux(cfg);
  const auto dm = derived_material(cfg.particle2);
  // Cutting just above the resonance keeps nearly all of the transfer.
  const auto cut =
      stationary_flux(cfg, false, 1e-8, PhysicalConstants{},
                      dm.omega0_alpha + 40.0 * cfg.particle2.material.gamma);
  CHECK(cut.value == doctest::Approx(full.value).epsilon(1e-3));
  CHECK(cut.value < full.value);
  // An override below the lower cutoff is rejected.
  CHECK_THROWS_AS(stationary_flux(cfg, false, 1e-8, PhysicalConstants{}, 1e-9),
                  ConfigError);
}
