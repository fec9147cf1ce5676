#include <cmath>
#include <complex>

#include <doctest.h>

#include "heatflux/errors.hpp"
#include "heatflux/materials.hpp"

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

Particle sic_particle(double R = 5e-9) { return Particle::make(sic(), R); }

} // namespace

TEST_CASE("permittivity matches the rational form at spot frequencies") {
  const auto p = sic();
  const double w = 1.3e14;
  const std::complex<double> den(w * w - p.omega0 * p.omega0, p.gamma * w);
  const std::complex<double> expected =
      p.eps_inf - p.omegap * p.omegap / den;
  const auto got = permittivity(p, w);
  CHECK(got.real() == doctest::Approx(expected.real()).epsilon(1e-14));
  CHECK(got.imag() == doctest::Approx(expected.imag()).epsilon(1e-14));
}

TEST_CASE("static permittivity exceeds eps_inf for a bound oscillator") {
  const auto p = sic();
  const auto e0 = permittivity(p, 0.0);
  CHECK(e0.real() > p.eps_inf);
  CHECK(e0.imag() == doctest::Approx(0.0));
}

TEST_CASE("derived resonance frequencies for the reference material") {
  const auto dm = derived_material(sic_particle());
  // omega0_alpha^2 = omega0^2 + omegap^2/(eps_inf + 2)
  const double expected =
      std::sqrt(1.49e14 * 1.49e14 + 2.71e14 * 2.71e14 / 8.7);
  CHECK(dm.omega0_alpha == doctest::Approx(expected).epsilon(1e-14));
  CHECK(dm.omega0_alpha == doctest::Approx(1.75e14).epsilon(5e-3));
  CHECK(dm.beta ==
        doctest::Approx(std::sqrt(expected * expected -
                                  8.93e11 * 8.93e11 / 4.0))
            .epsilon(1e-14));
  // Underdamped by a wide margin: beta is within 2e-5 of omega0_alpha.
  CHECK(std::fabs(dm.beta / dm.omega0_alpha - 1.0) < 2e-5);
}

TEST_CASE("alpha_inf and volume scale as R^3") {
  const auto dm1 = derived_material(sic_particle(5e-9));
  const auto dm2 = derived_material(sic_particle(10e-9));
  CHECK(dm2.alpha_inf / dm1.alpha_inf == doctest::Approx(8.0).epsilon(1e-13));
  const double R = 5e-9;
  CHECK(dm1.alpha_inf ==
        doctest::Approx((6.7 - 1.0) / (6.7 + 2.0) * R * R * R)
            .epsilon(1e-14));
}

TEST_CASE("polarizability at the pole frequency is dominated by damping") {
  const auto pt = sic_particle();
  const auto dm = derived_material(pt);
  const auto at_pole = polarizability_freq(pt, dm.omega0_alpha);
  // At w = omega0_alpha the real part reduces to alpha_inf and the
  // imaginary part carries the K gamma w / den(w) resonance factor.
  const auto f = AlphaFactors::from(pt);
  CHECK(at_pole.real() == doctest::Approx(dm.alpha_inf).epsilon(1e-10));
  CHECK(at_pole.imag() ==
        doctest::Approx(f.im_alpha(dm.omega0_alpha)).epsilon(1e-10));
  CHECK(at_pole.imag() > std::fabs(at_pole.real()));
}

TEST_CASE("AlphaFactors reproduces the complex polarizability everywhere") {
  const auto pt = sic_particle();
  const auto f = AlphaFactors::from(pt);
  const auto dm = derived_material(pt);
  for (double w : {1e12, 5e13, 1.2e14, dm.omega0_alpha, 2.4e14, 1e15, 1e16}) {
    const auto a = polarizability_freq(pt, w);
    CHECK(a.imag() == doctest::Approx(f.im_alpha(w)).epsilon(1e-12));
    CHECK(a.real() - dm.alpha_inf ==
          doctest::Approx(f.re_alpha_minus_inf(w)).epsilon(1e-11));
  }
}

TEST_CASE("im_alpha_over_omega is finite and positive down to w = 0") {
  const auto f = AlphaFactors::from(sic_particle());
  const double at_zero = f.im_alpha_over_omega(0.0);
  CHECK(at_zero > 0.0);
  CHECK(at_zero == doctest::Approx(f.K * f.gamma / (f.w0a2 * f.w0a2))
                       .epsilon(1e-14));
  CHECK(f.im_alpha_over_omega(1e6) == doctest::Approx(at_zero).epsilon(1e-10));
}

TEST_CASE("time-domain polarizability: delta weight and damped sine") {
  const auto pt = sic_particle();
  const auto dm = derived_material(pt);
  const auto p = sic();
  const double K = 3.0 * p.omegap * p.omegap * std::pow(pt.radius, 3) /
                   ((p.eps_inf + 2.0) * (p.eps_inf + 2.0));
  for (double t : {1e-15, 1e-13, 3e-12}) {
    const auto a = polarizability_time(pt, t);
    CHECK(a.delta_weight == doctest::Approx(dm.alpha_inf).epsilon(1e-14));
    const double expected = K / dm.beta * std::exp(-p.gamma * t / 2.0) *
                            std::sin(dm.beta * t);
    CHECK(a.smooth_part == doctest::Approx(expected).epsilon(1e-12));
  }
  // Causality: the smooth part vanishes for t < 0.
  CHECK(polarizability_time(pt, -1e-15).smooth_part == 0.0);
}

TEST_CASE("thermal scales at the two reference temperatures") {
  const auto t300 = thermal_scales(300.0);
  CHECK(t300.omega_T == doctest::Approx(3.93e13).epsilon(5e-3));
  CHECK(t300.lambda_T == doctest::Approx(7.63e-6).epsilon(5e-3));
  const auto t30 = thermal_scales(30.0);
  CHECK(t30.omega_T == doctest::Approx(3.93e12).epsilon(5e-3));
  CHECK(t30.lambda_T == doctest::Approx(76.3e-6).epsilon(5e-3));
  // omega_T lambda_T = c identically.
  const PhysicalConstants pc{};
  CHECK(t300.omega_T * t300.lambda_T == doctest::Approx(pc.c).epsilon(1e-14));
  CHECK_THROWS_AS(thermal_scales(0.0), DomainError);
}

TEST_CASE("planck_factor is stable across twelve decades of argument") {
  const double wT = 3.93e13;
  // Small argument: 1/(e^x - 1) -> 1/x - 1/2.
  const double w_small = wT * 1e-9;
  CHECK(planck_factor(w_small, wT) ==
        doctest::Approx(wT / w_small - 0.5).epsilon(1e-9));
  // Large argument: e^{-x}.
  const double w_large = wT * 40.0;
  CHECK(planck_factor(w_large, wT) ==
        doctest::Approx(std::exp(-40.0)).epsilon(1e-10));
  // planck_times_omega -> omega_T as w -> 0.
  CHECK(planck_times_omega(0.0, wT) == doctest::Approx(wT).epsilon(1e-12));
  CHECK(planck_times_omega(wT, wT) ==
        doctest::Approx(wT / (std::exp(1.0) - 1.0)).epsilon(1e-12));
}

TEST_CASE("material validation rejects out-of-model parameters") {
  auto p = sic();
  p.gamma = 0.0;
  CHECK_THROWS_AS(validate_material(p), ConfigError);
  p = sic();
  p.gamma = 2.1 * derived_material(sic_particle()).omega0_alpha;
  // Overdamped: beta^2 < 0.
  CHECK_THROWS_AS(validate_material(p), ConfigError);
  p = sic();
  p.eps_inf = 0.2;
  CHECK_THROWS_AS(validate_material(p), ConfigError);
  CHECK_THROWS_AS(Particle::make(sic(), 0.0), ConfigError);
  CHECK_NOTHROW(validate_material(sic()));
}
