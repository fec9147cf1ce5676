#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "heatflux/constants.hpp"
#include "heatflux/errors.hpp"
#include "heatflux/materials.hpp"
#include "heatflux/quadrature.hpp"

using namespace heatflux;

TEST_CASE("exponential integral to tight tolerance") {
  QuadSpec spec;
  spec.rel_tol = 1e-12;
  spec.omega_min = 1e-3;
  spec.omega_max = 50.0;
  const auto r = integrate([](double w) { return std::exp(-w); }, spec);
  CHECK(r.converged);
  const double expected = std::exp(-1e-3) - std::exp(-50.0);
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r.err_estimate <= 1e-10 * expected);
}

TEST_CASE("logarithmic integrand spanning decades") {
  QuadSpec spec;
  spec.rel_tol = 1e-10;
  spec.omega_min = 1.0;
  spec.omega_max = std::exp(2.0);
  const auto r = integrate([](double w) { return 1.0 / w; }, spec);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("narrow resonance resolved through peak hints") {
  const double w0 = 1e14, gamma = 1e11;
  QuadSpec spec;
  spec.rel_tol = 1e-10;
  spec.omega_min = 1e12;
  spec.omega_max = 1e16;
  const PeakHint peak{w0, gamma / 4.0};
  const auto lorentz = [&](double w) {
    const double u = w - w0;
    return (gamma / 2.0) / (u * u + gamma * gamma / 4.0);
  };
  const auto r = integrate(lorentz, spec, 0.0, std::span(&peak, 1));
  CHECK(r.converged);
  const double expected = std::atan((spec.omega_max - w0) / (gamma / 2.0)) -
                          std::atan((spec.omega_min - w0) / (gamma / 2.0));
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("oscillatory integrand with a period hint") {
  const double tau = 1e-12;
  QuadSpec spec;
  spec.rel_tol = 1e-9;
  spec.omega_min = 1e12;
  spec.omega_max = 1e15;
  const auto r = integrate([&](double w) { return std::cos(w * tau); }, spec,
                           2.0 * pi / tau);
  CHECK(r.converged);
  const double expected =
      (std::sin(spec.omega_max * tau) - std::sin(spec.omega_min * tau)) / tau;
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("heavily oscillatory integrand takes the streaming path") {
  // 2 pi / tau over the range forces more seed panels than the heap keeps,
  // exercising the depth-first width-budgeted variant.
  const double tau = 1e-10;
  QuadSpec spec;
  spec.rel_tol = 1e-8;
  spec.omega_min = 1e12;
  spec.omega_max = 1e15;
  const auto r = integrate([&](double w) { return std::cos(w * tau); }, spec,
                           2.0 * pi / tau);
  const double expected =
      (std::sin(spec.omega_max * tau) - std::sin(spec.omega_min * tau)) / tau;
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-7));
}

TEST_CASE("multi-component integration shares evaluations") {
  QuadSpec spec;
  spec.rel_tol = 1e-11;
  spec.omega_min = 0.5;
  spec.omega_max = 4.0;
  auto f = [](double w, double* out) {
    out[0] = w * w;
    out[1] = std::sin(w);
  };
  const auto r = detail::adaptive_gk<2>(f, spec, 0.0, {});
  CHECK(r[0].converged);
  CHECK(r[1].converged);
  CHECK(r[0].value == doctest::Approx((64.0 - 0.125) / 3.0).epsilon(1e-12));
  CHECK(r[1].value ==
        doctest::Approx(std::cos(0.5) - std::cos(4.0)).epsilon(1e-12));
  CHECK(r[0].panels_used == r[1].panels_used);
}

TEST_CASE("budget exhaustion reports non-convergence") {
  QuadSpec spec;
  spec.rel_tol = 1e-14;
  spec.omega_min = 1e12;
  spec.omega_max = 1e15;
  spec.max_panels = 16;
  const double tau = 3e-13;
  const auto r = integrate([&](double w) { return std::cos(w * tau); }, spec);
  CHECK(!r.converged);
}

TEST_CASE("invalid specs and non-finite integrands are rejected") {
  QuadSpec spec;
  spec.omega_min = 0.0;
  spec.omega_max = 1.0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, spec), DomainError);
  spec.omega_min = 2.0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, spec), DomainError);
  spec.omega_min = 1.0;
  spec.omega_max = 2.0;
  spec.rel_tol = 0.5; // above the 1e-2 cap
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, spec), DomainError);
  spec.rel_tol = 1e-8;
  const auto bad = [](double w) {
    return w > 1.4 && w < 1.6 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
  };
  CHECK_THROWS_AS(integrate(bad, spec), DomainError);
}

TEST_CASE("default cutoffs cover the thermal window and the resonance tail") {
  DrudeLorentzParams p;
  p.eps_inf = 6.7;
  p.omega0 = 1.49e14;
  p.omegap = 2.71e14;
  p.gamma = 8.93e11;
  const auto pt = Particle::make(p, 5e-9);
  const auto dm = derived_material(pt);
  const PhysicalConstants pc{};

  SUBCASE("room temperature: thermal window dominates") {
    const auto ts = thermal_scales(300.0, pc);
    const auto [lo, hi] = default_cutoffs(300.0, dm, p.gamma, pc);
    CHECK(lo == doctest::Approx(1e-8 * ts.omega_T).epsilon(1e-12));
    CHECK(hi == doctest::Approx(50.0 * ts.omega_T).epsilon(1e-12));
    CHECK(hi > dm.omega0_alpha);
  }
  SUBCASE("cryogenic: resonance tail dominates") {
    const auto [lo, hi] = default_cutoffs(30.0, dm, p.gamma, pc);
    CHECK(hi == doctest::Approx(dm.omega0_alpha + 40.0 * p.gamma).epsilon(1e-12));
    CHECK(lo > 0.0);
  }
}
