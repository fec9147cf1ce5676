#include <string>

#include <doctest.h>

#include "heatflux/materials.hpp"
#include "heatflux/validation.hpp"

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

TEST_CASE("damped-integral oracle passes on a reduced sample") {
  const auto r = oracle_damped_integrals(25, kDefaultOracleSeed);
  CHECK(r.pass);
  CHECK(r.samples == 25);
  CHECK(r.max_rel_err < 1.0);
  CHECK(r.name == "damped_integrals");
}

TEST_CASE("channel-reconstruction oracle passes on a reduced sample") {
  const auto r = oracle_channel_reconstruction(25, kDefaultOracleSeed);
  CHECK(r.pass);
  CHECK(r.max_rel_err < 1.0);
}

TEST_CASE("field-correlator trace oracle passes on a reduced sample") {
  const auto r = oracle_gf_traces(25, kDefaultOracleSeed);
  CHECK(r.pass);
}

TEST_CASE("sampling oracles are deterministic in the seed") {
  const auto a = oracle_damped_integrals(10, 1234);
  const auto b = oracle_damped_integrals(10, 1234);
  CHECK(a.max_rel_err == b.max_rel_err);
  CHECK(a.worst_case == b.worst_case);
  const auto c = oracle_damped_integrals(10, 99);
  CHECK(c.max_rel_err != a.max_rel_err);
}

TEST_CASE("stationary-limit oracle converges on the reference pair") {
  const auto r = oracle_stationary_limit(sic_pair(1e-7, 300.0));
  CHECK(r.pass);
  CHECK(r.max_rel_err <= 1.0); // normalized to the threshold ladder
}

TEST_CASE("energy-derivative oracle matches finite differences") {
  const double taus[3] = {1e-14, 1e-13, 1e-12};
  const auto r = oracle_energy_derivative(sic_pair(1e-7, 300.0), taus);
  CHECK(r.pass);
  CHECK(r.samples == 3);
}

TEST_CASE("report formatting carries both human and parseable lines") {
  std::vector<OracleReport> reports;
  OracleReport r;
  r.name = "demo";
  r.samples = 7;
  r.max_rel_err = 0.25;
  r.pass = true;
  r.worst_case = "none";
  reports.push_back(r);
  const auto text = format_reports(reports);
  CHECK(text.find("[PASS] demo") != std::string::npos);
  CHECK(text.find("oracle=demo") != std::string::npos);
  CHECK(text.find("samples=7") != std::string::npos);
  r.pass = false;
  reports[0] = r;
  CHECK(format_reports(reports).find("[FAIL] demo") != std::string::npos);
}
