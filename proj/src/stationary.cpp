#include "heatflux/stationary.hpp"

#include <cmath>

#include "heatflux/errors.hpp"

namespace heatflux {

void validate_pair(const PairConfig& cfg) {
  validate_material(cfg.particle1.material);
  validate_material(cfg.particle2.material);
  if (!(cfg.particle1.radius > 0.0) || !(cfg.particle2.radius > 0.0))
    throw ConfigError("pair: particle radii must be positive");
  if (!(cfg.d > 0.0)) throw ConfigError("pair: separation d must be positive");
  if (!(cfg.T1 > 0.0)) throw ConfigError("pair: temperature T1 must be positive");
}

std::vector<std::string> validity_warnings(const PairConfig& cfg,
                                           const PhysicalConstants& pc) {
  std::vector<std::string> out;
  const double lam = thermal_scales(cfg.T1, pc).lambda_T;
  auto check = [&](const Particle& p, const char* which) {
    if (p.radius > cfg.d / 10.0)
      out.push_back(std::string(which) +
                    ": radius exceeds d/10, point-dipole treatment marginal");
    if (p.radius > lam / 10.0)
      out.push_back(std::string(which) +
                    ": radius exceeds lambda_T/10, point-dipole treatment marginal");
  };
  check(cfg.particle1, "particle1");
  check(cfg.particle2, "particle2");
  return out;
}

namespace detail {

PairQuad make_pair_quad(const PairConfig& cfg, double rel_tol,
                        const PhysicalConstants& pc,
                        double omega_max_override) {
  validate_pair(cfg);
  PairQuad q;
  q.a1 = AlphaFactors::from(cfg.particle1);
  q.a2 = AlphaFactors::from(cfg.particle2);
  q.omega_T = thermal_scales(cfg.T1, pc).omega_T;

  const DerivedMaterial m1 = derived_material(cfg.particle1);
  const DerivedMaterial m2 = derived_material(cfg.particle2);
  const auto [lo1, hi1] =
      default_cutoffs(cfg.T1, m1, cfg.particle1.material.gamma, pc);
  const auto [lo2, hi2] =
      default_cutoffs(cfg.T1, m2, cfg.particle2.material.gamma, pc);
  q.spec.rel_tol = rel_tol;
  q.spec.omega_min = std::min(lo1, lo2);
  q.spec.omega_max = std::max(hi1, hi2);
  if (omega_max_override > 0.0) {
    if (omega_max_override <= q.spec.omega_min)
      throw ConfigError("make_pair_quad: omega_max override below lower cutoff");
    q.spec.omega_max = omega_max_override;
  }
  q.peaks.push_back({m1.omega0_alpha, cfg.particle1.material.gamma / 4.0});
  q.peaks.push_back({m2.omega0_alpha, cfg.particle2.material.gamma / 4.0});
  return q;
}

namespace {

// Fills out[0..2] with the d^-2, d^-4, d^-6 channel spectral densities of the
// stationary transfer at omega, in absolute units (J per unit omega). Written
// with Im(alpha)/omega and omega*planck so every factor stays finite as
// omega -> 0.
struct TransferSpectrum {
  const PairQuad& q;
  double d, c;
  double hbar_pref;  // 4 hbar / (pi c^4)

  void operator()(double w, double* out) const {
    const double wp = planck_times_omega(w, q.omega_T);
    const double a1a2 = q.a1.im_alpha_over_omega(w) * q.a2.im_alpha_over_omega(w);
    const double base = hbar_pref * wp * a1a2;
    const double w2 = w * w;
    const double cw = c / w;
    const double w6 = w2 * w2 * w2;
    out[0] = base * w6 / (d * d);
    out[1] = base * w6 * (cw * cw) / std::pow(d, 4);
    out[2] = base * w6 * 3.0 * (cw * cw * cw * cw) / std::pow(d, 6);
  }
};

double norm_volumes(const PairConfig& cfg, bool absolute, int count) {
  if (absolute) return 1.0;
  double v = cfg.particle1.volume;
  if (count == 2) v *= cfg.particle2.volume;
  return v;
}

StationaryResult integrate_channels(const PairConfig& cfg,
                                    const detail::PairQuad& q,
                                    const TransferSpectrum& f, bool absolute,
                                    int vol_count) {
  auto res = detail::adaptive_gk<3>(f, q.spec, 0.0, q.peaks);
  for (const auto& r : res)
    if (!r.converged)
      throw NotConverged("stationary integral did not converge; best estimate " +
                         std::to_string(r.value) + " +- " +
                         std::to_string(r.err_estimate));
  const double norm = norm_volumes(cfg, absolute, vol_count);
  StationaryResult out;
  out.absolute = absolute;
  for (int i = 0; i < 3; ++i) out.channels[i] = res[i].value / norm;
  out.value = out.channels[0] + out.channels[1] + out.channels[2];
  return out;
}

} // namespace

} // namespace detail

double stationary_flux_spectrum(const PairConfig& cfg, double omega,
                                bool absolute, const PhysicalConstants& pc) {
  if (!(omega > 0.0)) throw DomainError("stationary_flux_spectrum: omega must be > 0");
  auto q = detail::make_pair_quad(cfg, 1e-8, pc);
  const double pref = 4.0 * pc.hbar / (pi * std::pow(pc.c, 4));
  detail::TransferSpectrum f{q, cfg.d, pc.c, pref};
  double ch[3];
  f(omega, ch);
  return (ch[0] + ch[1] + ch[2]) / detail::norm_volumes(cfg, absolute, 2);
}

StationaryResult stationary_flux(const PairConfig& cfg, bool absolute,
                                 double rel_tol, const PhysicalConstants& pc,
                                 double omega_max) {
  auto q = detail::make_pair_quad(cfg, rel_tol, pc, omega_max);
  const double pref = 4.0 * pc.hbar / (pi * std::pow(pc.c, 4));
  detail::TransferSpectrum f{q, cfg.d, pc.c, pref};
  return detail::integrate_channels(cfg, q, f, absolute, 2);
}

StationaryResult stationary_flux_generic(const PairConfig& cfg,
                                         const EnvTraceProvider& env,
                                         bool absolute, double rel_tol,
                                         const PhysicalConstants& pc) {
  auto q = detail::make_pair_quad(cfg, rel_tol, pc);
  const double pref = 32.0 * pi * pc.hbar / std::pow(pc.c, 4);
  auto f = [&](double w, double* out) {
    const double wp = planck_times_omega(w, q.omega_T);
    const double a1a2 =
        q.a1.im_alpha_over_omega(w) * q.a2.im_alpha_over_omega(w);
    const double w2 = w * w;
    out[0] = pref * wp * w2 * w2 * w2 * a1a2 * env.trace_EE(cfg.d, w);
  };
  auto res = detail::adaptive_gk<1>(f, q.spec, 0.0, q.peaks)[0];
  if (!res.converged)
    throw NotConverged("stationary generic integral did not converge");
  StationaryResult out;
  out.absolute = absolute;
  out.value = res.value / detail::norm_volumes(cfg, absolute, 2);
  out.channels = {0.0, 0.0, 0.0};
  out.channels_resolved = false;
  return out;
}

namespace {

StationaryResult density_common(const PairConfig& cfg, bool absolute,
                                double rel_tol, const PhysicalConstants& pc,
                                bool near_field_channel) {
  auto q = detail::make_pair_quad(cfg, rel_tol, pc);
  const double pref = pc.hbar / (2.0 * pi * pi * std::pow(pc.c, 4));
  const double d = cfg.d, c = pc.c;
  auto f = [&](double w, double* out) {
    const double wp = planck_times_omega(w, q.omega_T);
    const double a1 = q.a1.im_alpha_over_omega(w);
    const double base = pref * wp * a1;
    const double w2 = w * w;
    const double cw = c / w;
    const double w4 = w2 * w2;
    out[0] = base * w4 / (d * d);
    out[1] = base * w4 * (cw * cw) / std::pow(d, 4);
    out[2] = near_field_channel
                 ? base * w4 * 3.0 * (cw * cw * cw * cw) / std::pow(d, 6)
                 : 0.0;
  };
  auto res = detail::adaptive_gk<3>(f, q.spec, 0.0, q.peaks);
  for (int i = 0; i < (near_field_channel ? 3 : 2); ++i)
    if (!res[i].converged)
      throw NotConverged("stationary energy density integral did not converge");
  const double norm = detail::norm_volumes(cfg, absolute, 1);
  StationaryResult out;
  out.absolute = absolute;
  for (int i = 0; i < 3; ++i) out.channels[i] = res[i].value / norm;
  if (!near_field_channel) out.channels[2] = 0.0;
  out.value = out.channels[0] + out.channels[1] + out.channels[2];
  return out;
}

} // namespace

StationaryResult stationary_energy_density_H(const PairConfig& cfg,
                                             bool absolute, double rel_tol,
                                             const PhysicalConstants& pc) {
  return density_common(cfg, absolute, rel_tol, pc, false);
}

StationaryResult stationary_energy_density_E0(const PairConfig& cfg,
                                              bool absolute, double rel_tol,
                                              const PhysicalConstants& pc) {
  return density_common(cfg, absolute, rel_tol, pc, true);
}

} // namespace heatflux
