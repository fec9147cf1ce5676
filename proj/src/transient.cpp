#include "heatflux/transient.hpp"

#include <cmath>
#include <string>

#include "heatflux/errors.hpp"

namespace heatflux {

namespace {

// Shared guard for retarded-time arguments: negative tau means the wavefront
// has not arrived (caller returns exact zeros); tau = 0 hosts the
// delta-function pulse and is rejected.
bool pre_arrival(double tau) {
  if (std::isnan(tau)) throw DomainError("transient: tau is NaN");
  if (tau < 0.0) return true;
  if (!(tau > 0.0))
    throw DomainError(
        "transient: tau = 0 is the wavefront arrival (delta pulse); "
        "evaluate at tau > 0 or use the tau -> 0+ limits");
  return false;
}

} // namespace

DampedSineIntegrals damped_sine_integrals(double omega, double tau,
                                          double beta, double gamma) {
  if (!(tau > 0.0))
    throw DomainError("damped_sine_integrals: requires tau > 0");
  if (!(beta > 0.0) || !(gamma > 0.0))
    throw DomainError("damped_sine_integrals: requires beta > 0, gamma > 0");
  if (std::isnan(omega))
    throw DomainError("damped_sine_integrals: omega is NaN");

  const double W = beta * beta + 0.25 * gamma * gamma;
  const double u = omega * omega - W;
  const double den = u * u + gamma * gamma * omega * omega;
  const double eg = std::exp(-0.5 * gamma * tau);
  const double sb = std::sin(beta * tau), cb = std::cos(beta * tau);
  const double sw = std::sin(omega * tau), cw = std::cos(omega * tau);
  const double gbw = gamma * beta * omega;
  const double hg2 = 0.5 * gamma * gamma;

  DampedSineIntegrals r;
  r.S = (0.5 / den) *
        (2.0 * gbw - eg * (2.0 * gbw * cb * cw +
                           gamma * (omega * omega + W) * sb * sw -
                           2.0 * beta * u * cb * sw +
                           2.0 * omega * (u + hg2) * sb * cw));
  r.C = (1.0 / den) *
        (-beta * u - eg * (-beta * u * cb * cw - omega * (u + hg2) * sb * sw -
                           gbw * cb * sw +
                           0.5 * gamma * (omega * omega + W) * sb * cw));
  return r;
}

KernelChannels channel_kernels(double omega, double tau,
                               const AlphaFactors& recv, double d,
                               const PhysicalConstants& pc) {
  if (!(omega > 0.0))
    throw DomainError("channel_kernels: requires omega > 0");
  if (!(d > 0.0)) throw DomainError("channel_kernels: requires d > 0");

  KernelChannels k;
  if (pre_arrival(tau)) return k;

  const double c = pc.c;
  const double g = recv.gamma, b = recv.beta, W = recv.w0a2;
  const double Ia2 = recv.im_alpha(omega);
  const double Ra2 = recv.re_alpha_minus_inf(omega);
  const double eg = std::exp(-0.5 * g * tau);
  const double sb = std::sin(b * tau), cb = std::cos(b * tau);
  const double sw = std::sin(omega * tau), cw = std::cos(omega * tau);
  const double w = omega, w2 = w * w, w3 = w2 * w;
  const double u = w2 - W;
  const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2;
  const double d2 = d * d, d3 = d2 * d, d4 = d2 * d2, d5 = d4 * d,
               d6 = d4 * d2;
  const double i2b = 1.0 / (2.0 * b);

  { // far-field channel
    const double pref = 2.0 * w3 / (c4 * d2);
    const double bt = -cb * cw - W * (3.0 * w2 - W) / (2.0 * b * w3) * sb * sw -
                      (g / w) * (cb * sw - w * i2b * sb * cw) +
                      g * g / (2.0 * b * w) * sb * sw;
    const double bu = (W / w2) * (-cb * sw + (w / b) * sb * cw);
    k.d2.transfer = pref * Ia2 * (1.0 + eg * bt);
    k.d2.energy = pref * Ra2 * eg * bu;
  }
  { // intermediate d^-3 channel
    const double pref = 2.0 * w2 / (c3 * d3);
    const double bt = -u * u / (2.0 * b * w3) * sb * cw + (g / w) * cb * cw -
                      g * g / (2.0 * b * w) * sb * cw;
    const double bu = -(u / w2) * cb * cw;
    k.d3.transfer = pref * Ia2 * eg * bt;
    k.d3.energy = pref * Ra2 * eg * bu;
  }
  { // d^-4 channel
    const double pref = 2.0 * w / (c2 * d4);
    const double bt =
        -cb * (1.0 + cw) -
        (2.0 * w2 * w2 - W * w2 + W * W) / (2.0 * b * w3) * sb * sw +
        (g / w) * (cb * sw + w * i2b * sb * (1.0 + 3.0 * cw)) -
        g * g / (2.0 * b * w) * sb * sw;
    const double bu = -((2.0 * w2 - W) / w2) * cb * sw +
                      (w / b) * sb * (W / w2 - (u - W) / w2 * cw);
    k.d4.transfer = pref * Ia2 * (1.0 + cw + eg * bt);
    k.d4.energy = pref * Ra2 * (-sw + eg * bu);
  }
  { // d^-5 channel
    const double pref = 6.0 / (c * d5);
    const double bt = (w2 + W) / (2.0 * b * w) * sb - (g / b) * sb * sw;
    const double bu = cb + u / (b * w) * sb * sw;
    k.d5.transfer = pref * Ia2 * (sw - eg * bt);
    k.d5.energy = pref * Ra2 * (cw - eg * bu);
  }
  { // near-field channel
    const double pref = 6.0 / (w * d6);
    const double bt = cb * (1.0 - cw) - (w2 + W) / (2.0 * b * w) * sb * sw +
                      g * i2b * sb * (1.0 - cw);
    const double bu = -cb * sw - (w / b) * sb * (1.0 - cw);
    k.d6.transfer = pref * Ia2 * (1.0 - cw + eg * bt);
    k.d6.energy = pref * Ra2 * (sw + eg * bu);
  }
  return k;
}

TransientEvaluator::TransientEvaluator(const PairConfig& cfg, double rel_tol,
                                       const PhysicalConstants& pc,
                                       double omega_max)
    : cfg_(cfg), pc_(pc), rel_tol_(rel_tol) {
  if (!(rel_tol > 0.0) || rel_tol > 1e-2)
    throw DomainError("TransientEvaluator: rel_tol must be in (0, 1e-2]");
  auto q = detail::make_pair_quad(cfg, rel_tol, pc, omega_max);
  a1_ = q.a1;
  a2_ = q.a2;
  omega_T_ = q.omega_T;
  spec_ = q.spec;
  peaks_ = q.peaks;
  // Large-tau evaluations are bounded by work, not memory, so allow a much
  // deeper panel budget than the default.
  spec_.max_panels = std::size_t{1} << 27;

  const double v1 = cfg.particle1.volume, v2 = cfg.particle2.volume;
  inv_v1v2_ = 1.0 / (v1 * v2);
  vol_term_ = (v2 + 4.0 * pi * a2_.alpha_inf) * inv_v1v2_;

  h_st_ = stationary_flux(cfg, false, rel_tol, pc).value;
  uE0_scale_ = stationary_energy_density_E0(cfg, false, rel_tol, pc).value;

  { // envelope magnitude of the energy-derivative integrand, used as the
    // absolute error floor for its strongly cancelling oscillatory integral
    const double c = pc.c, d = cfg.d;
    const double d4 = d * d * d * d, d5 = d4 * d, d6 = d5 * d;
    const double pref = pc.hbar / (pi * pi * c * c) / v1;
    auto f = [&](double w, double* out) {
      const double wp = planck_times_omega(w, omega_T_);
      const double F1 = a1_.im_alpha_over_omega(w);
      const double w2 = w * w;
      out[0] =
          pref * wp * F1 * (w2 * w / d4 + 3.0 * c * w2 / d5 + 3.0 * c * c * w / d6);
    };
    auto r = detail::adaptive_gk<1>(f, spec_, 0.0, peaks_)[0];
    if (!r.converged)
      throw NotConverged("energy-derivative scale integral did not converge");
    ddt_scale_ = r.value;
  }
}

TransientEvaluator::TauCtx TransientEvaluator::tau_ctx(double tau) const {
  return {tau, std::exp(-0.5 * a2_.gamma * tau), std::sin(a2_.beta * tau),
          std::cos(a2_.beta * tau)};
}

double TransientEvaluator::transfer_integrand(double w, const TauCtx& t) const {
  const double c = pc_.c, d = cfg_.d;
  const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2;
  const double id2 = 1.0 / (d * d), id3 = id2 / d, id4 = id3 / d,
               id5 = id4 / d, id6 = id5 / d;
  const double wp = planck_times_omega(w, omega_T_);
  const double F12 = a1_.im_alpha_over_omega(w) * a2_.im_alpha_over_omega(w);
  const double half = 0.5 * w * t.tau;
  const double sh = std::sin(half), ch = std::cos(half);
  const double sw = 2.0 * sh * ch, cw = 1.0 - 2.0 * sh * sh;
  const double omc = 2.0 * sh * sh, opc = 2.0 * ch * ch;
  const double w2 = w * w, w3 = w2 * w, w4 = w2 * w2, w5 = w4 * w,
               w6 = w4 * w2;
  const double g = a2_.gamma, b = a2_.beta, W = a2_.w0a2;
  const double u = w2 - W;
  const double sb = t.sb, cb = t.cb, eg = t.eg;
  const double i2b = 1.0 / (2.0 * b);
  const double ct4 = 4.0 * pc_.hbar / (pi * c4) * inv_v1v2_;
  const double ct2 = ct4 * c2;

  // stationary channels
  double val = ct4 * wp * F12 * (w6 * id2 + c2 * w4 * id4 + 3.0 * c4 * w2 * id6);
  // oscillatory settling terms
  val += ct2 * wp * F12 *
         (w4 * cw * id4 + 3.0 * c * w3 * sw * id5 - 3.0 * c2 * w2 * cw * id6);
  // exponentially damped channels
  const double B2 = -w6 * cb * cw - W * (3.0 * w2 - W) * w3 * i2b * sb * sw -
                    g * w5 * cb * sw + g * w6 * i2b * sb * cw +
                    g * g * w5 * i2b * sb * sw;
  const double B3 =
      -u * u * w2 * i2b * sb * cw + g * w4 * cb * cw - g * g * w4 * i2b * sb * cw;
  const double B4 = -w4 * cb * opc -
                    (2.0 * w4 - W * w2 + W * W) * w * i2b * sb * sw +
                    g * w3 * cb * sw + g * w4 * i2b * sb * (1.0 + 3.0 * cw) -
                    g * g * w3 * i2b * sb * sw;
  const double B5 = 3.0 * (-(w2 + W) * w2 * i2b * sb + (g * w3 / b) * sb * sw);
  const double B6 =
      3.0 * (w2 * cb * omc - (w2 + W) * w * i2b * sb * sw + g * w2 * i2b * sb * omc);
  val += ct4 * eg * wp * F12 *
         (B2 * id2 + c * B3 * id3 + c2 * B4 * id4 + c3 * B5 * id5 + c4 * B6 * id6);
  return val;
}

double TransientEvaluator::udot_integrand(double w, const TauCtx& t) const {
  const double c = pc_.c, d = cfg_.d;
  const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2;
  const double id2 = 1.0 / (d * d), id3 = id2 / d, id4 = id3 / d,
               id5 = id4 / d, id6 = id5 / d;
  const double wp = planck_times_omega(w, omega_T_);
  const double F1 = a1_.im_alpha_over_omega(w);
  const double G2 = a2_.re_alpha_minus_inf(w);
  const double half = 0.5 * w * t.tau;
  const double sh = std::sin(half), ch = std::cos(half);
  const double sw = 2.0 * sh * ch, cw = 1.0 - 2.0 * sh * sh;
  const double omc = 2.0 * sh * sh;
  const double w2 = w * w, w3 = w2 * w, w4 = w2 * w2;
  const double b = a2_.beta, W = a2_.w0a2;
  const double u = w2 - W;
  const double sb = t.sb, cb = t.cb, eg = t.eg;
  const double cu4 = 4.0 * pc_.hbar / (pi * c4) * inv_v1v2_;
  const double cu2 = cu4 * c2;
  const double cvol = vol_term_ * pc_.hbar / (pi * pi * c2);

  // the empty-volume and instantaneous-response terms share one bracket with
  // the dispersive settling term
  const double brk = -w3 * sw * id4 + 3.0 * c * w2 * cw * id5 + 3.0 * c2 * w * sw * id6;
  double val = (cvol + cu2 * G2) * wp * F1 * brk;

  const double E2 = W * (-w3 * cb * sw + (w4 / b) * sb * cw);
  const double E3 = -w2 * u * cb * cw;
  const double E4 =
      -(2.0 * w2 - W) * w * cb * sw + (w2 / b) * sb * (W - (u - W) * cw);
  const double E5 = -3.0 * (w2 * cb + (u * w / b) * sb * sw);
  const double E6 = 3.0 * (-w * cb * sw - (w2 / b) * sb * omc);
  val += cu4 * eg * wp * F1 * G2 *
         (E2 * id2 + c * E3 * id3 + c2 * E4 * id4 + c3 * E5 * id5 + c4 * E6 * id6);
  return val;
}

double TransientEvaluator::density_E0_integrand(double w, const TauCtx& t) const {
  const double c = pc_.c, d = cfg_.d;
  const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2;
  const double id2 = 1.0 / (d * d), id4 = id2 * id2, id5 = id4 / d,
               id6 = id5 / d;
  const double wp = planck_times_omega(w, omega_T_);
  const double F1 = a1_.im_alpha_over_omega(w);
  const double half = 0.5 * w * t.tau;
  const double sh = std::sin(half), ch = std::cos(half);
  const double sw = 2.0 * sh * ch, cw = 1.0 - 2.0 * sh * sh;
  const double omc = 2.0 * sh * sh;
  const double w2 = w * w, w4 = w2 * w2;
  const double pref =
      pc_.hbar / (2.0 * pi * pi * c4) / cfg_.particle1.volume;
  return pref * wp * F1 *
         (w4 * id2 + c2 * w2 * (1.0 + 2.0 * cw) * id4 + 6.0 * c3 * w * sw * id5 +
          6.0 * c4 * omc * id6);
}

double TransientEvaluator::ddt_integrand(double w, const TauCtx& t) const {
  const double c = pc_.c, d = cfg_.d;
  const double id4 = 1.0 / (d * d * d * d), id5 = id4 / d, id6 = id5 / d;
  const double wp = planck_times_omega(w, omega_T_);
  const double F1 = a1_.im_alpha_over_omega(w);
  const double half = 0.5 * w * t.tau;
  const double sh = std::sin(half), ch = std::cos(half);
  const double sw = 2.0 * sh * ch, cw = 1.0 - 2.0 * sh * sh;
  const double w2 = w * w;
  const double pref = pc_.hbar / (pi * pi * c * c) / cfg_.particle1.volume;
  return pref * wp * F1 *
         (-w2 * w * sw * id4 + 3.0 * c * w2 * cw * id5 + 3.0 * c * c * w * sw * id6);
}

double TransientEvaluator::udot_spectrum(double omega, double tau) const {
  if (!(omega > 0.0)) throw DomainError("udot_spectrum: requires omega > 0");
  if (pre_arrival(tau)) return 0.0;
  return udot_integrand(omega, tau_ctx(tau));
}

double TransientEvaluator::transfer_spectrum(double omega, double tau) const {
  if (!(omega > 0.0))
    throw DomainError("transfer_spectrum: requires omega > 0");
  if (pre_arrival(tau)) return 0.0;
  return transfer_integrand(omega, tau_ctx(tau));
}

FluxDecomposition TransientEvaluator::flux_at(double tau) const {
  FluxDecomposition out;
  out.tau = tau;
  if (pre_arrival(tau)) return out;

  const TauCtx t = tau_ctx(tau);
  QuadSpec spec = spec_;
  spec.abs_tol = rel_tol_ * h_st_;
  auto f = [&](double w, double* y) {
    y[0] = udot_integrand(w, t);
    y[1] = transfer_integrand(w, t);
  };
  auto r = detail::adaptive_gk<2>(f, spec, 2.0 * pi / tau, peaks_);
  if (!r[0].converged || !r[1].converged)
    throw NotConverged("transient flux integral did not converge at tau = " +
                       std::to_string(tau) + " s");
  out.udot = r[0].value;
  out.transfer = r[1].value;
  out.total = out.udot + out.transfer;
  return out;
}

std::pair<double, double> TransientEvaluator::limit_tau0() const {
  const double c = pc_.c, d = cfg_.d;
  const double id3 = 1.0 / (d * d * d), id5 = id3 / (d * d);
  const double cu = 4.0 * pc_.hbar / (pi * c * c * c) * inv_v1v2_;
  const double cv = 3.0 * vol_term_ * pc_.hbar / (pi * pi * c);
  const double g2 = a2_.gamma, W = a2_.w0a2;

  auto f = [&](double w, double* y) {
    const double wp = planck_times_omega(w, omega_T_);
    const double F1 = a1_.im_alpha_over_omega(w);
    const double w2 = w * w;
    y[0] = -cu * wp * F1 * a2_.re_alpha_minus_inf(w) * w2 * (w2 - W) * id3 +
           cv * wp * F1 * w2 * id5;
    y[1] = cu * g2 * wp * F1 * a2_.im_alpha_over_omega(w) * w2 * w2 * id3;
  };
  auto r = detail::adaptive_gk<2>(f, spec_, 0.0, peaks_);
  if (!r[0].converged || !r[1].converged)
    throw NotConverged("wavefront limit integrals did not converge");
  return {r[0].value, r[1].value};
}

double TransientEvaluator::energy_density_E0(double tau, bool absolute) const {
  if (pre_arrival(tau)) return 0.0;
  const TauCtx t = tau_ctx(tau);
  QuadSpec spec = spec_;
  spec.abs_tol = rel_tol_ * uE0_scale_;
  auto f = [&](double w, double* y) { y[0] = density_E0_integrand(w, t); };
  auto r = detail::adaptive_gk<1>(f, spec, 2.0 * pi / tau, peaks_)[0];
  if (!r.converged)
    throw NotConverged("electric energy density integral did not converge");
  return absolute ? r.value * cfg_.particle1.volume : r.value;
}

double TransientEvaluator::energy_density_H(double tau, bool absolute) const {
  if (pre_arrival(tau)) return 0.0;
  return stationary_energy_density_H(cfg_, absolute, rel_tol_, pc_).value;
}

double TransientEvaluator::ddt_uE0(double tau, bool absolute) const {
  if (pre_arrival(tau)) return 0.0;
  const TauCtx t = tau_ctx(tau);
  QuadSpec spec = spec_;
  spec.abs_tol = rel_tol_ * ddt_scale_;
  auto f = [&](double w, double* y) { y[0] = ddt_integrand(w, t); };
  auto r = detail::adaptive_gk<1>(f, spec, 2.0 * pi / tau, peaks_)[0];
  if (!r.converged)
    throw NotConverged("energy derivative integral did not converge");
  return absolute ? r.value * cfg_.particle1.volume * cfg_.particle2.volume
                  : r.value;
}

FluxDecomposition flux_at(const PairConfig& cfg, double tau, double rel_tol,
                          const PhysicalConstants& pc) {
  validate_pair(cfg);
  if (!std::isnan(tau) && tau < 0.0) return {tau, 0.0, 0.0, 0.0};
  return TransientEvaluator(cfg, rel_tol, pc).flux_at(tau);
}

double udot_spectrum(const PairConfig& cfg, double omega, double tau,
                     const PhysicalConstants& pc) {
  return TransientEvaluator(cfg, 1e-8, pc).udot_spectrum(omega, tau);
}

double transfer_spectrum(const PairConfig& cfg, double omega, double tau,
                         const PhysicalConstants& pc) {
  return TransientEvaluator(cfg, 1e-8, pc).transfer_spectrum(omega, tau);
}

double energy_density_E0(const PairConfig& cfg, double tau, bool absolute,
                         double rel_tol, const PhysicalConstants& pc) {
  validate_pair(cfg);
  if (!std::isnan(tau) && tau < 0.0) return 0.0;
  return TransientEvaluator(cfg, rel_tol, pc).energy_density_E0(tau, absolute);
}

double energy_density_H(const PairConfig& cfg, double tau, bool absolute,
                        double rel_tol, const PhysicalConstants& pc) {
  validate_pair(cfg);
  if (std::isnan(tau)) throw DomainError("transient: tau is NaN");
  if (tau < 0.0) return 0.0;
  if (!(tau > 0.0))
    throw DomainError(
        "transient: tau = 0 is the wavefront arrival (delta pulse); "
        "evaluate at tau > 0 or use the tau -> 0+ limits");
  return stationary_energy_density_H(cfg, absolute, rel_tol, pc).value;
}

double ddt_uE0(const PairConfig& cfg, double tau, bool absolute,
               double rel_tol, const PhysicalConstants& pc) {
  validate_pair(cfg);
  if (!std::isnan(tau) && tau < 0.0) return 0.0;
  return TransientEvaluator(cfg, rel_tol, pc).ddt_uE0(tau, absolute);
}

std::pair<double, double> limit_tau0(const PairConfig& cfg, double rel_tol,
                                     const PhysicalConstants& pc) {
  return TransientEvaluator(cfg, rel_tol, pc).limit_tau0();
}

} // namespace heatflux
