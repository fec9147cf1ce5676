#include "heatflux/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "heatflux/errors.hpp"
#include "heatflux/materials.hpp"
#include "heatflux/transient.hpp"

namespace heatflux {

namespace {

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HEATFLUX_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1)
      n = std::min<unsigned>(static_cast<unsigned>(parsed), 256u);
  }
  return n;
}

const std::vector<double>& channel_values(const TimeSeries& s,
                                          FluxChannel channel) {
  switch (channel) {
    case FluxChannel::udot:
      return s.udot;
    case FluxChannel::transfer:
      return s.transfer;
    case FluxChannel::total:
    default:
      return s.total;
  }
}

// Vertex of the parabola through three points bracketing a sign change of
// the first differences.
ExtremumPoint refine_parabolic(double t0, double v0, double t1, double v1,
                               double t2, double v2) {
  const double dl = t1 - t0, dr = t1 - t2;
  const double num = dl * dl * (v1 - v2) - dr * dr * (v1 - v0);
  const double den = dl * (v1 - v2) - dr * (v1 - v0);
  ExtremumPoint p;
  if (den == 0.0) {
    p.tau = t1;
    p.value = v1;
    return p;
  }
  p.tau = t1 - 0.5 * num / den;
  // Lagrange evaluation of the same parabola at the vertex.
  const double t = p.tau;
  const double l0 = (t - t1) * (t - t2) / ((t0 - t1) * (t0 - t2));
  const double l1 = (t - t0) * (t - t2) / ((t1 - t0) * (t1 - t2));
  const double l2 = (t - t0) * (t - t1) / ((t2 - t0) * (t2 - t1));
  p.value = v0 * l0 + v1 * l1 + v2 * l2;
  return p;
}

} // namespace

TimeSeries flux_series(const PairConfig& cfg, double tau_min, double tau_max,
                       int samples_per_period, double rel_tol,
                       const PhysicalConstants& pc, double omega_max) {
  validate_pair(cfg);
  if (!(tau_min > 0.0) || !(tau_max > tau_min))
    throw ConfigError("flux_series: requires 0 < tau_min < tau_max");
  if (samples_per_period < 16)
    throw ConfigError("flux_series: requires >= 16 samples per period");

  const DerivedMaterial dm = derived_material(cfg.particle2);
  double period = 2.0 * pi / dm.omega0_alpha;
  if (cfg.T1 < 100.0) {
    const double omega_t = thermal_scales(cfg.T1, pc).omega_T;
    period = std::min(period, 1.0 / (4.0 * omega_t));
  }
  const double step = period / samples_per_period;
  const std::size_t n =
      1 + static_cast<std::size_t>(std::floor((tau_max - tau_min) / step));

  TimeSeries s;
  s.taus.resize(n);
  s.total.resize(n);
  s.udot.resize(n);
  s.transfer.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.taus[i] = tau_min + i * step;

  const TransientEvaluator ev(cfg, rel_tol, pc, omega_max);
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::string error_text;
  std::mutex error_mutex;

  auto work = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= n || failed.load(std::memory_order_relaxed)) return;
      try {
        const FluxDecomposition fd = ev.flux_at(s.taus[i]);
        s.total[i] = fd.total;
        s.udot[i] = fd.udot;
        s.transfer[i] = fd.transfer;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        error_text = e.what();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw NotConverged("flux_series: " + error_text);
  return s;
}

ExtremaSet find_extrema(const TimeSeries& s, FluxChannel channel,
                        double period_hint) {
  const std::vector<double>& v = channel_values(s, channel);
  if (s.taus.size() != v.size())
    throw ConfigError("find_extrema: mismatched series lengths");
  const std::size_t n = s.taus.size();
  for (std::size_t i = 1; i < n; ++i)
    if (!(s.taus[i] > s.taus[i - 1]))
      throw ConfigError("find_extrema: taus must be strictly increasing");

  if (period_hint > 0.0 && n >= 2) {
    const double mean_step = (s.taus[n - 1] - s.taus[0]) / (n - 1);
    if (mean_step * 16.0 > period_hint)
      throw TooCoarse("find_extrema: fewer than 16 samples per period");
  }

  ExtremaSet out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double dl = v[i] - v[i - 1];
    const double dr = v[i + 1] - v[i];
    if (dl > 0.0 && dr < 0.0)
      out.maxima.push_back(refine_parabolic(s.taus[i - 1], v[i - 1], s.taus[i],
                                            v[i], s.taus[i + 1], v[i + 1]));
    else if (dl < 0.0 && dr > 0.0)
      out.minima.push_back(refine_parabolic(s.taus[i - 1], v[i - 1], s.taus[i],
                                            v[i], s.taus[i + 1], v[i + 1]));
  }

  if (period_hint > 0.0 && n >= 2) {
    const double span = s.taus[n - 1] - s.taus[0];
    if (span >= 3.0 * period_hint &&
        out.maxima.size() + out.minima.size() < 2)
      throw TooCoarse(
          "find_extrema: fewer than 2 extrema over a span of 3 periods");
  }

  // Averages per the midpoint rule on adjacent extrema of opposite kind,
  // walking both lists merged in tau order.
  std::vector<std::pair<ExtremumPoint, bool>> merged; // flag: is maximum
  merged.reserve(out.maxima.size() + out.minima.size());
  for (const auto& m : out.maxima) merged.emplace_back(m, true);
  for (const auto& m : out.minima) merged.emplace_back(m, false);
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first.tau < b.first.tau; });
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    if (merged[i].second == merged[i + 1].second) continue;
    ExtremumPoint avg;
    avg.tau = 0.5 * (merged[i].first.tau + merged[i + 1].first.tau);
    avg.value = 0.5 * (merged[i].first.value + merged[i + 1].first.value);
    out.averages.push_back(avg);
  }
  return out;
}

double flux_average_model(double h_st, double gamma, double tau) {
  if (!(tau >= 0.0)) throw DomainError("flux_average_model: requires tau >= 0");
  return h_st * (1.0 - std::exp(-gamma * tau));
}

FitParams fit_max_params(double tau_max, double phi_max, double h_st,
                         double gamma) {
  if (!(tau_max > 0.0)) throw DomainError("fit_max_params: requires tau_max > 0");
  if (!(gamma > 0.0)) throw DomainError("fit_max_params: requires gamma > 0");
  const double gt = gamma * tau_max;
  if (std::fabs(gt - 1.5) < 1e-6)
    throw DegenerateFit("fit_max_params: gamma*tau_max too close to 3/2");

  FitParams fp;
  fp.tau_max = tau_max;
  fp.phi_max = phi_max;
  fp.H_st = h_st;
  fp.gamma = gamma;
  fp.a = ((0.5 * gt + 0.75) * h_st +
          (0.5 * gt - 0.75) * (h_st - phi_max) * std::exp(gt)) /
         (0.5 * gamma * std::pow(tau_max, 1.75));
  fp.b = (gamma * std::pow(tau_max, 0.25) * h_st - fp.a * (gt - 0.75)) *
         std::exp(-0.5 * gt) / (0.5 * gt - 0.75);
  return fp;
}

double flux_max_model(const FitParams& fp, double tau) {
  if (!(tau > 0.0)) throw DomainError("flux_max_model: requires tau > 0");
  const double eg = std::exp(-fp.gamma * tau);
  const double eh = std::exp(-0.5 * fp.gamma * tau);
  return fp.H_st * (1.0 - eg) + std::pow(tau, 0.75) * (fp.a * eg + fp.b * eh);
}

double near_field_approx(const FitParams& fp, double omega0_alpha, double tau) {
  if (!(tau > 0.0)) throw DomainError("near_field_approx: requires tau > 0");
  const double eg = std::exp(-fp.gamma * tau);
  const double eh = std::exp(-0.5 * fp.gamma * tau);
  const double eta = std::pow(tau, 0.75) * (fp.a * eg + fp.b * eh);
  return fp.H_st * (1.0 - eg) - eta * std::cos(omega0_alpha * tau);
}

FarFieldApprox far_field_approx(double h_st, double gamma, double omega0_alpha,
                                double tau) {
  if (!(tau > 0.0)) throw DomainError("far_field_approx: requires tau > 0");
  FarFieldApprox out;
  out.out_of_validity = tau <= 0.5 * pi / omega0_alpha;
  out.value = h_st * (1.0 - std::exp(-gamma * tau)) -
              0.5 * (gamma / omega0_alpha) * h_st *
                  std::sin(2.0 * omega0_alpha * tau);
  return out;
}

} // namespace heatflux
