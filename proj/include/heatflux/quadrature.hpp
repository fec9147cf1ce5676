#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heatflux/constants.hpp"
#include "heatflux/errors.hpp"
#include "heatflux/materials.hpp"

namespace heatflux {

struct QuadSpec {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;           // absolute floor on the error target
  double omega_min = 0.0;         // > 0
  double omega_max = 0.0;         // > omega_min
  std::size_t max_panels = 1u << 21;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t panels_used = 0;
  bool converged = false;
};

// Request for extra initial panels of the given width around a sharp feature
// (the polarizability resonance: center omega0_alpha, width gamma/4).
struct PeakHint {
  double center = 0.0;
  double width = 0.0;
};

// omega_max = max(50 w_T, omega0_alpha + 40 gamma); omega_min = 1e-8 w_T.
// The Planck factor cuts off the spectrum at a few w_T, but at low T the
// resonance tail reaches further and dominates the cutoff choice.
std::pair<double, double> default_cutoffs(double T1, const DerivedMaterial& mat,
                                          double gamma,
                                          const PhysicalConstants& pc = {});

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1]. Odd indices are the embedded 7-point
// Gauss nodes (zero Gauss weight at even indices).
inline constexpr std::array<double, 15> gk_nodes = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr std::array<double, 15> gk_wk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

inline constexpr std::array<double, 15> gk_wg = {
    0.0,
    0.129484966168869693270611432679082,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.417959183673469387755102040816327,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.129484966168869693270611432679082,
    0.0};

// Seed panel counts up to this limit use worst-first global refinement with
// stored panels; beyond it (heavily oscillatory large-tau integrands) a
// streaming depth-first pass with a width-proportional error budget keeps
// memory flat.
inline constexpr std::size_t heap_seed_limit = 1u << 16;

template <int N>
struct PanelEval {
  double a = 0.0, b = 0.0;
  std::array<double, N> val{}, err{};
};

template <int N, class F>
void gk_eval(F& f, double a, double b, PanelEval<N>& p) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::array<double, N> k{}, g{};
  double y[N];
  for (int j = 0; j < 15; ++j) {
    const double x = c + h * gk_nodes[j];
    f(x, y);
    for (int n = 0; n < N; ++n) {
      if (!std::isfinite(y[n]))
        throw DomainError("integrate: integrand non-finite at omega = " +
                          std::to_string(x));
      k[n] += gk_wk[j] * y[n];
      g[n] += gk_wg[j] * y[n];
    }
  }
  p.a = a;
  p.b = b;
  for (int n = 0; n < N; ++n) {
    p.val[n] = k[n] * h;
    p.err[n] = std::abs(k[n] - g[n]) * h;
  }
}

inline void validate_quad_spec(const QuadSpec& spec) {
  if (!(spec.omega_min > 0.0) || !(spec.omega_min < spec.omega_max))
    throw DomainError("integrate: requires 0 < omega_min < omega_max");
  if (!(spec.rel_tol > 0.0) || spec.rel_tol > 1e-2)
    throw DomainError("integrate: rel_tol must be in (0, 1e-2]");
  if (spec.max_panels < 16)
    throw DomainError("integrate: max_panels must be >= 16");
}

// Sorted breakpoints of the fine panels requested across each peak,
// restricted to [lo, hi].
inline std::vector<double> peak_breakpoints(std::span<const PeakHint> peaks,
                                            double lo, double hi) {
  std::vector<double> pts;
  for (const PeakHint& pk : peaks) {
    if (!(pk.width > 0.0)) continue;
    const double half = 40.0 * pk.width;
    const double wlo = std::max(lo, pk.center - half);
    const double whi = std::min(hi, pk.center + half);
    if (!(wlo < whi)) continue;
    for (double x = wlo; x < whi; x += pk.width) pts.push_back(x);
    pts.push_back(whi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](double x, double y) {
                          return std::abs(y - x) < 1e-14 * (hi - lo);
                        }),
            pts.end());
  return pts;
}

// Worst-panel-first global bisection. Deterministic: serial evaluation,
// priority ties broken by insertion index, final sum in panel-position order.
template <int N, class F>
std::array<QuadResult, N> heap_adaptive(F& f, const QuadSpec& spec,
                                        std::size_t n_base,
                                        const std::vector<double>& peak_pts) {
  struct Panel {
    double a, b;
    std::array<double, N> val, err;
    bool leaf = true;
  };

  const double lo = spec.omega_min, hi = spec.omega_max;
  const double range = hi - lo;

  std::vector<double> pts;
  pts.reserve(n_base + 1 + peak_pts.size());
  for (std::size_t i = 0; i <= n_base; ++i)
    pts.push_back(lo + range * static_cast<double>(i) / static_cast<double>(n_base));
  pts.insert(pts.end(), peak_pts.begin(), peak_pts.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](double x, double y) {
                          return std::abs(y - x) < 1e-14 * range;
                        }),
            pts.end());
  pts.front() = lo;
  pts.back() = hi;

  std::vector<Panel> panels;
  panels.reserve(pts.size() + 256);
  std::array<double, N> tot{}, err_tot{};
  PanelEval<N> pe;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    gk_eval<N>(f, pts[i], pts[i + 1], pe);
    Panel p{pe.a, pe.b, pe.val, pe.err, true};
    for (int n = 0; n < N; ++n) {
      tot[n] += p.val[n];
      err_tot[n] += p.err[n];
    }
    panels.push_back(p);
  }

  // Fixed normalization for panel priorities, set once after seeding.
  std::array<double, N> scale;
  for (int n = 0; n < N; ++n)
    scale[n] =
        std::max({spec.abs_tol, spec.rel_tol * std::abs(tot[n]), 1e-300});

  auto priority = [&](const Panel& p) {
    double s = 0.0;
    for (int n = 0; n < N; ++n) s += p.err[n] / scale[n];
    return s;
  };

  auto below_tol = [&] {
    for (int n = 0; n < N; ++n)
      if (err_tot[n] > std::max(spec.abs_tol, spec.rel_tol * std::abs(tot[n])))
        return false;
    return true;
  };

  std::priority_queue<std::pair<double, std::size_t>> queue;
  for (std::size_t i = 0; i < panels.size(); ++i)
    queue.emplace(priority(panels[i]), i);

  while (!below_tol() && panels.size() + 1 < spec.max_panels &&
         !queue.empty()) {
    const std::size_t id = queue.top().second;
    queue.pop();
    Panel parent = panels[id];
    const double mid = 0.5 * (parent.a + parent.b);
    if (mid <= parent.a || mid >= parent.b) continue; // fp resolution floor
    panels[id].leaf = false;
    PanelEval<N> e1, e2;
    gk_eval<N>(f, parent.a, mid, e1);
    gk_eval<N>(f, mid, parent.b, e2);
    Panel c1{e1.a, e1.b, e1.val, e1.err, true};
    Panel c2{e2.a, e2.b, e2.val, e2.err, true};
    for (int n = 0; n < N; ++n) {
      tot[n] += c1.val[n] + c2.val[n] - parent.val[n];
      err_tot[n] += c1.err[n] + c2.err[n] - parent.err[n];
    }
    queue.emplace(priority(c1), panels.size());
    panels.push_back(c1);
    queue.emplace(priority(c2), panels.size());
    panels.push_back(c2);
  }

  std::vector<std::size_t> leaves;
  leaves.reserve(panels.size());
  for (std::size_t i = 0; i < panels.size(); ++i)
    if (panels[i].leaf) leaves.push_back(i);
  std::sort(leaves.begin(), leaves.end(), [&](std::size_t x, std::size_t y) {
    return panels[x].a < panels[y].a;
  });

  std::array<QuadResult, N> out;
  for (int n = 0; n < N; ++n) {
    double sum = 0.0, comp = 0.0, esum = 0.0;
    for (std::size_t id : leaves) {
      const double y = panels[id].val[n] - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      esum += panels[id].err[n];
    }
    out[n].value = sum;
    out[n].err_estimate = esum;
    out[n].panels_used = leaves.size();
    out[n].converged =
        esum <= std::max(spec.abs_tol, spec.rel_tol * std::abs(sum));
  }
  return out;
}

// Streaming left-to-right pass: each seed panel is refined depth-first until
// its error fits a width-proportional share of the absolute budget. Memory
// stays flat regardless of seed count.
template <int N, class F>
std::array<QuadResult, N> stream_adaptive(F& f, const QuadSpec& spec,
                                          std::size_t n_base,
                                          const std::vector<double>& peak_pts,
                                          double abs_budget) {
  const double lo = spec.omega_min, hi = spec.omega_max;
  const double range = hi - lo;
  const double per_width = abs_budget / range;

  std::array<double, N> sum{}, comp{}, esum{};
  std::size_t leaves = 0;

  std::vector<PanelEval<N>> stack;
  stack.reserve(64);

  auto accept = [&](const PanelEval<N>& p) {
    for (int n = 0; n < N; ++n) {
      const double y = p.val[n] - comp[n];
      const double t = sum[n] + y;
      comp[n] = (t - sum[n]) - y;
      sum[n] = t;
      esum[n] += p.err[n];
    }
    ++leaves;
  };

  auto process = [&](double a0, double b0) {
    PanelEval<N> root;
    gk_eval<N>(f, a0, b0, root);
    stack.clear();
    stack.push_back(root);
    while (!stack.empty()) {
      PanelEval<N> p = stack.back();
      stack.pop_back();
      const double tol_w = per_width * (p.b - p.a);
      bool ok = true;
      for (int n = 0; n < N; ++n) ok = ok && p.err[n] <= tol_w;
      const double mid = 0.5 * (p.a + p.b);
      if (ok || leaves + stack.size() + 2 >= spec.max_panels || mid <= p.a ||
          mid >= p.b) {
        accept(p);
        continue;
      }
      PanelEval<N> l, r;
      gk_eval<N>(f, p.a, mid, l);
      gk_eval<N>(f, mid, p.b, r);
      stack.push_back(r);
      stack.push_back(l); // left child on top: emit in position order
    }
  };

  std::size_t pk = 0;
  for (std::size_t i = 0; i < n_base; ++i) {
    double a = lo + range * static_cast<double>(i) / static_cast<double>(n_base);
    const double b =
        lo + range * static_cast<double>(i + 1) / static_cast<double>(n_base);
    while (pk < peak_pts.size() && peak_pts[pk] <= a + 1e-14 * range) ++pk;
    while (pk < peak_pts.size() && peak_pts[pk] < b - 1e-14 * range) {
      process(a, peak_pts[pk]);
      a = peak_pts[pk];
      ++pk;
    }
    process(a, b);
  }

  std::array<QuadResult, N> out;
  for (int n = 0; n < N; ++n) {
    out[n].value = sum[n];
    out[n].err_estimate = esum[n];
    out[n].panels_used = leaves;
    out[n].converged = esum[n] <=
        std::max(spec.abs_tol, spec.rel_tol * std::abs(sum[n]));
  }
  return out;
}

// f(w, out) fills out[0..N). Adaptive bisection until every component meets
// max(abs_tol, rel_tol * |integral|) or the panel budget is exhausted.
template <int N, class F>
std::array<QuadResult, N> adaptive_gk(F&& f, const QuadSpec& spec,
                                      double osc_period_hint,
                                      std::span<const PeakHint> peaks) {
  static_assert(N >= 1);
  validate_quad_spec(spec);

  const double lo = spec.omega_min, hi = spec.omega_max;
  const double range = hi - lo;

  double base_width = range / 16.0;
  if (osc_period_hint > 0.0)
    base_width = std::min(base_width, osc_period_hint / 8.0);
  const double n_req = std::ceil(range / base_width);
  const std::size_t n_base =
      n_req < 16.0 ? 16 : static_cast<std::size_t>(n_req);

  const std::vector<double> peak_pts = peak_breakpoints(peaks, lo, hi);

  if (n_base + peak_pts.size() <= heap_seed_limit)
    return heap_adaptive<N>(f, spec, n_base, peak_pts);

  double abs_budget = spec.abs_tol;
  if (!(abs_budget > 0.0)) {
    // No absolute scale given: estimate the integral magnitude with an
    // unrefined pass, then stream against rel_tol of that estimate.
    auto est = stream_adaptive<N>(f, spec, n_base, peak_pts,
                                  std::numeric_limits<double>::max());
    double mag = 0.0;
    for (int n = 0; n < N; ++n) mag = std::max(mag, std::abs(est[n].value));
    abs_budget = std::max(spec.rel_tol * mag, 1e-300);
  }
  return stream_adaptive<N>(f, spec, n_base, peak_pts, abs_budget);
}

} // namespace detail

// Adaptive nested-rule integration of f over [omega_min, omega_max].
// osc_period_hint = 2 pi / tau when the integrand carries cos/sin(w tau)
// factors: the initial panel width is then bounded by hint/8. On budget
// exhaustion returns the best estimate with converged = false.
QuadResult integrate(const std::function<double(double)>& f,
                     const QuadSpec& spec, double osc_period_hint = 0.0,
                     std::span<const PeakHint> peaks = {});

} // namespace heatflux
