#include "heatflux/quadrature.hpp"

namespace heatflux {

std::pair<double, double> default_cutoffs(double T1, const DerivedMaterial& mat,
                                          double gamma,
                                          const PhysicalConstants& pc) {
  const ThermalScales th = thermal_scales(T1, pc);
  const double lo = 1e-8 * th.omega_T;
  const double hi = std::max(50.0 * th.omega_T, mat.omega0_alpha + 40.0 * gamma);
  return {lo, hi};
}

QuadResult integrate(const std::function<double(double)>& f,
                     const QuadSpec& spec, double osc_period_hint,
                     std::span<const PeakHint> peaks) {
  auto wrapped = [&f](double w, double* out) { out[0] = f(w); };
  return detail::adaptive_gk<1>(wrapped, spec, osc_period_hint, peaks)[0];
}

} // namespace heatflux
