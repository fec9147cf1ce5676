#pragma once

namespace heatflux {

// Fixed CODATA-2018 values; not user-configurable.
struct PhysicalConstants {
  double c = 299792458.0;        // speed of light in vacuum, m/s (exact)
  double hbar = 1.054571817e-34; // reduced Planck constant, J s
  double kB = 1.380649e-23;      // Boltzmann constant, J/K (exact)
};

inline constexpr double pi = 3.14159265358979323846;

} // namespace heatflux
