#pragma once

#include <array>
#include <complex>

#include "heatflux/constants.hpp"

namespace heatflux {

using Vec3 = std::array<double, 3>;

// 3x3 complex dyadic. Electric vacuum tensor is symmetric (r1 != r2),
// magnetic one antisymmetric.
struct GfTensor {
  std::complex<double> m[3][3];

  GfTensor transposed() const;
};

// Free-space electric dyadic between distinct points (delta self-term
// excluded; the domain is r1 != r2):
//   e^{ikd}/(4 pi k^2 d^5) [ d^2(-1+ikd+k^2d^2) I
//                            + (3-3ikd-k^2d^2)(r-r')x(r-r') ],  k = w/c.
// Throws DomainError when r1 == r2.
GfTensor gf_electric_vacuum(const Vec3& r1, const Vec3& r2, double omega,
                            const PhysicalConstants& pc = {});

// Free-space magnetic dyadic e^{ikd}/(4 pi d^3) (-1+ikd) (r-r') x I, with the
// cross-product matrix [[0,-az,ay],[az,0,-ax],[-ay,ax,0]] for a = r - r'.
GfTensor gf_magnetic_vacuum(const Vec3& r1, const Vec3& r2, double omega,
                            const PhysicalConstants& pc = {});

// Closed-form Tr{G G^dagger} of the electric vacuum dyadic:
//   (1/(8 pi^2 d^2)) [1 + 1/(kd)^2 + 3/(kd)^4].
double trace_EE_vacuum(double d, double omega, const PhysicalConstants& pc = {});

// Closed-form Tr{G G^dagger} of the magnetic vacuum dyadic:
//   (k^2/(8 pi^2 d^2)) [1 + 1/(kd)^2]; no d^-6 channel.
double trace_HH_vacuum(double d, double omega, const PhysicalConstants& pc = {});

// Environment seam for the generic stationary-flux form; exactly one shipped
// implementation (vacuum). Both traces are nonnegative for d > 0, w > 0.
class EnvTraceProvider {
public:
  virtual ~EnvTraceProvider() = default;
  virtual double trace_EE(double d, double omega) const = 0;
  virtual double trace_HH(double d, double omega) const = 0;
};

class VacuumEnv final : public EnvTraceProvider {
public:
  explicit VacuumEnv(const PhysicalConstants& pc = {}) : pc_(pc) {}
  double trace_EE(double d, double omega) const override {
    return trace_EE_vacuum(d, omega, pc_);
  }
  double trace_HH(double d, double omega) const override {
    return trace_HH_vacuum(d, omega, pc_);
  }

private:
  PhysicalConstants pc_;
};

} // namespace heatflux
