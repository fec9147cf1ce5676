#include "heatflux/greens.hpp"

#include <cmath>

#include "heatflux/errors.hpp"

namespace heatflux {

namespace {

Vec3 diff(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

double norm(const Vec3& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

} // namespace

GfTensor GfTensor::transposed() const {
  GfTensor t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
  return t;
}

GfTensor gf_electric_vacuum(const Vec3& r1, const Vec3& r2, double omega,
                            const PhysicalConstants& pc) {
  const Vec3 a = diff(r1, r2);
  const double d = norm(a);
  if (d == 0.0)
    throw DomainError("gf_electric_vacuum: coincident points (self-term excluded)");
  const double k = omega / pc.c;
  const std::complex<double> ikd(0.0, k * d);
  const std::complex<double> phase = std::exp(ikd);
  const double k2d2 = k * k * d * d;
  const std::complex<double> pre = phase / (4.0 * pi * k * k * std::pow(d, 5));
  const std::complex<double> iso = d * d * (-1.0 + ikd + k2d2);
  const std::complex<double> dyad = 3.0 - 3.0 * ikd - k2d2;

  GfTensor g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::complex<double> v = dyad * a[i] * a[j];
      if (i == j) v += iso;
      g.m[i][j] = pre * v;
    }
  return g;
}

GfTensor gf_magnetic_vacuum(const Vec3& r1, const Vec3& r2, double omega,
                            const PhysicalConstants& pc) {
  const Vec3 a = diff(r1, r2);
  const double d = norm(a);
  if (d == 0.0)
    throw DomainError("gf_magnetic_vacuum: coincident points");
  const double k = omega / pc.c;
  const std::complex<double> ikd(0.0, k * d);
  const std::complex<double> pre =
      std::exp(ikd) * (-1.0 + ikd) / (4.0 * pi * d * d * d);

  GfTensor g;
  g.m[0][0] = g.m[1][1] = g.m[2][2] = 0.0;
  g.m[0][1] = -pre * a[2];
  g.m[0][2] = pre * a[1];
  g.m[1][0] = pre * a[2];
  g.m[1][2] = -pre * a[0];
  g.m[2][0] = -pre * a[1];
  g.m[2][1] = pre * a[0];
  return g;
}

double trace_EE_vacuum(double d, double omega, const PhysicalConstants& pc) {
  if (!(d > 0.0) || !(omega > 0.0))
    throw DomainError("trace_EE_vacuum: requires d > 0 and omega > 0");
  const double kd = omega / pc.c * d;
  const double ikd2 = 1.0 / (kd * kd);
  return (1.0 + ikd2 + 3.0 * ikd2 * ikd2) / (8.0 * pi * pi * d * d);
}

double trace_HH_vacuum(double d, double omega, const PhysicalConstants& pc) {
  if (!(d > 0.0) || !(omega > 0.0))
    throw DomainError("trace_HH_vacuum: requires d > 0 and omega > 0");
  const double k = omega / pc.c;
  const double kd = k * d;
  return k * k * (1.0 + 1.0 / (kd * kd)) / (8.0 * pi * pi * d * d);
}

} // namespace heatflux
