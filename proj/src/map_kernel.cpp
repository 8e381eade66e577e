#include "lenslab/map_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace lenslab {

namespace {

void guard_not_pm1(complexd z) {
  if (std::abs(1.0 - z) < kSingularGuard || std::abs(1.0 + z) < kSingularGuard) {
    throw std::domain_error("lens map: point too close to the singularities z = +-1");
  }
}

}  // namespace

LensParam::LensParam(double alpha) : alpha_(alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw std::domain_error("LensParam: alpha must be nonzero and finite");
  }
  if (std::abs(alpha) > 2.0) {
    throw std::domain_error("LensParam: alpha must lie in [-2,2]");
  }
}

bool LensParam::in_convex_range() const noexcept { return std::abs(alpha_) <= 1.0; }

DiscPoint DiscPoint::checked(complexd z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::domain_error("DiscPoint: |z| must be < 1");
  }
  guard_not_pm1(z);
  return DiscPoint{z};
}

complexd mobius_zeta(complexd z) {
  if (std::abs(1.0 - z) < kSingularGuard) {
    throw std::domain_error("mobius_zeta: pole at z = 1");
  }
  return (1.0 + z) / (1.0 - z);
}

complexd half_plane_power(complexd w, double alpha) {
  if (w == complexd(0.0, 0.0)) {
    throw std::domain_error("half_plane_power: w must be nonzero");
  }
  return std::exp(alpha * std::log(w));
}

HalfPlaneValue half_plane_value(const LensParam& p, complexd z) {
  guard_not_pm1(z);
  const complexd zeta = mobius_zeta(z);
  return HalfPlaneValue{zeta, half_plane_power(zeta, p.alpha())};
}

complexd lens_map(const LensParam& p, complexd z) {
  const complexd xi = half_plane_value(p, z).xi;
  const complexd den = xi + 1.0;
  if (std::abs(den) < kSingularGuard) {
    throw std::runtime_error("lens_map: xi + 1 below denominator guard");
  }
  return (xi - 1.0) / den;
}

complexd lens_first_derivative(const LensParam& p, complexd z) {
  const complexd xi = half_plane_value(p, z).xi;
  const complexd den = xi + 1.0;
  if (std::abs(den) < kSingularGuard) {
    throw std::runtime_error("lens_first_derivative: xi + 1 below denominator guard");
  }
  return 4.0 * p.alpha() * xi / ((1.0 - z * z) * den * den);
}

double starlike_operator(const LensParam& p, complexd z) {
  if (z == complexd(0.0, 0.0)) {
    throw std::domain_error("starlike_operator: undefined at z = 0 (limit value is 1)");
  }
  const complexd xi = half_plane_value(p, z).xi;
  // z l'/l = 4*alpha*z*xi / ((1-z^2)(xi^2-1)); xi through the half-plane
  // principal branch so numerator and denominator share one branch choice.
  const complexd den = (1.0 - z * z) * (xi * xi - 1.0);
  if (std::abs(den) < kSingularGuard) {
    throw std::runtime_error("starlike_operator: denominator below guard");
  }
  return std::real(4.0 * p.alpha() * z * xi / den);
}

double convexity_operator(const LensParam& p, complexd z) {
  const HalfPlaneValue hp = half_plane_value(p, z);
  const complexd one_minus_z2 = 1.0 - z * z;
  const complexd lens = (hp.xi - 1.0) / (hp.xi + 1.0);
  return std::real((1.0 + z * z) / one_minus_z2 -
                   (2.0 * p.alpha() * z / one_minus_z2) * lens);
}

}  // namespace lenslab
