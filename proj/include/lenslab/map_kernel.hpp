#pragma once

#include <complex>

namespace lenslab {

using complexd = std::complex<double>;

// Evaluation rejects points closer than this to the singular points z = +-1.
inline constexpr double kSingularGuard = 1e-12;

// Opening parameter of the lens family. Nonzero, |alpha| <= 2.
// |alpha| <= 2 is the starlike regime, |alpha| <= 1 additionally the convex one.
class LensParam {
public:
  explicit LensParam(double alpha);

  double alpha() const noexcept { return alpha_; }
  bool in_convex_range() const noexcept;

private:
  double alpha_;
};

// Interior point of the unit disc, validated on construction.
struct DiscPoint {
  complexd z;
  static DiscPoint checked(complexd z);
};

// zeta = (1+z)/(1-z) together with its principal power xi = zeta^alpha.
struct HalfPlaneValue {
  complexd zeta;
  complexd xi;
};

// Moebius map of the disc onto the right half-plane. Pole at z = 1.
complexd mobius_zeta(complexd z);

// Principal-branch power w^alpha for Re{w} >= 0, w != 0. The principal
// logarithm is continuous on the closed right half-plane minus the origin,
// which is exactly the range of mobius_zeta.
complexd half_plane_power(complexd w, double alpha);

HalfPlaneValue half_plane_value(const LensParam& p, complexd z);

// The lens map (xi-1)/(xi+1), xi = zeta(z)^alpha. Maps the disc into itself.
complexd lens_map(const LensParam& p, complexd z);

// d/dz of the lens map: 4*alpha*xi / ((1-z^2)*(xi+1)^2).
complexd lens_first_derivative(const LensParam& p, complexd z);

// Re{ z l'/l } evaluated through the closed form 4*alpha*z*xi/((1-z^2)(xi^2-1)).
// Undefined at z = 0 (the limiting value there is 1).
double starlike_operator(const LensParam& p, complexd z);

// Re{ 1 + z l''/l' } via the interior closed form
// (1+z^2)/(1-z^2) - (2*alpha*z/(1-z^2)) * (xi-1)/(xi+1).
double convexity_operator(const LensParam& p, complexd z);

}  // namespace lenslab
