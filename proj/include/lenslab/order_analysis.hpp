#pragma once

#include <functional>

#include "lenslab/map_kernel.hpp"

namespace lenslab {

enum class OrderKind { starlike, convex };

const char* to_string(OrderKind kind) noexcept;

inline constexpr double kDefaultEpsT = 1e-9;

// Boundary parameter t with e^{it} bounded away from +-1.
class BoundaryAngle {
public:
  static BoundaryAngle checked(double t, double eps_t = kDefaultEpsT);
  double t() const noexcept { return t_; }

private:
  explicit BoundaryAngle(double t) : t_(t) {}
  double t_;
};

// Signed modulus proxy b(t): cot(t/2)^alpha on (0,pi), -(-cot(t/2))^alpha on (pi,2pi).
double boundary_b(double alpha, BoundaryAngle t);

// Inverse relation sin t = 2 b^{1/alpha} / (1 + b^{2/alpha}), b > 0.
double sin_from_b(double alpha, double b);

// zeta(e^{it}) = i*cot(t/2), the exact boundary trace of the Moebius map.
complexd boundary_zeta(BoundaryAngle t);

// Radial limit of Re{z l'/l} on |z|=1, from the all-real boundary reduction.
double boundary_starlike_value(double alpha, BoundaryAngle t);

// Radial limit of Re{1 + z l''/l'} on |z|=1 via the Im-product reduction.
double boundary_convexity_value(double alpha, BoundaryAngle t);

// Same quantity through 8*alpha*Im{z}*Im{xi} / (|xi+1|^2 |1-z^2|^2).
double boundary_convexity_value_alt(double alpha, BoundaryAngle t);

// One-variable reduction of the starlike boundary value, x = b(t):
// g(x) = x(1+x^2)/((1+x^2)^2 - 4x^2 cos^2(pi a/2)) * (x^{1/a} + x^{-1/a}).
double reduced_starlike_g(double alpha, double x);

// Sign of g'(x) from the closed-form pieces: -1 on (0,1), 0 at 1, +1 on (1,inf).
int reduced_starlike_g_derivative_sign(double alpha, double x);

// Minimum of reduced_starlike_g over (0,inf): 1/sin^2(pi alpha/2).
double m_of_alpha(double alpha);

// One-variable reduction of the convex boundary value, x = b(t)^{1/alpha}:
// g(x) = (1+x^2) / (x^{1-a} + 2x cos(pi a/2) + x^{1+a}).
double reduced_convex_g(double alpha, double x);

int reduced_convex_g_derivative_sign(double alpha, double x);

// |alpha|/sin(pi|alpha|/2) on (0,1], 0 on (1,2]. Even in alpha.
double closed_form_starlike_order(double alpha);

// |alpha| sin(pi|alpha|/2) / (1 + cos(pi|alpha|/2)). Even in alpha.
double closed_form_convex_order(double alpha);

struct MinimizeResult {
  double t_star;
  double value;
};

// Coarse scan over the bracket followed by golden-section refinement.
MinimizeResult minimize_boundary(const std::function<double(double)>& objective,
                                 double t_lo, double t_hi, double tol,
                                 int scan_points = 2048);

struct OrderResult {
  double alpha;
  OrderKind kind;
  double closed_form;
  double numeric;
  double minimizer_t;  // sentinel 0 when the infimum is an endpoint limit
  double minimizer_x;  // sentinel -1 in the same case
  double residual;
  double tol;
  bool pass;
};

// Numeric order by boundary minimization over t in (eps_t, pi - eps_t),
// compared against the closed form. For starlike |alpha| in (1,2] the
// infimum is the endpoint limit 0, verified by sampling z -> +-1.
OrderResult numeric_order(double alpha, OrderKind kind, double tol = 1e-8,
                          double eps_t = kDefaultEpsT, int scan_points = 2048);

}  // namespace lenslab
