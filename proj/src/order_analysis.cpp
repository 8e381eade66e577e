#include "lenslab/order_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lenslab {

namespace {

constexpr double kPi = std::numbers::pi;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Fold (alpha, t) to |alpha| and t in (0,pi) using l_alpha(z) = l_{-alpha}(-z)
// together with conjugation symmetry. Boundary operator values are unchanged.
double fold_to_upper(double alpha, double t) {
  if (alpha < 0.0) {
    t += kPi;
    if (t >= 2.0 * kPi) t -= 2.0 * kPi;
  }
  if (t > kPi) t = 2.0 * kPi - t;
  return t;
}

void require_convex_alpha(double alpha) {
  if (alpha == 0.0 || std::abs(alpha) > 1.0) {
    throw std::domain_error("boundary value: alpha must lie in [-1,1] minus 0");
  }
}

double b_upper(double alpha, double t) {
  // cot(t/2)^alpha, t in (0,pi)
  return std::pow(1.0 / std::tan(0.5 * t), alpha);
}

}  // namespace

const char* to_string(OrderKind kind) noexcept {
  return kind == OrderKind::starlike ? "starlike" : "convex";
}

BoundaryAngle BoundaryAngle::checked(double t, double eps_t) {
  if (!(t > eps_t && t < 2.0 * kPi - eps_t) || std::abs(t - kPi) <= eps_t) {
    throw std::domain_error("BoundaryAngle: t must stay eps_t away from {0, pi, 2pi}");
  }
  return BoundaryAngle(t);
}

double boundary_b(double alpha, BoundaryAngle ta) {
  const double t = ta.t();
  if (t < kPi) {
    return std::pow(1.0 / std::tan(0.5 * t), alpha);
  }
  // -sin t/(1-cos t) = -cot(t/2) > 0 on (pi,2pi)
  return -std::pow(-1.0 / std::tan(0.5 * t), alpha);
}

double sin_from_b(double alpha, double b) {
  if (alpha == 0.0) throw std::domain_error("sin_from_b: alpha must be nonzero");
  if (!(b > 0.0)) throw std::domain_error("sin_from_b: b must be positive");
  // 2 b^{1/a} / (1 + b^{2/a}) = sech(log(b)/a); stays finite for extreme b.
  return 1.0 / std::cosh(std::log(b) / alpha);
}

complexd boundary_zeta(BoundaryAngle ta) {
  return complexd(0.0, 1.0 / std::tan(0.5 * ta.t()));
}

double boundary_starlike_value(double alpha, BoundaryAngle ta) {
  require_convex_alpha(alpha);
  const double a = std::abs(alpha);
  const double t = fold_to_upper(alpha, ta.t());
  const double b = b_upper(a, t);
  const double s = std::sin(0.5 * kPi * a);
  const double c = std::cos(0.5 * kPi * a);
  const double b2 = b * b;
  const double den = (b2 + 1.0) * (b2 + 1.0) - 4.0 * b2 * c * c;
  return a * s * (b / std::sin(t)) * (2.0 * (b2 + 1.0) / den);
}

double boundary_convexity_value(double alpha, BoundaryAngle ta) {
  require_convex_alpha(alpha);
  const double a = std::abs(alpha);
  const double t = fold_to_upper(alpha, ta.t());
  const double b = b_upper(a, t);
  const double s = std::sin(0.5 * kPi * a);
  const double c = std::cos(0.5 * kPi * a);
  // 2a * Im{z/(1-z^2)} * Im{(xi-1)/(xi+1)}
  return 2.0 * a * b * s / ((1.0 + 2.0 * b * c + b * b) * std::sin(t));
}

double boundary_convexity_value_alt(double alpha, BoundaryAngle ta) {
  require_convex_alpha(alpha);
  const double a = std::abs(alpha);
  const double t = fold_to_upper(alpha, ta.t());
  const complexd xi = half_plane_power(boundary_zeta(BoundaryAngle::checked(t, 0.0)), a);
  const double im_z = std::sin(t);
  // 1 - z^2 = 2 sin^2 t - i sin 2t on |z| = 1 (cancellation-free form)
  const complexd one_minus_z2(2.0 * im_z * im_z, -std::sin(2.0 * t));
  return 8.0 * a * im_z * xi.imag() / (std::norm(xi + 1.0) * std::norm(one_minus_z2));
}

double reduced_starlike_g(double alpha, double x) {
  if (!(x > 0.0)) throw std::domain_error("reduced_starlike_g: x must be positive");
  const double c = std::cos(0.5 * kPi * alpha);
  const double x2 = x * x;
  const double den = (1.0 + x2) * (1.0 + x2) - 4.0 * x2 * c * c;
  // (1 + x^{2/a})/x^{1/a} = 2 cosh(log(x)/a)
  return x * (1.0 + x2) / den * 2.0 * std::cosh(std::log(x) / alpha);
}

int reduced_starlike_g_derivative_sign(double alpha, double x) {
  if (!(x > 0.0)) throw std::domain_error("reduced_starlike_g_derivative_sign: x must be positive");
  const double c2 = std::pow(std::cos(0.5 * kPi * alpha), 2);
  const double x2 = x * x;
  const double den = (1.0 + x2) * (1.0 + x2) - 4.0 * x2 * c2;
  const double f = x * (1.0 + x2) / den;
  const double fp = (1.0 - x2) * ((1.0 + x2) * (1.0 + x2) + 4.0 * x2 * c2) / (den * den);
  const double h = 2.0 * std::cosh(std::log(x) / alpha);
  const double hp = (std::pow(x, 1.0 / alpha - 1.0) - std::pow(x, -1.0 / alpha - 1.0)) / alpha;
  return sign_of(fp * h + f * hp);
}

double m_of_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("m_of_alpha: alpha must lie in (0,1]");
  }
  const double s = std::sin(0.5 * kPi * alpha);
  return 1.0 / (s * s);
}

double reduced_convex_g(double alpha, double x) {
  if (!(x > 0.0)) throw std::domain_error("reduced_convex_g: x must be positive");
  // x^{1-a} + 2x cos + x^{1+a} = x * (2 cosh(a log x) + 2 cos(pi a/2))
  const double den = x * 2.0 * (std::cosh(alpha * std::log(x)) + std::cos(0.5 * kPi * alpha));
  return (1.0 + x * x) / den;
}

int reduced_convex_g_derivative_sign(double alpha, double x) {
  if (!(x > 0.0)) throw std::domain_error("reduced_convex_g_derivative_sign: x must be positive");
  const double c = std::cos(0.5 * kPi * alpha);
  const double num = (1.0 + alpha) * std::pow(x, alpha) * (std::pow(x, 2.0 - 2.0 * alpha) - 1.0) +
                     2.0 * c * (x * x - 1.0) +
                     (1.0 - alpha) * std::pow(x, -alpha) * (std::pow(x, 2.0 + 2.0 * alpha) - 1.0);
  return sign_of(num);
}

double closed_form_starlike_order(double alpha) {
  const double a = std::abs(alpha);
  if (a == 0.0 || a > 2.0) {
    throw std::domain_error("closed_form_starlike_order: alpha must lie in [-2,2] minus 0");
  }
  if (a > 1.0) return 0.0;
  return a / std::sin(0.5 * kPi * a);
}

double closed_form_convex_order(double alpha) {
  const double a = std::abs(alpha);
  if (a == 0.0 || a > 1.0) {
    throw std::domain_error("closed_form_convex_order: alpha must lie in [-1,1] minus 0");
  }
  return a * std::sin(0.5 * kPi * a) / (1.0 + std::cos(0.5 * kPi * a));
}

MinimizeResult minimize_boundary(const std::function<double(double)>& objective,
                                 double t_lo, double t_hi, double tol,
                                 int scan_points) {
  if (!(t_hi > t_lo) || scan_points < 3) {
    throw std::invalid_argument("minimize_boundary: bad bracket or scan size");
  }
  const double step = (t_hi - t_lo) / (scan_points - 1);
  int best = -1;
  double best_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i < scan_points; ++i) {
    const double v = objective(t_lo + i * step);
    if (std::isfinite(v) && v < best_v) {
      best_v = v;
      best = i;
    }
  }
  if (best < 0) {
    throw std::runtime_error("minimize_boundary: coarse scan found no finite values");
  }
  double a = std::max(t_lo, t_lo + (best - 1) * step);
  double b = std::min(t_hi, t_lo + (best + 1) * step);

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = objective(d);
    }
  }
  const double t_star = 0.5 * (a + b);
  return MinimizeResult{t_star, objective(t_star)};
}

OrderResult numeric_order(double alpha, OrderKind kind, double tol, double eps_t,
                          int scan_points) {
  const LensParam p(alpha);
  const double a = std::abs(alpha);
  OrderResult r{};
  r.alpha = alpha;
  r.kind = kind;
  r.tol = tol;

  if (kind == OrderKind::convex && a > 1.0) {
    throw std::domain_error("numeric_order: convex order requires |alpha| <= 1");
  }
  r.closed_form = kind == OrderKind::starlike ? closed_form_starlike_order(alpha)
                                              : closed_form_convex_order(alpha);

  if (kind == OrderKind::starlike && a > 1.0) {
    // Endpoint-limit infimum: the operator decays to 0 along z -> 1.
    const LensParam pa(a);
    double prev = std::numeric_limits<double>::infinity();
    double last = prev;
    bool decreasing = true;
    for (int k = 2; k <= 7; ++k) {
      last = starlike_operator(pa, complexd(1.0 - std::pow(10.0, -k), 0.0));
      decreasing = decreasing && last < prev;
      prev = last;
    }
    const bool decays = decreasing && last > 0.0;
    r.numeric = decays ? 0.0 : last;
    r.minimizer_t = 0.0;   // boundary-limit sentinel
    r.minimizer_x = -1.0;  // no attained reduced-variable minimizer
    r.residual = std::abs(r.closed_form - r.numeric);
    r.pass = decays && r.residual <= tol;
    return r;
  }

  auto objective = [&](double t) {
    return kind == OrderKind::starlike
               ? boundary_starlike_value(alpha, BoundaryAngle::checked(t, 0.5 * eps_t))
               : boundary_convexity_value(alpha, BoundaryAngle::checked(t, 0.5 * eps_t));
  };
  const MinimizeResult mr =
      minimize_boundary(objective, eps_t, kPi - eps_t, 1e-10, scan_points);
  r.numeric = mr.value;
  r.minimizer_t = mr.t_star;
  const double b = boundary_b(a, BoundaryAngle::checked(mr.t_star, 0.5 * eps_t));
  r.minimizer_x = kind == OrderKind::starlike ? b : std::pow(b, 1.0 / a);
  r.residual = std::abs(r.closed_form - r.numeric);
  r.pass = r.residual <= tol;
  return r;
}

}  // namespace lenslab
