#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lenslab/order_analysis.hpp"

namespace lenslab {

struct CheckResult {
  std::string name;
  double measured;
  double expected;
  double tol;
  bool pass;
};

struct VerifyReport {
  double alpha;
  std::vector<CheckResult> checks;
  bool overall;

  void add(std::string name, double measured, double expected, double tol);
  void add_skipped(std::string name);
  nlohmann::ordered_json to_json() const;
};

// Infimum of the chosen operator over a polar grid of the given radius.
// By the minimum principle this never drops below the boundary order.
double interior_grid_infimum(const LensParam& p, OrderKind kind, double radius,
                             int n_radial, int n_angular);

struct RadialLimit {
  double measured;  // Richardson-extrapolated interior operator value
  double boundary;  // closed-form boundary value at the same t
};

RadialLimit radial_limit_check(const LensParam& p, OrderKind kind, BoundaryAngle t,
                               std::span<const double> r_seq);

// Pointwise boundary identities on a grid over (eps_t, pi - eps_t); each
// identity contributes one check carrying its worst deviation over the grid.
VerifyReport identity_suite(const LensParam& p, int grid_points = 500,
                            double eps_t = kDefaultEpsT);

// Composite verification: identities, derivative finite differences,
// reduction consistency, numeric vs closed-form orders, interior infimum
// convergence. Never throws on a failed check; failures are recorded.
VerifyReport full_verify(const LensParam& p, double tol = 1e-6);

}  // namespace lenslab
