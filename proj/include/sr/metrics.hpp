#pragma once

#include "sr/torus.hpp"

namespace sr {

struct HHParams {
  double eps_dist = 0.49;
  int center_grid = 64;   // per-axis resolution, capped at 1e6 total centers
  int radius_grid = 256;  // extra uniform radii merged into the breakpoint sweep
  bool parallel = true;   // serial sweep kept as the reference for testing
};

// Exact Wasserstein between normalized combs. Nonnegative pairs go through
// the primal transportation LP; signed inputs through the bounded-Lipschitz
// dual on the union support (sup of sum h_i (f-g)_i over |h_i - h_j| <=
// d_tor(x_i,x_j), |h_i| <= sqrt(d)). The dual is exact for finite supports: a
// McShane extension h(x) = min_i (h_i + d(x,x_i)) clamped to [-sqrt(d),
// sqrt(d)] realizes any feasible dual vector as a valid test function.
double wasserstein(const DiracComb& f, const DiracComb& g);
double wasserstein_primal(const DiracComb& f, const DiracComb& g);  // nonneg inputs
double wasserstein_dual(const DiracComb& f, const DiracComb& g);

// True iff the mass-comparison inequality fails in either direction at
// witness (x, tau): D1(Ball(x,tau)) > D2(Ball(x,tau+eps_dist)) + eps or the
// symmetric statement.
bool hh_violation(const DiracComb& d1, const DiracComb& d2, double eps_dist, double eps,
                  const TorusPoint& x, double tau);

struct HHInterval {
  double lower = 0.0;
  double upper = 0.0;
  TorusPoint witness_center;
  double witness_tau = 0.0;
  int witness_direction = 0;  // 0: D1 vs D2, 1: D2 vs D1
  double grid_r0 = 0.0;       // covering radius of the center grid (0 when exact)
  bool exact = false;         // lower == upper certified (d == 1)
};

// Certified interval for the heavy-hitter distance. In d = 1 the witness
// family (support points plus pairwise arc midpoints, radii swept at exact
// ball-mass breakpoints) provably attains the supremum, so lower == upper.
// In d >= 2 the lower bound is the best witness found over support points
// plus a uniform center grid, and the upper bound comes from relaxing the
// ball radii by the grid covering radius r0 (any center is within r0 of a
// grid center, so margins at scale eps_dist are dominated by relaxed margins
// at scale eps_dist - 2 r0 evaluated on the grid).
HHInterval hh_distance(const DiracComb& d1, const DiracComb& d2, const HHParams& p);

// Computes w = wasserstein(d1,d2) and checks hh upper bound <= w/eps_dist
// plus the grid slack implied by hh_distance's relaxation.
bool check_wasserstein_implies_hh(const DiracComb& d1, const DiracComb& d2, double eps_dist);

}  // namespace sr
