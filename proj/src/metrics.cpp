#include "sr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sr/lp.hpp"

namespace sr {

namespace {

void require_normalized(const DiracComb& c, const char* who) {
  if (!c.is_normalized(1e-9)) throw std::invalid_argument(std::string(who) + ": comb not normalized");
}

bool nonneg(const DiracComb& c) {
  for (double w : c.weights())
    if (w < 0.0) return false;
  return true;
}

// Cumulative ball mass around a fixed center, as a right-continuous step
// function of the radius.
struct MassProfile {
  std::vector<double> dist;  // sorted
  std::vector<double> cum;   // cum[i] = mass within dist[i]

  MassProfile(const DiracComb& c, const TorusPoint& center) {
    std::vector<std::pair<double, double>> dw(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
      dw[j] = {toroidal_distance(c.point(j), center), c.weight(j)};
    std::sort(dw.begin(), dw.end());
    dist.reserve(dw.size());
    cum.reserve(dw.size());
    double run = 0.0;
    for (auto& [d, w] : dw) {
      run += w;
      if (!dist.empty() && dist.back() == d)
        cum.back() = run;
      else {
        dist.push_back(d);
        cum.push_back(run);
      }
    }
  }

  double mass(double r) const {
    auto it = std::upper_bound(dist.begin(), dist.end(), r);
    if (it == dist.begin()) return 0.0;
    return cum[static_cast<std::size_t>(it - dist.begin()) - 1];
  }
};

struct CenterBest {
  double margin = -1.0;
  double tau = 0.0;
  int direction = 0;
};

// Max over tau in [0, tau_max] of A(Ball(c,tau)) - B(Ball(c,tau+eps_eff)).
// Both sides are step functions; sweeping their breakpoints is exhaustive.
std::pair<double, double> sweep_direction(const MassProfile& a, const MassProfile& b,
                                          double eps_eff, double tau_max,
                                          const std::vector<double>& extra_taus) {
  std::vector<double> taus;
  taus.reserve(a.dist.size() + b.dist.size() + extra_taus.size() + 2);
  taus.push_back(0.0);
  taus.push_back(tau_max);
  for (double t : a.dist)
    if (t <= tau_max) taus.push_back(t);
  for (double t : b.dist) {
    double v = t - eps_eff;
    if (v > 0.0 && v <= tau_max) taus.push_back(v);
  }
  for (double t : extra_taus)
    if (t >= 0.0 && t <= tau_max) taus.push_back(t);

  double best = -2.0, best_tau = 0.0;
  for (double t : taus) {
    double m = a.mass(t) - b.mass(t + eps_eff);
    if (m > best) {
      best = m;
      best_tau = t;
    }
  }
  return {best, best_tau};
}

CenterBest best_at_center(const DiracComb& d1, const DiracComb& d2, const TorusPoint& c,
                          double eps_eff, double tau_max, const std::vector<double>& extra_taus) {
  MassProfile p1(d1, c), p2(d2, c);
  auto [m12, t12] = sweep_direction(p1, p2, eps_eff, tau_max, extra_taus);
  auto [m21, t21] = sweep_direction(p2, p1, eps_eff, tau_max, extra_taus);
  if (m12 >= m21) return {m12, t12, 0};
  return {m21, t21, 1};
}

std::vector<TorusPoint> hh_centers(const DiracComb& d1, const DiracComb& d2, const HHParams& p,
                                   double* r0_out) {
  const int d = d1.dim();
  std::vector<TorusPoint> centers;
  for (const auto& pt : d1.points()) centers.push_back(pt);
  for (const auto& pt : d2.points()) centers.push_back(pt);

  if (d == 1) {
    // Exhaustive witness family. For any (x, tau), shrink the inner arc to the
    // minimal arc covering the captured support subset: its endpoints are
    // support points, so its center is a pairwise arc midpoint (or a support
    // point for singletons), and shrinking only shrinks the dilated outer arc,
    // so the margin never decreases. Both midpoints of each pair are needed
    // because two points split the circle into two arcs.
    std::vector<double> xs;
    for (const auto& pt : d1.points()) xs.push_back(pt[0]);
    for (const auto& pt : d2.points()) xs.push_back(pt[0]);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        double m = (xs[i] + xs[j]) / 2.0;
        centers.push_back(TorusPoint({m}));
        centers.push_back(TorusPoint({m + 0.5}));
      }
    *r0_out = 0.0;
  } else {
    int res = p.center_grid;
    while (res > 1 && std::pow(static_cast<double>(res), d) > 1e6) --res;
    std::vector<int> idx(d, 0);
    while (true) {
      std::vector<double> coords(d);
      for (int i = 0; i < d; ++i) coords[i] = static_cast<double>(idx[i]) / res;
      centers.emplace_back(std::move(coords));
      int i = d - 1;
      for (; i >= 0; --i) {
        if (++idx[i] < res) break;
        idx[i] = 0;
      }
      if (i < 0) break;
    }
    *r0_out = std::sqrt(static_cast<double>(d)) / (2.0 * res);
  }

  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  return centers;
}

}  // namespace

double wasserstein_primal(const DiracComb& f, const DiracComb& g) {
  require_normalized(f, "wasserstein_primal");
  require_normalized(g, "wasserstein_primal");
  if (!nonneg(f) || !nonneg(g))
    throw std::invalid_argument("wasserstein_primal: signed input, use the dual route");
  if (f.dim() != g.dim()) throw std::invalid_argument("wasserstein: dimension mismatch");

  const int m = static_cast<int>(f.size()), n = static_cast<int>(g.size());
  lp::LinearProgram prob;
  std::vector<double> cost(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      prob.add_var(0.0, lp::kInf);
      cost[static_cast<std::size_t>(i) * n + j] = toroidal_distance(f.point(i), g.point(j));
    }
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(prob.num_vars, 0.0);
    for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(i) * n + j] = 1.0;
    prob.add_constraint(std::move(row), lp::Relation::Equal, f.weight(i));
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> row(prob.num_vars, 0.0);
    for (int i = 0; i < m; ++i) row[static_cast<std::size_t>(i) * n + j] = 1.0;
    prob.add_constraint(std::move(row), lp::Relation::Equal, g.weight(j));
  }
  prob.set_objective(lp::Sense::Minimize, cost);
  lp::Solution sol = lp::solve(prob, 1e-9);
  if (sol.status != lp::Status::Optimal)
    throw std::runtime_error("wasserstein_primal: transport LP failed");
  return std::max(0.0, sol.objective_value);
}

namespace {

// The literal bounded-Lipschitz dual: variables h_i on the union support.
double dual_small(const DiracComb& diff, int dim) {
  const int u = static_cast<int>(diff.size());
  const double cap = std::sqrt(static_cast<double>(dim));
  lp::LinearProgram prob;
  for (int i = 0; i < u; ++i) prob.add_var(-cap, cap);
  for (int i = 0; i < u; ++i)
    for (int j = i + 1; j < u; ++j) {
      double dij = toroidal_distance(diff.point(i), diff.point(j));
      std::vector<double> row(u, 0.0);
      row[i] = 1.0;
      row[j] = -1.0;
      prob.add_constraint(row, lp::Relation::LessEq, dij);
      row[i] = -1.0;
      row[j] = 1.0;
      prob.add_constraint(std::move(row), lp::Relation::LessEq, dij);
    }
  prob.set_objective(lp::Sense::Maximize, diff.weights());
  lp::Solution sol = lp::solve(prob, 1e-9);
  if (sol.status != lp::Status::Optimal) throw std::runtime_error("wasserstein_dual: LP failed");
  return std::max(0.0, sol.objective_value);
}

// Equivalent flow form (exact LP dual of the above, same optimum): transport
// within the union support plus mass creation/destruction at cost sqrt(d).
// Keeps the row count linear in the support size.
double dual_flow(const DiracComb& diff, int dim) {
  const int u = static_cast<int>(diff.size());
  const double cap = std::sqrt(static_cast<double>(dim));
  lp::LinearProgram prob;
  std::vector<double> cost;
  // pi_ij for ordered pairs i != j, then alpha+_i, alpha-_i.
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      if (i == j) continue;
      prob.add_var(0.0, lp::kInf);
      cost.push_back(toroidal_distance(diff.point(i), diff.point(j)));
    }
  for (int i = 0; i < 2 * u; ++i) {
    prob.add_var(0.0, lp::kInf);
    cost.push_back(cap);
  }
  auto pair_col = [&](int i, int j) { return i * (u - 1) + (j > i ? j - 1 : j); };
  const int alpha0 = u * (u - 1);
  for (int i = 0; i < u; ++i) {
    std::vector<double> row(prob.num_vars, 0.0);
    for (int j = 0; j < u; ++j) {
      if (j == i) continue;
      row[pair_col(i, j)] += 1.0;
      row[pair_col(j, i)] -= 1.0;
    }
    row[alpha0 + 2 * i] += 1.0;
    row[alpha0 + 2 * i + 1] -= 1.0;
    prob.add_constraint(std::move(row), lp::Relation::Equal, diff.weight(i));
  }
  prob.set_objective(lp::Sense::Minimize, cost);
  lp::Solution sol = lp::solve(prob, 1e-9);
  if (sol.status != lp::Status::Optimal) throw std::runtime_error("wasserstein_dual: LP failed");
  return std::max(0.0, sol.objective_value);
}

}  // namespace

double wasserstein_dual(const DiracComb& f, const DiracComb& g) {
  require_normalized(f, "wasserstein_dual");
  require_normalized(g, "wasserstein_dual");
  if (f.dim() != g.dim()) throw std::invalid_argument("wasserstein: dimension mismatch");

  std::vector<TorusPoint> pts = f.points();
  std::vector<double> ws = f.weights();
  for (std::size_t j = 0; j < g.size(); ++j) {
    pts.push_back(g.point(j));
    ws.push_back(-g.weight(j));
  }
  DiracComb diff(std::move(pts), std::move(ws));
  if (diff.empty()) return 0.0;
  return diff.size() <= 24 ? dual_small(diff, f.dim()) : dual_flow(diff, f.dim());
}

double wasserstein(const DiracComb& f, const DiracComb& g) {
  if (nonneg(f) && nonneg(g)) return wasserstein_primal(f, g);
  return wasserstein_dual(f, g);
}

bool hh_violation(const DiracComb& d1, const DiracComb& d2, double eps_dist, double eps,
                  const TorusPoint& x, double tau) {
  if (tau < 0.0 || tau > eps_dist) throw std::invalid_argument("hh_violation: tau out of range");
  if (!d1.is_distribution(1e-9) || !d2.is_distribution(1e-9))
    throw std::invalid_argument("hh_violation: inputs must be distributions");
  double a = ball_mass(d1, x, tau), b = ball_mass(d2, x, tau + eps_dist);
  if (a > b + eps) return true;
  double a2 = ball_mass(d2, x, tau), b2 = ball_mass(d1, x, tau + eps_dist);
  return a2 > b2 + eps;
}

HHInterval hh_distance(const DiracComb& d1, const DiracComb& d2, const HHParams& p) {
  if (!d1.is_distribution(1e-9) || !d2.is_distribution(1e-9))
    throw std::invalid_argument("hh_distance: inputs must be distributions");
  if (d1.dim() != d2.dim()) throw std::invalid_argument("hh_distance: dimension mismatch");
  const double eps_dist = p.eps_dist;

  double r0 = 0.0;
  std::vector<TorusPoint> centers = hh_centers(d1, d2, p, &r0);
  std::vector<double> extra_taus;
  for (int i = 1; i < p.radius_grid; ++i)
    extra_taus.push_back(eps_dist * static_cast<double>(i) / p.radius_grid);

  const std::int64_t nc = static_cast<std::int64_t>(centers.size());
  std::vector<CenterBest> tight(nc), relaxed(nc);
  const bool exact = d1.dim() == 1;
  const double eps_relaxed = eps_dist - 2.0 * r0;

#pragma omp parallel for schedule(static) if (p.parallel)
  for (std::int64_t i = 0; i < nc; ++i) {
    tight[i] = best_at_center(d1, d2, centers[i], eps_dist, eps_dist, extra_taus);
    if (!exact && eps_relaxed > 0.0)
      relaxed[i] = best_at_center(d1, d2, centers[i], eps_relaxed, eps_dist + r0, extra_taus);
  }

  HHInterval out;
  out.grid_r0 = r0;
  out.exact = exact;
  std::int64_t best_i = 0;
  for (std::int64_t i = 1; i < nc; ++i)
    if (tight[i].margin > tight[best_i].margin) best_i = i;
  out.lower = std::max(0.0, tight[best_i].margin);
  out.witness_center = centers[best_i];
  out.witness_tau = tight[best_i].tau;
  out.witness_direction = tight[best_i].direction;

  if (exact) {
    out.upper = out.lower;
  } else if (eps_relaxed > 0.0) {
    double up = 0.0;
    for (std::int64_t i = 0; i < nc; ++i) up = std::max(up, relaxed[i].margin);
    out.upper = std::min(1.0, std::max(out.lower, up));
  } else {
    out.upper = 1.0;  // grid too coarse relative to eps_dist to certify
  }
  return out;
}

bool check_wasserstein_implies_hh(const DiracComb& d1, const DiracComb& d2, double eps_dist) {
  double w = wasserstein(d1, d2);
  HHParams p;
  p.eps_dist = eps_dist;
  HHInterval hh = hh_distance(d1, d2, p);
  double bound = w / eps_dist + 1e-9;
  if (!hh.exact) {
    double denom = eps_dist - 2.0 * hh.grid_r0;
    if (denom <= 0.0) return false;
    bound = w / denom + 1e-9;  // w/eps_dist plus the grid slack
  }
  return hh.upper <= bound;
}

}  // namespace sr
