#include "sr/lp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sr::lp {

int LinearProgram::add_var(double lo, double hi) {
  lower.push_back(lo);
  upper.push_back(hi);
  for (auto& con : constraints) con.coeffs.resize(num_vars + 1, 0.0);
  if (!objective.empty()) objective.resize(num_vars + 1, 0.0);
  return num_vars++;
}

void LinearProgram::add_constraint(std::vector<double> coeffs, Relation rel, double rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("add_constraint: coefficient length mismatch");
  if (!std::isfinite(rhs)) throw std::invalid_argument("add_constraint: non-finite rhs");
  constraints.push_back({std::move(coeffs), rel, rhs});
}

void LinearProgram::set_objective(Sense s, std::vector<double> coeffs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("set_objective: coefficient length mismatch");
  sense = s;
  objective = std::move(coeffs);
}

namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-10;

// Column bookkeeping for the standard-form substitution y >= 0.
struct VarMap {
  int col_pos = -1;   // column of y+ (or the single shifted/flipped column)
  int col_neg = -1;   // column of y- for free variables
  double shift = 0.0; // x = shift + sign * y(+ ...)
  double sign = 1.0;
};

struct Tableau {
  int m = 0;      // rows
  int n = 0;      // structural + slack columns
  int total = 0;  // + artificials
  std::vector<std::vector<double>> a;  // m rows x (total+1), last col = rhs
  std::vector<double> phase1;          // reduced-cost row, phase 1 (total+1)
  std::vector<double> phase2;          // reduced-cost row, phase 2 (total+1)
  std::vector<int> basis;              // per row
};

void pivot(Tableau& t, int row, int col) {
  double p = t.a[row][col];
  for (int k = 0; k <= t.total; ++k) t.a[row][k] /= p;
  t.a[row][col] = 1.0;  // kill roundoff on the pivot itself
  for (int r = 0; r < t.m; ++r) {
    if (r == row) continue;
    double f = t.a[r][col];
    if (f == 0.0) continue;
    for (int k = 0; k <= t.total; ++k) t.a[r][k] -= f * t.a[row][k];
    t.a[r][col] = 0.0;
  }
  for (auto* cost : {&t.phase1, &t.phase2}) {
    double f = (*cost)[col];
    if (f == 0.0) continue;
    for (int k = 0; k <= t.total; ++k) (*cost)[k] -= f * t.a[row][k];
    (*cost)[col] = 0.0;
  }
  t.basis[row] = col;
}

// Runs to optimality; throws on iteration exhaustion or (when the objective
// is not known to be bounded) on an unbounded ray.
void simplex_iterate(Tableau& t, std::vector<double>& cost, int allowed_cols, long long& iters,
                     long long iter_cap, bool& bland, bool bounded_objective) {
  long long stall = 0;
  double last_val = cost[t.total];
  while (true) {
    int enter = -1;
    if (bland) {
      for (int j = 0; j < allowed_cols; ++j)
        if (cost[j] < -kCostEps) {
          enter = j;
          break;
        }
    } else {
      double best = -kCostEps;
      for (int j = 0; j < allowed_cols; ++j)
        if (cost[j] < best) {
          best = cost[j];
          enter = j;
        }
    }
    if (enter < 0) return;  // optimal

    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < t.m; ++r) {
      double coef = t.a[r][enter];
      if (coef > kPivotEps) {
        double ratio = t.a[r][t.total] / coef;
        if (leave < 0 || ratio < best_ratio - 1e-15 ||
            (std::fabs(ratio - best_ratio) <= 1e-15 && t.basis[r] < t.basis[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0) {
      // A bounded objective cannot ride a ray: the negative reduced cost on a
      // nonpositive column is roundoff dust. Bar the column and move on.
      if (bounded_objective) {
        cost[enter] = 0.0;
        continue;
      }
      throw std::runtime_error("lp: unbounded objective");
    }

    pivot(t, leave, enter);
    if (++iters > iter_cap) throw std::runtime_error("lp: iteration limit exceeded");
    double val = cost[t.total];
    if (std::fabs(val - last_val) < 1e-13) {
      if (++stall > 500 && !bland) bland = true;  // anti-cycling fallback
    } else {
      stall = 0;
      last_val = val;
    }
  }
}

}  // namespace

Solution solve(const LinearProgram& prob, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("lp::solve: tol must be positive");
  const int nx = prob.num_vars;
  if (static_cast<int>(prob.lower.size()) != nx || static_cast<int>(prob.upper.size()) != nx)
    throw std::invalid_argument("lp::solve: bounds arrays malformed");

  // Substitute every variable by nonnegative columns.
  std::vector<VarMap> vmap(nx);
  int ncols = 0;
  int extra_upper_rows = 0;
  for (int i = 0; i < nx; ++i) {
    double lo = prob.lower[i], hi = prob.upper[i];
    if (lo > hi) return {Status::Infeasible, {}, 0.0};
    if (std::isfinite(lo)) {
      vmap[i] = {ncols++, -1, lo, 1.0};
      if (std::isfinite(hi)) ++extra_upper_rows;
    } else if (std::isfinite(hi)) {
      vmap[i] = {ncols++, -1, hi, -1.0};
    } else {
      vmap[i].col_pos = ncols++;
      vmap[i].col_neg = ncols++;
      vmap[i].shift = 0.0;
      vmap[i].sign = 1.0;
    }
  }

  const int base_rows = static_cast<int>(prob.constraints.size());
  const int m = base_rows + extra_upper_rows;
  int nslack = 0;
  for (const auto& con : prob.constraints)
    if (con.rel != Relation::Equal) ++nslack;
  nslack += extra_upper_rows;

  Tableau t;
  t.m = m;
  t.n = ncols + nslack;
  t.total = t.n + m;  // one artificial per row
  t.a.assign(m, std::vector<double>(t.total + 1, 0.0));
  t.basis.assign(m, -1);

  auto fill_row = [&](std::vector<double>& row, const std::vector<double>& coeffs, double rhs) {
    for (int i = 0; i < nx; ++i) {
      double c = coeffs[i];
      if (c == 0.0) continue;
      const VarMap& v = vmap[i];
      if (v.col_neg >= 0) {
        row[v.col_pos] += c;
        row[v.col_neg] -= c;
      } else {
        row[v.col_pos] += c * v.sign;
        rhs -= c * v.shift;
      }
    }
    row[t.total] = rhs;
  };

  int slack_col = ncols;
  for (int r = 0; r < base_rows; ++r) {
    const auto& con = prob.constraints[r];
    fill_row(t.a[r], con.coeffs, con.rhs);
    if (con.rel == Relation::LessEq) t.a[r][slack_col++] = 1.0;
    if (con.rel == Relation::GreaterEq) t.a[r][slack_col++] = -1.0;
  }
  int r = base_rows;
  for (int i = 0; i < nx; ++i) {
    if (std::isfinite(prob.lower[i]) && std::isfinite(prob.upper[i])) {
      t.a[r][vmap[i].col_pos] = 1.0;
      t.a[r][slack_col++] = 1.0;
      t.a[r][t.total] = prob.upper[i] - prob.lower[i];
      ++r;
    }
  }

  // Nonnegative rhs, then one artificial per row as the starting basis.
  for (int row = 0; row < m; ++row) {
    if (t.a[row][t.total] < 0.0)
      for (int k = 0; k <= t.total; ++k) t.a[row][k] = -t.a[row][k];
    t.a[row][t.n + row] = 1.0;
    t.basis[row] = t.n + row;
  }

  // Phase-2 cost row in minimization form, expressed over the substituted
  // variables (the value cell picks up the bound-shift constant).
  t.phase2.assign(t.total + 1, 0.0);
  if (prob.sense.has_value()) {
    double obj_sign = (*prob.sense == Sense::Maximize) ? -1.0 : 1.0;
    std::vector<double> min_obj(nx);
    for (int i = 0; i < nx; ++i) min_obj[i] = obj_sign * prob.objective[i];
    fill_row(t.phase2, min_obj, 0.0);
  }

  // Phase-1 cost row: minimize sum of artificials -> reduced costs are
  // -(column sums) over all rows.
  t.phase1.assign(t.total + 1, 0.0);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= t.total; ++k)
      if (k < t.n || k == t.total) t.phase1[k] -= t.a[row][k];

  long long iters = 0;
  const long long iter_cap = 20000 + 50LL * (t.m + t.total);
  bool bland = false;
  simplex_iterate(t, t.phase1, t.n, iters, iter_cap, bland, true);
  double infeas = -t.phase1[t.total];
  if (infeas > tol) return {Status::Infeasible, {}, 0.0};

  // Drive leftover artificials out of the basis (degenerate at zero), drop
  // redundant rows.
  for (int row = 0; row < t.m; ++row) {
    if (t.basis[row] < t.n) continue;
    int col = -1;
    for (int j = 0; j < t.n; ++j)
      if (std::fabs(t.a[row][j]) > 1e-9) {
        col = j;
        break;
      }
    if (col >= 0) pivot(t, row, col);
  }

  bool feasibility_only = !prob.sense.has_value();
  if (!feasibility_only) {
    // Freeze artificial columns so they cannot re-enter.
    bland = false;
    simplex_iterate(t, t.phase2, t.n, iters, iter_cap, bland, false);
  }

  // Recover x.
  std::vector<double> y(t.n, 0.0);
  for (int row = 0; row < t.m; ++row)
    if (t.basis[row] < t.n) y[t.basis[row]] = t.a[row][t.total];
  std::vector<double> x(nx);
  for (int i = 0; i < nx; ++i) {
    const VarMap& v = vmap[i];
    if (v.col_neg >= 0)
      x[i] = y[v.col_pos] - y[v.col_neg];
    else
      x[i] = v.shift + v.sign * y[v.col_pos];
  }

  Solution sol;
  sol.status = feasibility_only ? Status::Feasible : Status::Optimal;
  sol.x = std::move(x);
  if (!feasibility_only) {
    double val = 0.0;
    for (int i = 0; i < nx; ++i) val += prob.objective[i] * sol.x[i];
    sol.objective_value = val;
  }
  return sol;
}

std::string dump(const LinearProgram& prob) {
  std::ostringstream os;
  os.precision(17);
  if (prob.sense.has_value()) {
    os << (*prob.sense == Sense::Maximize ? "max" : "min");
    for (double c : prob.objective) os << ' ' << c;
    os << '\n';
  } else {
    os << "feasibility\n";
  }
  for (const auto& con : prob.constraints) {
    for (double c : con.coeffs) os << c << ' ';
    os << (con.rel == Relation::LessEq ? "<=" : con.rel == Relation::Equal ? "==" : ">=");
    os << ' ' << con.rhs << '\n';
  }
  os << "bounds\n";
  for (int i = 0; i < prob.num_vars; ++i) os << prob.lower[i] << ' ' << prob.upper[i] << '\n';
  return os.str();
}

}  // namespace sr::lp
