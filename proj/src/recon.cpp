#include "sr/recon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sr/jackson.hpp"
#include "sr/lp.hpp"

namespace sr {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMaxCells = 1e5;  // grid cap for the LP stage
constexpr double kMaxTableauEntries = 5e7;
}  // namespace

ReconParams ReconParams::defaults(int d, double eps, const Overrides& ov) {
  if (d < 1) throw std::invalid_argument("ReconParams: d must be >= 1");
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("ReconParams: eps out of range");
  ReconParams p;
  p.d = d;
  p.eps = eps;
  double sqd = std::sqrt(static_cast<double>(d));
  p.T = static_cast<int>(std::ceil(6.0 * sqd / eps));
  // log base 2: the conservative (smaller-kappa) reading of log(1/eps).
  p.kappa = (d == 1) ? 0.001 * eps / std::log2(1.0 / eps)
                     : std::pow(0.01 * eps / sqd, static_cast<double>(d));
  p.n = static_cast<int>(std::ceil(sqd / eps));
  p.cert_n = static_cast<int>(std::ceil(p.T / 2.0));

  if (ov.T) {
    p.T = *ov.T;
    p.cert_n = static_cast<int>(std::ceil(p.T / 2.0));
    p.overridden = true;
  }
  if (ov.kappa) {
    p.kappa = *ov.kappa;
    p.overridden = true;
  }
  if (ov.n) {
    p.n = *ov.n;
    p.overridden = true;
  }

  double n2 = 2.0 * static_cast<double>(p.n);
  double k_exact = std::ceil(100.0 * d * std::pow(n2, d + 1) / p.kappa);
  p.K = k_exact < 4e18 ? static_cast<long long>(k_exact) : (1LL << 62);
  if (ov.K) {
    p.K = *ov.K;
    p.overridden = true;
  }
  p.delta = p.kappa / 8.0;
  return p;
}

std::complex<double> rect_coeff(const std::vector<long long>& j, const FrequencyIndex& l,
                                long long K) {
  if (static_cast<int>(j.size()) != l.dim())
    throw std::invalid_argument("rect_coeff: dimension mismatch");
  std::complex<double> prod = 1.0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] < 0 || j[i] >= K) throw std::invalid_argument("rect_coeff: cell index out of range");
    long long li = l.entries[i];
    if (li == 0) {
      prod *= 1.0 / static_cast<double>(K);
    } else {
      double t1 = kTwoPi * li * static_cast<double>(j[i]) / K;
      double t2 = kTwoPi * li * static_cast<double>(j[i] + 1) / K;
      std::complex<double> num = std::polar(1.0, t2) - std::polar(1.0, t1);
      prod *= num / std::complex<double>(0.0, kTwoPi * li);
    }
  }
  return prod;
}

bool certify_closeness(const FourierTable& t1, const FourierTable& t2, const ReconParams& p) {
  IndexSet want = IndexSet::linf(p.d, p.T);
  if (!(t1.index_set() == want) || !(t2.index_set() == want))
    throw std::invalid_argument("certify_closeness: tables must live on the linf ball of radius T");
  return max_coeff_diff(t1, t2).second <= p.kappa;
}

bool certify_closeness(const FourierTable& t1, const FourierTable& t2, double eps) {
  return certify_closeness(t1, t2, ReconParams::defaults(t1.dim(), eps));
}

namespace {

struct GridCells {
  long long K = 0;
  int d = 1;
  std::size_t count = 0;
  std::vector<std::vector<long long>> cells;  // lexicographic multi-indices
};

GridCells enumerate_cells(const ReconParams& p) {
  GridCells g;
  g.K = p.K;
  g.d = p.d;
  double count = std::pow(static_cast<double>(p.K), p.d);
  if (count > kMaxCells)
    throw std::runtime_error("reconstruct: grid cap exceeded (override K for desk scale)");
  g.count = static_cast<std::size_t>(count + 0.5);
  g.cells.reserve(g.count);
  std::vector<long long> j(p.d, 0);
  for (std::size_t c = 0; c < g.count; ++c) {
    g.cells.push_back(j);
    for (int i = p.d - 1; i >= 0; --i) {
      if (++j[i] < p.K) break;
      j[i] = 0;
    }
  }
  return g;
}

// K^d * rect coefficients, one row per frequency index, split into real and
// imaginary parts. Rows are independent, so the fill runs in parallel.
void coeff_matrix(const GridCells& g, const std::vector<FrequencyIndex>& idx, double scale,
                  std::vector<double>& re, std::vector<double>& im) {
  const std::size_t cells = g.count;
  re.assign(idx.size() * cells, 0.0);
  im.assign(idx.size() * cells, 0.0);
  const std::int64_t rows = static_cast<std::int64_t>(idx.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cells; ++c) {
      std::complex<double> v = scale * rect_coeff(g.cells[c], idx[r], g.K);
      re[static_cast<std::size_t>(r) * cells + c] = v.real();
      im[static_cast<std::size_t>(r) * cells + c] = v.imag();
    }
  }
}

void check_problem_size(const GridCells& g, std::size_t nidx) {
  double rows = 4.0 * static_cast<double>(nidx) + 2.0;
  double cols = 2.0 * static_cast<double>(g.count) + 2.0 * rows;
  if (rows * cols > kMaxTableauEntries)
    throw std::runtime_error("reconstruct: LP too large (override K/T for desk scale)");
}

lp::Solution solve_signed_lp(const GridCells& g, const FourierTable& smoothed,
                             const std::vector<double>& re, const std::vector<double>& im,
                             double bound, double tol) {
  const std::size_t cells = g.count;
  lp::LinearProgram prob;
  for (std::size_t c = 0; c < 2 * cells; ++c) prob.add_var(0.0, lp::kInf);

  auto add_window = [&](const double* row, double center) {
    std::vector<double> coeffs(2 * cells);
    for (std::size_t c = 0; c < cells; ++c) {
      coeffs[c] = row[c];
      coeffs[cells + c] = -row[c];
    }
    prob.add_constraint(coeffs, lp::Relation::LessEq, center + bound);
    for (double& v : coeffs) v = -v;
    prob.add_constraint(std::move(coeffs), lp::Relation::LessEq, -(center - bound));
  };

  for (std::size_t r = 0; r < smoothed.size(); ++r) {
    std::complex<double> target = smoothed.value(r);
    add_window(&re[r * cells], target.real());
    add_window(&im[r * cells], target.imag());
  }
  prob.set_objective(lp::Sense::Minimize, std::vector<double>(2 * cells, 1.0));
  return lp::solve(prob, tol);
}

lp::Solution solve_distribution_lp(const GridCells& g, const FourierTable& smoothed,
                                   const std::vector<double>& re, const std::vector<double>& im,
                                   double bound, double tol) {
  const std::size_t cells = g.count;
  lp::LinearProgram prob;
  for (std::size_t c = 0; c < cells; ++c) prob.add_var(0.0, lp::kInf);

  auto add_window = [&](const double* row, double center) {
    std::vector<double> coeffs(row, row + cells);
    prob.add_constraint(coeffs, lp::Relation::LessEq, center + bound);
    for (double& v : coeffs) v = -v;
    prob.add_constraint(std::move(coeffs), lp::Relation::LessEq, -(center - bound));
  };

  for (std::size_t r = 0; r < smoothed.size(); ++r) {
    std::complex<double> target = smoothed.value(r);
    add_window(&re[r * cells], target.real());
    add_window(&im[r * cells], target.imag());
  }
  prob.add_constraint(std::vector<double>(cells, 1.0), lp::Relation::Equal, 1.0);
  return lp::solve(prob, tol);
}

TorusPoint cell_point(const std::vector<long long>& j, long long K) {
  std::vector<double> coords(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    coords[i] = static_cast<double>(j[i]) / static_cast<double>(K);
  return TorusPoint(std::move(coords));
}

FourierTable smooth_input(const FourierTable& u, const ReconParams& p) {
  if (!(u.index_set() == IndexSet::linf(p.d, p.T)))
    throw std::invalid_argument("reconstruct: input table must live on the linf ball of radius T");
  JacksonKernel kernel(p.n, p.d);
  return smooth_table(u, kernel);
}

}  // namespace

DiracComb reconstruct_signed(const FourierTable& u, const ReconParams& p) {
  FourierTable smoothed = smooth_input(u, p);
  GridCells g = enumerate_cells(p);
  check_problem_size(g, smoothed.size());

  std::vector<double> re, im;
  double scale = std::pow(static_cast<double>(p.K), p.d);
  coeff_matrix(g, smoothed.indices(), scale, re, im);

  lp::Solution sol = solve_signed_lp(g, smoothed, re, im, p.kappa / 4.0, p.delta);
  if (sol.status != lp::Status::Optimal || sol.objective_value > 1.0 + p.delta) {
    // Retry at the solver-residual relaxation before giving up.
    sol = solve_signed_lp(g, smoothed, re, im, p.kappa / 4.0 + p.delta, p.delta);
    if (sol.status != lp::Status::Optimal || sol.objective_value > 1.0 + p.delta)
      throw std::runtime_error(
          "reconstruct_signed: LP infeasible at residual delta; input coefficients are not "
          "within kappa/8 of a valid signal");
  }

  std::vector<double> a(g.count);
  double gamma = 0.0;
  for (std::size_t c = 0; c < g.count; ++c) {
    a[c] = sol.x[c] - sol.x[g.count + c];
    gamma += std::fabs(a[c]);
  }

  std::vector<TorusPoint> pts;
  std::vector<double> ws;
  if (gamma < 1.0) {
    for (std::size_t c = 0; c < g.count; ++c) {
      if (a[c] == 0.0) continue;
      pts.push_back(cell_point(g.cells[c], p.K));
      ws.push_back(a[c]);
    }
    std::vector<double> x0(p.d, 0.0), x1(p.d, 0.0);
    x0[0] = 1.0 / (3.0 * static_cast<double>(p.K));
    x1[0] = 2.0 / (3.0 * static_cast<double>(p.K));
    pts.emplace_back(x0);
    ws.push_back((1.0 - gamma) / 2.0);
    pts.emplace_back(x1);
    ws.push_back(-(1.0 - gamma) / 2.0);
  } else {
    for (std::size_t c = 0; c < g.count; ++c) {
      if (a[c] == 0.0) continue;
      pts.push_back(cell_point(g.cells[c], p.K));
      ws.push_back(a[c] / gamma);
    }
  }
  DiracComb out(std::move(pts), std::move(ws));
  if (!out.is_normalized(1e-9))
    throw std::runtime_error("reconstruct_signed: renormalization failed");
  return out;
}

DiracComb reconstruct_distribution(const FourierTable& u, const ReconParams& p) {
  FourierTable smoothed = smooth_input(u, p);
  GridCells g = enumerate_cells(p);
  check_problem_size(g, smoothed.size());

  std::vector<double> re, im;
  double scale = std::pow(static_cast<double>(p.K), p.d);
  coeff_matrix(g, smoothed.indices(), scale, re, im);

  lp::Solution sol = solve_distribution_lp(g, smoothed, re, im, p.kappa / 4.0, p.delta);
  if (sol.status == lp::Status::Infeasible) {
    sol = solve_distribution_lp(g, smoothed, re, im, p.kappa / 4.0 + p.delta, p.delta);
    if (sol.status == lp::Status::Infeasible)
      throw std::runtime_error(
          "reconstruct_distribution: LP infeasible at residual delta; input coefficients are "
          "not within kappa/8 of a valid distribution");
  }

  // Clip solver residue below zero, then renormalize to total mass one.
  double total = 0.0;
  for (std::size_t c = 0; c < g.count; ++c) total += std::max(0.0, sol.x[c]);
  if (total <= 0.0) throw std::runtime_error("reconstruct_distribution: empty solution");
  std::vector<TorusPoint> pts;
  std::vector<double> ws;
  for (std::size_t c = 0; c < g.count; ++c) {
    double w = std::max(0.0, sol.x[c]);
    if (w == 0.0) continue;
    pts.push_back(cell_point(g.cells[c], p.K));
    ws.push_back(w / total);
  }
  DiracComb out(std::move(pts), std::move(ws));
  if (!out.is_distribution(1e-9))
    throw std::runtime_error("reconstruct_distribution: output is not a distribution");
  return out;
}

}  // namespace sr
