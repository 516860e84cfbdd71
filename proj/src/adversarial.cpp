#include "sr/adversarial.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sr/jackson.hpp"
#include "sr/lp.hpp"
#include "sr/rng.hpp"

namespace sr {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

GridPair grid_pair(int d, double eps) {
  if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("grid_pair: eps outside (0, 1/2]");
  int t_prime = static_cast<int>(std::floor(std::sqrt(static_cast<double>(d)) / (2.0 * eps)));
  if (t_prime < 1) throw std::invalid_argument("grid_pair: eps too large for this dimension");
  GridPair out{grid_comb(d, t_prime, 0.0), grid_comb(d, t_prime, 1.0 / (2.0 * t_prime)), t_prime};
  return out;
}

namespace {

std::complex<double> exp_sum(const std::vector<TorusPoint>& pts, const FrequencyIndex& l) {
  std::complex<double> s = 0.0;
  for (const auto& p : pts) {
    double phase = 0.0;
    for (int i = 0; i < p.dim(); ++i) phase += l.entries[i] * p[i];
    s += std::polar(1.0, kTwoPi * phase);
  }
  return s;
}

}  // namespace

SeparatedPair random_separated_pair(int d, double eps, std::uint64_t seed, int max_retries,
                                    const SeparatedPairParams& ov) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("random_separated_pair: bad eps");
  SeparatedPair out;
  out.eps = eps;
  out.seed = seed;
  out.kappa = ov.kappa ? *ov.kappa : std::pow(eps, 0.249 * d);
  out.M = ov.M ? *ov.M
               : static_cast<long long>(std::ceil(0.5 * std::pow(8.0 * eps, -0.5 * d)));
  out.n = ov.n ? *ov.n
               : static_cast<int>(std::ceil(4.0 * std::sqrt(static_cast<double>(d)) / eps));
  if (out.M < 1 || out.n < 1) throw std::invalid_argument("random_separated_pair: bad M or n");

  std::vector<FrequencyIndex> idx = IndexSet::linf(d, 2 * out.n - 1).enumerate(2e6);
  const double separation = 4.0 * eps;
  const double half_kappa_m = 0.5 * out.kappa * static_cast<double>(out.M);

  SplitMix64 rng(seed);
  int fail_sep = 0, fail_sum = 0;
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    std::vector<TorusPoint> xs, ys;
    for (long long j = 0; j < 2 * out.M; ++j) {
      std::vector<double> c(d);
      for (double& v : c) v = rng.next_double();
      (j < out.M ? xs : ys).emplace_back(std::move(c));
    }

    bool ok = true;
    for (const auto& x : xs) {
      for (const auto& y : ys)
        if (toroidal_distance(x, y) <= separation) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) {
      ++fail_sep;
      continue;
    }

    for (const auto& l : idx) {
      if (l.is_zero()) continue;
      if (std::abs(exp_sum(xs, l)) >= half_kappa_m || std::abs(exp_sum(ys, l)) >= half_kappa_m) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      ++fail_sum;
      continue;
    }

    out.xs = std::move(xs);
    out.ys = std::move(ys);
    out.attempts = attempt;
    return out;
  }
  throw std::runtime_error(
      "random_separated_pair: retries exhausted (separation failed " + std::to_string(fail_sep) +
      "x, exponential-sum bound failed " + std::to_string(fail_sum) + "x of " +
      std::to_string(max_retries) + " attempts)");
}

std::complex<double> lb_infinite_fourier_diff(const SeparatedPair& pair, const FrequencyIndex& l) {
  if (pair.xs.empty()) throw std::invalid_argument("lb_infinite_fourier_diff: empty pair");
  int d = pair.xs[0].dim();
  JacksonKernel kernel(pair.n, d);
  double jhat = kernel.fourier_nd(l);
  if (jhat == 0.0) return 0.0;
  std::complex<double> diff =
      (exp_sum(pair.xs, l) - exp_sum(pair.ys, l)) / static_cast<double>(pair.M);
  return jhat * diff;
}

std::pair<DiracComb, DiracComb> one_dim_pair(double eps) {
  if (!(eps > 0.0 && eps < 0.25)) throw std::invalid_argument("one_dim_pair: eps outside (0, 1/4)");
  DiracComb d1({TorusPoint({0.0})}, {1.0});
  DiracComb d2({TorusPoint({0.0}), TorusPoint({0.5})}, {1.0 - 2.0 * eps, 2.0 * eps});
  return {d1, d2};
}

namespace {

// Convolution of B's coefficients with (1-x)^k.
std::vector<double> expand_root_factor(const std::vector<double>& b, int k, int d) {
  std::vector<double> factor(k + 1);
  double c = 1.0;
  for (int t = 0; t <= k; ++t) {
    factor[t] = (t % 2 == 0 ? c : -c);
    c = c * (k - t) / (t + 1.0);
  }
  std::vector<double> a(d + 1, 0.0);
  for (int t = 0; t <= k; ++t)
    for (std::size_t i = 0; i < b.size(); ++i) a[t + i] += factor[t] * b[i];
  return a;
}

}  // namespace

double RepeatedRootPoly::eval(double x) const {
  double bx = 0.0;
  for (std::size_t i = b_coeffs.size(); i-- > 0;) bx = bx * x + b_coeffs[i];
  return std::pow(1.0 - x, k) * bx;
}

RepeatedRootPoly repeated_root_poly(int d, int k) {
  if (k < 1 || k > d) throw std::invalid_argument("repeated_root_poly: need 1 <= k <= d");
  const int nb = d - k + 1;  // cofactor coefficients
  const int na = d + 1;

  // Variables: b_0..b_{nb-1} free, then s_0..s_d >= 0 with s_j >= |a_j(b)|.
  lp::LinearProgram prob;
  for (int i = 0; i < nb; ++i) prob.add_var(-lp::kInf, lp::kInf);
  for (int j = 0; j < na; ++j) prob.add_var(0.0, lp::kInf);

  std::vector<double> factor(k + 1);
  {
    double c = 1.0;
    for (int t = 0; t <= k; ++t) {
      factor[t] = (t % 2 == 0 ? c : -c);
      c = c * (k - t) / (t + 1.0);
    }
  }
  for (int j = 0; j < na; ++j) {
    std::vector<double> row(prob.num_vars, 0.0);
    for (int t = std::max(0, j - nb + 1); t <= std::min(k, j); ++t) row[j - t] = factor[t];
    row[nb + j] = -1.0;
    prob.add_constraint(row, lp::Relation::LessEq, 0.0);  // a_j - s_j <= 0
    for (int i = 0; i < nb; ++i) row[i] = -row[i];
    prob.add_constraint(std::move(row), lp::Relation::LessEq, 0.0);  // -a_j - s_j <= 0
  }
  {
    std::vector<double> row(prob.num_vars, 0.0);
    for (int j = 0; j < na; ++j) row[nb + j] = 1.0;
    prob.add_constraint(std::move(row), lp::Relation::LessEq, 2.0);
  }
  std::vector<double> obj(prob.num_vars, 0.0);
  obj[0] = 1.0;  // a_0 = b_0
  prob.set_objective(lp::Sense::Maximize, obj);

  lp::Solution sol = lp::solve(prob, 1e-11);
  if (sol.status != lp::Status::Optimal)
    throw std::runtime_error("repeated_root_poly: LP failed");

  RepeatedRootPoly out;
  out.k = k;
  out.b_coeffs.assign(sol.x.begin(), sol.x.begin() + nb);
  out.a = expand_root_factor(out.b_coeffs, k, d);

  // Scale so the coefficient l1 norm is exactly 2.
  double norm = 0.0;
  for (double v : out.a) norm += std::fabs(v);
  if (norm <= 0.0) throw std::runtime_error("repeated_root_poly: degenerate LP solution");
  double s = 2.0 / norm;
  for (double& v : out.b_coeffs) v *= s;
  for (double& v : out.a) v *= s;
  out.a0_ratio = std::fabs(out.a[0]) / (2.0 - std::fabs(out.a[0]));
  return out;
}

SupnormReport supnorm_near_one(const RepeatedRootPoly& p, double interval_lo) {
  if (!(interval_lo > 0.0 && interval_lo < 1.0))
    throw std::invalid_argument("supnorm_near_one: interval_lo outside (0,1)");
  const int grid = 1 << 14;
  SupnormReport rep;
  for (int g = 0; g <= grid; ++g) {
    double x = interval_lo + (1.0 - interval_lo) * g / grid;
    rep.measured = std::max(rep.measured, std::fabs(p.eval(x)) / 2.0);
  }
  int d = static_cast<int>(p.a.size()) - 1;
  rep.bound = (d + 1) * std::pow(std::numbers::e / 9.0, p.k);
  rep.within = rep.measured <= rep.bound;
  return rep;
}

CubePair cube_mixture_pair(int d, double eps, bool desk_scale) {
  if (!desk_scale) {
    if (!(eps > std::pow(2.0, -d / 3.0) && eps < 1.0 / 170.0))
      throw std::invalid_argument("cube_mixture_pair: eps outside (2^{-d/3}, 1/170)");
  } else if (!(eps > 0.0 && eps < 0.5)) {
    throw std::invalid_argument("cube_mixture_pair: bad eps");
  }
  int k = static_cast<int>(
      std::ceil((2.0 / 7.0) * std::sqrt(d * std::log(1.0 / (10.0 * eps)))));
  k = std::clamp(k, 1, d);
  RepeatedRootPoly poly = repeated_root_poly(d, k);
  if (std::fabs(poly.a[0]) < 3.0 * eps)
    throw std::runtime_error("cube_mixture_pair: achieved |a_0| = " +
                             std::to_string(std::fabs(poly.a[0])) + " below 3 eps");

  // gamma uses the natural log: the mass-gap bookkeeping rests on
  // e^{-j gamma d / 4} = eps^{2j}.
  double gamma = 8.0 * std::log(1.0 / eps) / d;
  CubePair pair;
  pair.eps = eps;
  pair.k = k;
  pair.mu.d = pair.nu.d = d;
  pair.mu.gamma = pair.nu.gamma = gamma;
  pair.mu.weights.assign(d + 1, 0.0);
  pair.nu.weights.assign(d + 1, 0.0);
  pair.mu.rates.resize(d + 1);
  pair.nu.rates.resize(d + 1);
  double pos = 0.0, neg = 0.0;
  for (int j = 0; j <= d; ++j) {
    pair.mu.rates[j] = pair.nu.rates[j] = j * gamma;
    if (poly.a[j] >= 0.0)
      pos += (pair.mu.weights[j] = poly.a[j]);
    else
      neg += (pair.nu.weights[j] = -poly.a[j]);
  }
  // Sign split gives two unit masses up to solver tolerance; normalize exactly.
  if (pos <= 0.0 || neg <= 0.0) throw std::runtime_error("cube_mixture_pair: degenerate split");
  for (int j = 0; j <= d; ++j) {
    pair.mu.weights[j] /= pos;
    pair.nu.weights[j] /= neg;
  }
  pair.poly = std::move(poly);
  return pair;
}

double level_coeff(const CubeMixture& m, int s) {
  if (s < 0 || s > m.d) throw std::invalid_argument("level_coeff: level out of range");
  double acc = 0.0;
  for (std::size_t j = 0; j < m.weights.size(); ++j)
    acc += m.weights[j] * std::exp(-m.rates[j] * s);
  return std::pow(2.0, -m.d) * acc;
}

double mass_at_ones(const CubeMixture& m) {
  double acc = 0.0;
  for (std::size_t j = 0; j < m.weights.size(); ++j)
    acc += m.weights[j] * std::pow(1.0 + std::exp(-m.rates[j]), m.d);
  return std::pow(2.0, -m.d) * acc;
}

std::vector<double> mix_tabulate(const CubeMixture& m) {
  if (m.d > 20) throw std::invalid_argument("mix_tabulate: d above tabulation cap");
  const std::size_t size = 1ULL << m.d;
  std::vector<double> table(size, 0.0);
  double scale = std::pow(2.0, -m.d);
  for (std::size_t j = 0; j < m.weights.size(); ++j) {
    if (m.weights[j] == 0.0) continue;
    double e = std::exp(-m.rates[j]);
    // Probability depends only on the number of -1 coordinates.
    std::vector<double> by_minus(m.d + 1);
    for (int minus = 0; minus <= m.d; ++minus)
      by_minus[minus] = scale * std::pow(1.0 + e, m.d - minus) * std::pow(1.0 - e, minus);
    for (std::size_t z = 0; z < size; ++z)
      table[z] += m.weights[j] * by_minus[std::popcount(z)];
  }
  return table;
}

std::vector<double> walsh_coeffs(std::vector<double> table) {
  const std::size_t n = table.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("walsh_coeffs: table length must be a power of two");
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        double u = table[j], v = table[j + len];
        table[j] = u + v;
        table[j + len] = u - v;
      }
    }
  }
  double scale = 1.0 / static_cast<double>(n);
  for (double& v : table) v *= scale;
  return table;
}

std::pair<DiracComb, DiracComb> embed_on_torus(const CubePair& pair) {
  const int d = pair.mu.d;
  if (d > 20) throw std::invalid_argument("embed_on_torus: d above tabulation cap");
  std::vector<double> t1 = mix_tabulate(pair.mu);
  std::vector<double> t2 = mix_tabulate(pair.nu);
  const std::size_t size = 1ULL << d;
  std::vector<TorusPoint> pts;
  pts.reserve(size);
  for (std::size_t z = 0; z < size; ++z) {
    std::vector<double> coords(d);
    for (int i = 0; i < d; ++i) coords[i] = (z >> i) & 1 ? 0.5 : 0.0;
    pts.emplace_back(std::move(coords));
  }
  return {DiracComb(pts, t1), DiracComb(pts, t2)};
}

}  // namespace sr
