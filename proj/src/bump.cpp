#include "sr/bump.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sr/fourier.hpp"

namespace sr {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kGridSlack = 1e-9;
}  // namespace

double amplifier(int k, double t) {
  if (k < 1) throw std::invalid_argument("amplifier: k must be positive");
  if (t < -1e-12 || t > 1.0 + 1e-12) throw std::invalid_argument("amplifier: t outside [0,1]");
  t = std::clamp(t, 0.0, 1.0);
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;

  const int j0 = (k + 1) / 2;  // ceil(k/2)
  // Start at the largest pmf term inside the tail and sweep outward with
  // term ratios; every term is positive, so no cancellation.
  int jm = std::clamp(static_cast<int>(k * t), j0, k);
  double ljm = std::lgamma(k + 1.0) - std::lgamma(jm + 1.0) - std::lgamma(k - jm + 1.0) +
               jm * std::log(t) + (k - jm) * std::log1p(-t);
  double tm = std::exp(ljm);
  double sum = tm;
  double term = tm;
  for (int j = jm; j < k; ++j) {
    term *= (static_cast<double>(k - j) / (j + 1.0)) * (t / (1.0 - t));
    sum += term;
  }
  term = tm;
  for (int j = jm; j > j0; --j) {
    term *= (static_cast<double>(j) / (k - j + 1.0)) * ((1.0 - t) / t);
    sum += term;
  }
  return std::min(sum, 1.0);
}

Poly amplifier_poly(int k) {
  if (k < 1 || k > 40) throw std::invalid_argument("amplifier_poly: k out of exact range");
  Poly sum({0.0});
  const int j0 = (k + 1) / 2;
  for (int j = j0; j <= k; ++j) {
    double c = 1.0;
    int kk = std::min(j, k - j);
    for (int i = 1; i <= kk; ++i) c = c * (k - kk + i) / i;
    Poly term({c});
    for (int i = 0; i < j; ++i) term = Poly::mul(term, Poly({0.0, 1.0}));
    for (int i = 0; i < k - j; ++i) term = Poly::mul(term, Poly({1.0, -1.0}));
    sum = Poly::add(sum, term);
  }
  return sum;
}

int choose_k(double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("choose_k: tau outside (0,1)");
  for (int k = 1; k <= 20000; ++k)
    if (amplifier(k, 0.6) >= 1.0 - tau && amplifier(k, 0.4) <= tau) return k;
  throw std::runtime_error("choose_k: no k found below cap");
}

namespace {

double clipped_ramp(double x, double ell) {
  if (x <= ell) return 1.0;
  if (x >= ell + 1.0) return 0.0;
  return 1.0 - (x - ell);
}

bool step_properties_hold(const ChebPoly& r, double m, double ell, int grid_pts) {
  for (int g = 0; g < grid_pts; ++g) {
    double x = m * g / (grid_pts - 1);
    double v = r.eval(x);
    if (v < -kGridSlack || v > 1.0 + kGridSlack) return false;
    if (x <= ell && v < 0.6 - kGridSlack) return false;
    if (x >= ell + 1.0 && v > 0.4 + kGridSlack) return false;
  }
  return true;
}

SoftStep rescale_fit(const RemezResult& fit) {
  SoftStep s;
  s.r = fit.p;
  for (double& c : s.r.c) c *= 0.6;
  if (s.r.c.empty())
    s.r.c.push_back(0.2);
  else
    s.r.c[0] += 0.2;  // r = (3/5) p + 1/5
  s.achieved_error = fit.max_err;
  s.degree = s.r.degree();
  return s;
}

}  // namespace

SoftStep soft_step(double m, double ell, int degree_budget, int degree_cap, int grid_pts) {
  if (!(m > 0.0) || ell < 0.0 || ell >= m / 2.0)
    throw std::invalid_argument("soft_step: need 0 <= ell < m/2");
  if (degree_budget < 1) throw std::invalid_argument("soft_step: degree budget must be >= 1");
  auto g = [&](double x) { return clipped_ramp(x, ell); };

  // Fit target sits below 1/3 so the sup between fitting-grid nodes stays
  // under the bar as well.
  const double target = 0.32;
  int degree = degree_budget;
  RemezResult fit = remez_fit(g, 0.0, m, degree, grid_pts);
  double best_err = fit.max_err;
  while (fit.max_err > target) {
    if (degree * 2 > degree_cap)
      throw std::runtime_error("soft_step: degree cap exceeded, best error " +
                               std::to_string(best_err));
    degree *= 2;
    fit = remez_fit(g, 0.0, m, degree, grid_pts);
    best_err = std::min(best_err, fit.max_err);
  }
  SoftStep s = rescale_fit(fit);
  if (!step_properties_hold(s.r, m, ell, grid_pts))
    throw std::runtime_error("soft_step: rescaled fit failed grid verification");
  return s;
}

BallScale bump_scale(TauRegime regime, double eps_dist) {
  BallScale s;
  double e2 = eps_dist * eps_dist;
  if (regime == TauRegime::Near) {
    s.A = kPi * kPi * e2;
    s.b = (3.2 * 3.2 - kPi * kPi) * e2;
  } else {
    s.A = (0.6 * kPi) * (0.6 * kPi) * e2;
    s.b = (4.0 - (0.6 * kPi) * (0.6 * kPi)) * e2;
  }
  return s;
}

BumpPolynomial::BumpPolynomial(SoftStep base, int k, int d, double eps, double eps_dist,
                               BallScale scale)
    : base_(std::move(base)), k_(k), d_(d), eps_(eps), eps_dist_(eps_dist), scale_(scale) {}

double BumpPolynomial::eval_q(double x) const {
  double y = x * static_cast<double>(d_) / scale_.b;
  double r = std::clamp(base_.r.eval(y), 0.0, 1.0);
  return amplifier(k_, r);
}

double BumpPolynomial::eval(const TorusPoint& x) const {
  if (x.dim() != d_) throw std::invalid_argument("BumpPolynomial::eval: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < d_; ++i) {
    double sn = std::sin(kPi * x[i]);
    s += sn * sn;
  }
  return eval_q(s / static_cast<double>(d_));
}

BumpPolynomial build_q(double eps, double eps_dist, int d, TauRegime regime) {
  if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("build_q: eps outside (0, 1/2]");
  if (!(eps_dist > 0.0 && eps_dist < 1.0))
    throw std::invalid_argument("build_q: eps_dist outside (0,1)");
  BallScale scale = bump_scale(regime, eps_dist);
  if (static_cast<double>(d) <= 2.0 * scale.A)
    throw std::invalid_argument("build_q: d too small for this eps_dist regime (need d > 2A)");

  // Domain scaled so the transition [A/d, (A+b)/d] of q maps onto the unit
  // ramp [ell, ell+1] of the base: m = d/b, ell = A/b.
  double m = static_cast<double>(d) / scale.b;
  double ell = scale.A / scale.b;
  int k = choose_k(eps / 8.0);
  // Degree schedule follows the sqrt(m (ell+1)) law of the base approximation
  // problem; the fit verifies the error bar at the scheduled degree and
  // escalates only if the bar fails.
  int budget = std::max(4, static_cast<int>(std::ceil(0.64 * std::sqrt(m * (ell + 1.0)))));
  SoftStep base = soft_step(m, ell, budget);
  BumpPolynomial bump(std::move(base), k, d, eps, eps_dist, scale);

  // Grid verification of the three range properties of q on [0,1].
  const int grid = 4096;
  double lo_edge = scale.A / d, hi_edge = (scale.A + scale.b) / d;
  for (int g = -2; g < grid; ++g) {
    double x = g == -2 ? lo_edge : (g == -1 ? hi_edge : static_cast<double>(g) / (grid - 1));
    double v = bump.eval_q(x);
    bool ok = v >= -kGridSlack && v <= 1.0 + kGridSlack;
    if (x <= lo_edge) ok = ok && v >= 1.0 - eps / 2.0 - kGridSlack;
    if (x >= hi_edge) ok = ok && v <= eps / 8.0 + kGridSlack;
    if (!ok)
      throw std::runtime_error("build_q: grid verification failed at x = " + std::to_string(x));
  }
  return bump;
}

std::vector<double> eval_bump_batch(const BumpPolynomial& bump, std::span<const TorusPoint> pts) {
  std::vector<double> out(pts.size());
  const std::int64_t n = static_cast<std::int64_t>(pts.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = bump.eval(pts[i]);
  return out;
}

std::vector<double> eval_bump_batch_serial(const BumpPolynomial& bump,
                                           std::span<const TorusPoint> pts) {
  std::vector<double> out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out[i] = bump.eval(pts[i]);
  return out;
}

double expectation_under_comb(const BumpPolynomial& bump, const DiracComb& d) {
  if (!d.is_distribution(1e-9))
    throw std::invalid_argument("expectation_under_comb: comb must be a distribution");
  double s = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) s += d.weight(j) * bump.eval(d.point(j));
  return s;
}

HHCertificateReport hh_certificate_gap(const BumpPolynomial& bump, const DiracComb& d1,
                                       const DiracComb& d2, double kappa, long long degree_T) {
  if (degree_T < bump.trig_degree())
    throw std::invalid_argument("hh_certificate_gap: degree_T below the bump's trig degree");
  HHCertificateReport rep;
  rep.e1 = expectation_under_comb(bump, d1);
  rep.e2 = expectation_under_comb(bump, d2);
  rep.gap = rep.e1 - rep.e2;
  // l1-ball cardinality; can be astronomically large, so computed in doubles.
  IndexSet set = IndexSet::l1(bump.d(), static_cast<int>(std::min<long long>(degree_T, 1 << 30)));
  rep.index_count = set.count();
  rep.threshold = bump.eps() / 4.0 - kappa * rep.index_count;
  rep.witnessed = rep.gap > 0.0 && rep.gap >= rep.threshold;
  return rep;
}

}  // namespace sr
