// Acceptance suite: nine criteria, each printing one [PASS]/[FAIL] line with
// the measured quantities. Run with a criterion number (1-9) or no argument
// for all. Exit code is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "sr/adversarial.hpp"
#include "sr/bump.hpp"
#include "sr/jackson.hpp"
#include "sr/metrics.hpp"
#include "sr/recon.hpp"
#include "sr/rng.hpp"

using namespace sr;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <typename F>
double simpson01(F&& f, int panels) {
  double h = 1.0 / panels;
  double acc = 0.0;
  for (int i = 0; i < panels; ++i) {
    double x0 = i * h, x2 = x0 + h, x1 = x0 + 0.5 * h;
    acc += (h / 6.0) * (f(x0) + 4.0 * f(x1) + f(x2));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// 1. Jackson kernel suite: normalization, closed-form coefficients against
//    quadrature, vanishing threshold, Monte Carlo expected displacement.
bool criterion1(std::string& detail) {
  auto t0 = clock_type::now();
  bool ok = true;
  double worst_norm = 0.0;
  for (int n = 1; n <= 8; ++n) {
    JacksonKernel k(n, 1);
    double dev = std::fabs(simpson01([&](double x) { return k.eval_1d(x); }, 100000) - 1.0);
    worst_norm = std::max(worst_norm, dev);
    ok = ok && dev <= 1e-6;
  }

  double worst_coeff = 0.0;
  for (int n : {2, 3, 5}) {
    JacksonKernel k(n, 1);
    for (int l = 0; l <= 2 * n; ++l) {
      double q = simpson01(
          [&](double x) { return k.eval_1d(x) * std::cos(2.0 * M_PI * l * x); }, 20000);
      double dev = std::fabs(q - k.fourier_1d(l));
      worst_coeff = std::max(worst_coeff, dev);
      ok = ok && dev <= 1e-6;
    }
  }

  for (int n = 1; n <= 8; ++n) {
    JacksonKernel k(n, 1);
    for (long long l = 2 * n - 1; l <= 2 * n + 4; ++l) ok = ok && k.fourier_1d(l) == 0.0;
  }

  char mc[160] = "";
  for (auto [d, n] : {std::pair{1, 4}, std::pair{2, 4}, std::pair{3, 8}}) {
    JacksonKernel k(n, d);
    SplitMix64 rng(1000 + d);
    const int samples = 100000;
    double sum = 0.0, sumsq = 0.0;
    TorusPoint origin = TorusPoint::zero(d);
    for (int i = 0; i < samples; ++i) {
      double dist = toroidal_distance(k.sample(rng), origin);
      sum += dist;
      sumsq += dist * dist;
    }
    double mean = sum / samples;
    double sd = std::sqrt(std::max(0.0, sumsq / samples - mean * mean));
    double bound = std::sqrt(static_cast<double>(d)) / n + 3.0 * sd / std::sqrt(1e5);
    ok = ok && mean <= bound;
    std::snprintf(mc + std::strlen(mc), sizeof(mc) - std::strlen(mc), " E[d(%d,%d)]=%.4f<=%.4f",
                  d, n, mean, bound);
  }

  double elapsed = seconds_since(t0);
  ok = ok && elapsed < 30.0;
  detail = "norm_dev=" + std::to_string(worst_norm) + " coeff_dev=" + std::to_string(worst_coeff) +
           mc + " runtime=" + std::to_string(elapsed) + "s";
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Grid-shift pair at d=2, eps=0.1: coefficients equal up to degree T'-1,
//    exact transport distance at least eps.
bool criterion2(std::string& detail) {
  auto t0 = clock_type::now();
  GridPair gp = grid_pair(2, 0.1);
  bool ok = gp.t_prime == 7;
  FourierTable ta = table_of(gp.d1, IndexSet::linf(2, 6));
  FourierTable tb = table_of(gp.d2, IndexSet::linf(2, 6));
  double max_diff = max_coeff_diff(ta, tb).second;
  ok = ok && max_diff <= 1e-10;
  double w = wasserstein_primal(gp.d1, gp.d2);
  ok = ok && w >= 0.1 - 1e-9;
  double elapsed = seconds_since(t0);
  ok = ok && elapsed < 60.0;
  detail = "T'=" + std::to_string(gp.t_prime) + " max_diff=" + std::to_string(max_diff) +
           " dW=" + std::to_string(w) + " runtime=" + std::to_string(elapsed) + "s";
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Two-spike pair at eps=0.1: exact coefficient parity values, exact
//    Wasserstein, exact heavy-hitter interval.
bool criterion3(std::string& detail) {
  double eps = 0.1;
  auto [d1, d2] = one_dim_pair(eps);
  FourierTable t1 = table_of(d1, IndexSet::linf(1, 7));
  FourierTable t2 = table_of(d2, IndexSet::linf(1, 7));
  bool ok = true;
  for (std::size_t i = 0; i < t1.size(); ++i) {
    double diff = std::abs(t1.value(i) - t2.value(i));
    if (t1.index(i).entries[0] % 2 == 0)
      ok = ok && diff <= 1e-12;
    else
      ok = ok && std::fabs(diff - 0.4) <= 1e-12;
  }
  double w = wasserstein(d1, d2);
  ok = ok && std::fabs(w - eps) <= 1e-6;
  HHParams p;
  p.eps_dist = 0.49;
  HHInterval hh = hh_distance(d1, d2, p);
  ok = ok && std::fabs(hh.lower - 0.2) <= 1e-6 && std::fabs(hh.upper - 0.2) <= 1e-6;
  detail = "dW=" + std::to_string(w) + " hh=[" + std::to_string(hh.lower) + ", " +
           std::to_string(hh.upper) + "]";
  return ok;
}

// ---------------------------------------------------------------------------
// 4. End-to-end reconstruction at desk scale. The certificate-exact K is
//    astronomically large, so overrides T=24, n=4, K=64, kappa=0.01 stand in
//    and the 4 eps bound is verified empirically; the median is pinned as the
//    regression baseline.
bool criterion4(std::string& detail) {
  auto t0 = clock_type::now();
  ReconParams::Overrides ov;
  ov.T = 24;
  ov.n = 4;
  ov.K = 64;
  ov.kappa = 0.01;
  ReconParams params = ReconParams::defaults(1, 0.25, ov);
  SplitMix64 rng(42);
  std::vector<double> dws;
  bool ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<TorusPoint> pts;
    std::vector<double> ws;
    for (int s = 0; s < 3; ++s) {
      pts.push_back(TorusPoint({rng.next_double()}));
      ws.push_back(rng.next_in(0.2, 1.0));
    }
    DiracComb f = normalize_comb(DiracComb(pts, ws));
    FourierTable u = table_of(f, IndexSet::linf(1, params.T));
    FourierTable noisy = perturb(u, params.kappa / 8.0, NoiseMode::WorstCaseSign, rng.next());
    DiracComb g = reconstruct_signed(noisy, params);
    double w = wasserstein(f, g);
    dws.push_back(w);
    ok = ok && w <= 4.0 * params.eps;
  }
  std::sort(dws.begin(), dws.end());
  double median = 0.5 * (dws[4] + dws[5]);
  ok = ok && median <= 0.25;
  double elapsed = seconds_since(t0);
  ok = ok && elapsed < 300.0;
  detail = "max_dW=" + std::to_string(dws.back()) + " median_dW=" + std::to_string(median) +
           " runtime=" + std::to_string(elapsed) + "s";
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Bump suite at (d=16, eps=0.25, eps_dist=0.49, far regime), plus the
//    sqrt(d) degree trend across d in {4,16,64}.
bool criterion5(std::string& detail) {
  auto t0 = clock_type::now();
  const double eps = 0.25, eps_dist = 0.49;
  const int d = 16;
  BumpPolynomial bump = build_q(eps, eps_dist, d, TauRegime::Far);
  bool ok = true;

  // Range property q in [0,1] plus the two plateau properties on a grid.
  double lo_edge = bump.A() / d, hi_edge = (bump.A() + bump.b()) / d;
  for (int g = 0; g <= 4096; ++g) {
    double x = static_cast<double>(g) / 4096.0;
    double v = bump.eval_q(x);
    ok = ok && v >= -1e-9 && v <= 1.0 + 1e-9;
    if (x <= lo_edge) ok = ok && v >= 1.0 - eps / 2.0 - 1e-9;
    if (x >= hi_edge) ok = ok && v <= eps / 8.0 + 1e-9;
  }

  // Multivariate properties on 1e4 points per region, plus boundary points
  // with a single coordinate at the critical radius.
  SplitMix64 rng(7);
  double inner = std::sqrt(bump.A()) / M_PI;
  double outer = std::sqrt(bump.A() + bump.b()) / 2.0;
  int far_count = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> c(d);
    for (double& v : c) v = rng.next_double();
    TorusPoint x(std::move(c));
    double v = bump.eval(x);
    ok = ok && v >= -1e-9 && v <= 1.0 + 1e-9;  // (i)
    if (toroidal_distance(x, TorusPoint::zero(d)) >= outer) {
      ok = ok && v <= eps / 8.0 + 1e-9;  // (iii)
      ++far_count;
    }
  }
  for (int trial = 0; trial < 10000; ++trial) {
    // (ii): random direction scaled into the inner ball.
    std::vector<double> c(d);
    double norm = 0.0;
    for (double& v : c) {
      v = rng.next_in(-1.0, 1.0);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    double rad = inner * std::pow(rng.next_double(), 1.0 / d);
    for (double& v : c) v = v / norm * rad;
    ok = ok && bump.eval(TorusPoint(std::move(c))) >= 1.0 - eps / 2.0 - 1e-9;
  }
  {
    std::vector<double> c(d, 0.0);
    c[0] = inner;  // boundary-adversarial: one coordinate at the radius
    ok = ok && bump.eval(TorusPoint(c)) >= 1.0 - eps / 2.0 - 1e-9;
    c[0] = outer;
    ok = ok && bump.eval(TorusPoint(c)) <= eps / 8.0 + 1e-9;
    c[0] = 1.0 - outer;  // wrapped twin
    ok = ok && bump.eval(TorusPoint(c)) <= eps / 8.0 + 1e-9;
  }

  // Sandwich bound on the argument for distant points.
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> c(d);
    for (double& v : c) v = rng.next_double();
    TorusPoint x(std::move(c));
    double gamma = toroidal_distance(x, TorusPoint::zero(d));
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += std::pow(std::sin(M_PI * x[i]), 2);
    s /= d;
    ok = ok && s <= 1.0 + 1e-12 && s >= 4.0 * gamma * gamma / d - 1e-12;
  }

  long long deg4 = build_q(eps, eps_dist, 4, TauRegime::Far).q_degree();
  long long deg16 = bump.q_degree();
  long long deg64 = build_q(eps, eps_dist, 64, TauRegime::Far).q_degree();
  ok = ok && deg16 <= 2 * deg4 && deg64 <= 2 * deg16;

  double elapsed = seconds_since(t0);
  ok = ok && elapsed < 120.0;
  detail = "deg(q) d=4:" + std::to_string(deg4) + " d=16:" + std::to_string(deg16) +
           " d=64:" + std::to_string(deg64) + " far_samples=" + std::to_string(far_count) +
           " runtime=" + std::to_string(elapsed) + "s";
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Cube-mixture construction at d=30, eps=0.005 (k from the formula), with
//    the exhaustive d=10 Walsh oracle run first.
bool criterion6(std::string& detail) {
  auto t0 = clock_type::now();
  bool ok = true;

  // Oracle first: level coefficients against the exhaustive tabulation.
  {
    CubeMixture m;
    m.d = 10;
    m.gamma = 0.37;
    SplitMix64 rng(4);
    double total = 0.0;
    for (int j = 0; j <= 10; ++j) {
      m.rates.push_back(j * m.gamma);
      double w = rng.next_in(0.0, 1.0);
      m.weights.push_back(w);
      total += w;
    }
    for (double& w : m.weights) w /= total;
    std::vector<double> walsh = walsh_coeffs(mix_tabulate(m));
    double dev = 0.0;
    for (std::size_t s = 0; s < walsh.size(); ++s) {
      int level = 0;
      for (std::size_t bit = s; bit; bit &= bit - 1) ++level;
      dev = std::max(dev, std::fabs(walsh[s] - level_coeff(m, level)));
    }
    ok = ok && dev <= 1e-12;
  }

  CubePair pair = cube_mixture_pair(30, 0.005);
  ok = ok && pair.k == 3;
  double a0 = std::fabs(pair.poly.a[0]);
  ok = ok && a0 >= 0.015;

  double pos = 0.0, neg = 0.0, sum = 0.0, norm = 0.0;
  for (double v : pair.poly.a) {
    (v >= 0 ? pos : neg) += std::fabs(v);
    sum += v;
    norm += std::fabs(v);
  }
  ok = ok && std::fabs(pos - 1.0) <= 1e-9 && std::fabs(neg - 1.0) <= 1e-9;
  ok = ok && std::fabs(norm - 2.0) <= 1e-9 && std::fabs(sum) <= 1e-9;

  SupnormReport sup = supnorm_near_one(pair.poly, 1.0 - pair.k / (9.0 * 30.0));
  ok = ok && sup.within;

  double gap = std::fabs(mass_at_ones(pair.mu) - mass_at_ones(pair.nu));
  ok = ok && gap >= 0.01;

  double elapsed = seconds_since(t0);
  ok = ok && elapsed < 60.0;
  detail = "a0=" + std::to_string(a0) + " supnorm=" + std::to_string(sup.measured) + "<=" +
           std::to_string(sup.bound) + " mass_gap=" + std::to_string(gap) +
           " runtime=" + std::to_string(elapsed) + "s";
  return ok;
}

// ---------------------------------------------------------------------------
// 7. Torus embedding at d=12: coefficient identity over 200 sampled indices
//    and the heavy-hitter witness at the origin.
bool criterion7(std::string& detail) {
  const int d = 12;
  CubePair pair = cube_mixture_pair(d, 0.01, /*desk_scale=*/true);
  auto [e1, e2] = embed_on_torus(pair);
  bool ok = e1.is_distribution(1e-9) && e2.is_distribution(1e-9);

  SplitMix64 rng(9);
  double dev = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> l(d);
    int level = 0;
    for (int& v : l) {
      v = static_cast<int>(rng.next() % 7) - 3;
      level += std::abs(v) % 2;
    }
    FrequencyIndex idx(l);
    dev = std::max(dev, std::abs(comb_fourier(e1, idx) -
                                 std::pow(2.0, d) * level_coeff(pair.mu, level)));
    dev = std::max(dev, std::abs(comb_fourier(e2, idx) -
                                 std::pow(2.0, d) * level_coeff(pair.nu, level)));
  }
  ok = ok && dev <= 1e-10;

  double gap = mass_at_ones(pair.mu) - mass_at_ones(pair.nu);
  const DiracComb& big = gap > 0 ? e1 : e2;
  const DiracComb& small = gap > 0 ? e2 : e1;
  bool witness = hh_violation(big, small, 0.49, pair.eps, TorusPoint::zero(d), 0.0);
  ok = ok && witness;
  detail = "max_identity_dev=" + std::to_string(dev) + " mass_gap=" + std::to_string(gap) +
           " witness=" + (witness ? "yes" : "no");
  return ok;
}

// ---------------------------------------------------------------------------
// 8. Small Wasserstein implies small heavy-hitter distance on random pairs.
bool criterion8(std::string& detail) {
  SplitMix64 rng(33);
  int passed = 0, total = 0;
  for (int d : {1, 2}) {
    for (double eps_dist : {0.2, 0.4}) {
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<TorusPoint> pa, pb;
        std::vector<double> wa, wb;
        for (int j = 0; j < 5; ++j) {
          std::vector<double> c1(d), c2(d);
          for (double& v : c1) v = rng.next_double();
          for (double& v : c2) v = rng.next_double();
          pa.emplace_back(std::move(c1));
          pb.emplace_back(std::move(c2));
          wa.push_back(rng.next_in(0.1, 1.0));
          wb.push_back(rng.next_in(0.1, 1.0));
        }
        DiracComb f = normalize_comb(DiracComb(pa, wa));
        DiracComb g = normalize_comb(DiracComb(pb, wb));
        ++total;
        if (check_wasserstein_implies_hh(f, g, eps_dist)) ++passed;
      }
    }
  }
  detail = std::to_string(passed) + "/" + std::to_string(total) + " trials";
  return passed == total;
}

// ---------------------------------------------------------------------------
// 9. Random separated pair at the stated desk scale (d=1, eps=0.05, M=64,
//    n=80). Implemented faithfully: 2M uniform points resampled up to the
//    retry budget, then conditions (i)/(ii) verified exhaustively. At these
//    parameters condition (i) (cross-separation 4 eps = 0.2 for 64+64 points)
//    is incompatible with condition (ii), so the generator is expected to
//    exhaust its retries; the failure is reported honestly.
bool criterion9(std::string& detail) {
  SeparatedPairParams ov;
  ov.M = 64;
  ov.n = 80;
  try {
    SeparatedPair pair = random_separated_pair(1, 0.05, 2026, 200, ov);
    // If a pair ever comes back, verify everything exhaustively.
    bool ok = true;
    double min_cross = 1e300;
    for (const auto& x : pair.xs)
      for (const auto& y : pair.ys) min_cross = std::min(min_cross, toroidal_distance(x, y));
    ok = ok && min_cross > 4.0 * pair.eps;
    double max_diff = 0.0;
    for (int l = 1; l < 2 * pair.n; ++l) {
      max_diff = std::max(max_diff, std::abs(lb_infinite_fourier_diff(pair, FrequencyIndex({l}))));
    }
    ok = ok && max_diff < pair.kappa;
    detail = "pair found: min_cross=" + std::to_string(min_cross) +
             " max_diff=" + std::to_string(max_diff) + " kappa=" + std::to_string(pair.kappa);
    return ok;
  } catch (const std::exception& e) {
    detail = std::string(e.what()) +
             " | the stated parameters are jointly unsatisfiable: any point sets with cross-"
             "separation 0.2 confine each cloud to at most two arcs, which forces an empirical "
             "exponential sum of order M at some frequency below 3, far above kappa/2";
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using Criterion = bool (*)(std::string&);
  const Criterion criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                criterion6, criterion7, criterion8, criterion9};
  const char* names[] = {
      "Jackson kernel suite (normalization, coefficients, sampling)",
      "grid-shift pair d=2 eps=0.1 (coefficient equality + transport LP)",
      "two-spike pair exact values at eps=0.1",
      "end-to-end reconstruction, desk scale (10 seeded signals, worst-case noise)",
      "bump suite d=16 + sqrt(d) degree trend",
      "cube construction d=30 eps=0.005 (with d=10 exhaustive oracle)",
      "torus embedding identity d=12 + heavy-hitter witness",
      "Wasserstein bound on heavy-hitter distance (100 random pairs)",
      "separated-pair preconditions at the stated desk scale (d=1 eps=0.05 M=64 n=80)",
  };

  int lo = 1, hi = 9;
  if (argc > 1) {
    lo = hi = std::atoi(argv[1]);
    if (lo < 1 || hi > 9) {
      std::fprintf(stderr, "usage: acceptance [1-9]\n");
      return 2;
    }
  }

  int failures = 0;
  for (int c = lo; c <= hi; ++c) {
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[c - 1](detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", c, names[c - 1],
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures;
}
