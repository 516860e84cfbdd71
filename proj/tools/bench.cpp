// Benchmark comparing the OpenMP kernels against their serial references.

#include <chrono>
#include <cstdio>

#include "sr/bump.hpp"
#include "sr/fourier.hpp"
#include "sr/metrics.hpp"
#include "sr/rng.hpp"

using namespace sr;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

DiracComb random_comb(SplitMix64& rng, int d, int k) {
  std::vector<TorusPoint> pts;
  std::vector<double> ws;
  for (int j = 0; j < k; ++j) {
    std::vector<double> c(d);
    for (double& v : c) v = rng.next_double();
    pts.emplace_back(std::move(c));
    ws.push_back(rng.next_in(0.1, 1.0));
  }
  return normalize_comb(DiracComb(pts, ws));
}

}  // namespace

int main() {
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial (ms)", "parallel(ms)", "speedup");

  {
    SplitMix64 rng(1);
    DiracComb c = random_comb(rng, 2, 200);
    IndexSet set = IndexSet::linf(2, 40);
    auto t0 = clock_type::now();
    FourierTable ser = table_of_serial(c, set);
    double ts = ms_since(t0);
    t0 = clock_type::now();
    FourierTable par = table_of(c, set);
    double tp = ms_since(t0);
    std::printf("%-28s %12.1f %12.1f %8.2fx\n", "fourier table 200x6561", ts, tp, ts / tp);
  }

  {
    BumpPolynomial bump = build_q(0.25, 0.49, 16, TauRegime::Far);
    SplitMix64 rng(2);
    std::vector<TorusPoint> pts;
    for (int i = 0; i < 200000; ++i) {
      std::vector<double> c(16);
      for (double& v : c) v = rng.next_double();
      pts.emplace_back(std::move(c));
    }
    auto t0 = clock_type::now();
    auto ser = eval_bump_batch_serial(bump, pts);
    double ts = ms_since(t0);
    t0 = clock_type::now();
    auto par = eval_bump_batch(bump, pts);
    double tp = ms_since(t0);
    std::printf("%-28s %12.1f %12.1f %8.2fx\n", "bump eval 200k pts (d=16)", ts, tp, ts / tp);
  }

  {
    SplitMix64 rng(3);
    DiracComb f = random_comb(rng, 2, 40);
    DiracComb g = random_comb(rng, 2, 40);
    HHParams p;
    p.eps_dist = 0.3;
    p.center_grid = 128;
    auto t0 = clock_type::now();
    p.parallel = false;
    HHInterval a = hh_distance(f, g, p);
    double ts = ms_since(t0);
    t0 = clock_type::now();
    p.parallel = true;
    HHInterval b = hh_distance(f, g, p);
    double tp = ms_since(t0);
    std::printf("%-28s %12.1f %12.1f %8.2fx\n", "hh sweep 16k centers", ts, tp, ts / tp);
    if (a.lower != b.lower || a.upper != b.upper) {
      std::printf("MISMATCH between serial and parallel heavy-hitter sweeps\n");
      return 1;
    }
  }
  return 0;
}
