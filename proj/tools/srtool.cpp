// Command-line harness: generators, reconstruction, distances, bump reports,
// and construction verification, with machine-readable JSON/CSV outputs.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sr/adversarial.hpp"
#include "sr/bump.hpp"
#include "sr/jackson.hpp"
#include "sr/json_io.hpp"
#include "sr/metrics.hpp"
#include "sr/recon.hpp"
#include "sr/rng.hpp"

using namespace sr;

namespace {

void emit(const json& j, const std::string& output) {
  if (output.empty())
    std::cout << j.dump(2) << '\n';
  else
    save_json(j, output);
}

struct Clause {
  std::string name;
  bool pass;
  double measured;
};

json clauses_to_json(const std::string& construction, const std::vector<Clause>& clauses) {
  json j;
  j["construction"] = construction;
  bool all = true;
  json arr = json::array();
  for (const auto& c : clauses) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"measured", c.measured}});
    all = all && c.pass;
  }
  j["clauses"] = std::move(arr);
  j["pass"] = all;
  return j;
}

int finish_verify(const std::string& construction, const std::vector<Clause>& clauses,
                  const std::string& output) {
  json j = clauses_to_json(construction, clauses);
  emit(j, output);
  bool all = j["pass"].get<bool>();
  std::cout << "verify " << construction << ": " << (all ? "PASS" : "FAIL");
  for (const auto& c : clauses)
    if (!c.pass) std::cout << " [" << c.name << " = " << c.measured << "]";
  std::cout << '\n';
  return all ? 0 : 1;
}

std::vector<Clause> verify_grid(const json& in) {
  DiracComb d1 = comb_from_json(in.at("d1"));
  DiracComb d2 = comb_from_json(in.at("d2"));
  int t_prime = in.at("t_prime").get<int>();
  double eps = in.at("eps").get<double>();

  FourierTable ta = table_of(d1, IndexSet::linf(d1.dim(), t_prime - 1));
  FourierTable tb = table_of(d2, IndexSet::linf(d2.dim(), t_prime - 1));
  double max_diff = max_coeff_diff(ta, tb).second;

  double min_cross = 1e300;
  for (std::size_t i = 0; i < d1.size(); ++i)
    for (std::size_t j = 0; j < d2.size(); ++j)
      min_cross = std::min(min_cross, toroidal_distance(d1.point(i), d2.point(j)));

  double w = wasserstein(d1, d2);
  return {{"max_fourier_diff", max_diff <= 1e-10, max_diff},
          {"min_cross_distance", min_cross >= eps, min_cross},
          {"wasserstein", w >= eps - 1e-9, w}};
}

std::vector<Clause> verify_onedim(const json& in) {
  DiracComb d1 = comb_from_json(in.at("d1"));
  DiracComb d2 = comb_from_json(in.at("d2"));
  double eps = in.at("eps").get<double>();

  FourierTable ta = table_of(d1, IndexSet::linf(1, 7));
  FourierTable tb = table_of(d2, IndexSet::linf(1, 7));
  double even_dev = 0.0, odd_dev = 0.0;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    double diff = std::abs(ta.value(i) - tb.value(i));
    if (ta.index(i).entries[0] % 2 == 0)
      even_dev = std::max(even_dev, diff);
    else
      odd_dev = std::max(odd_dev, std::fabs(diff - 4.0 * eps));
  }
  double w = wasserstein(d1, d2);
  HHParams hp;
  hp.eps_dist = 0.49;
  HHInterval hh = hh_distance(d1, d2, hp);
  return {{"even_coeffs_equal", even_dev <= 1e-12, even_dev},
          {"odd_coeffs_4eps", odd_dev <= 1e-9, odd_dev},
          {"wasserstein_eps", std::fabs(w - eps) <= 1e-6, w},
          {"hh_lower_2eps", std::fabs(hh.lower - 2.0 * eps) <= 1e-6, hh.lower},
          {"hh_upper_2eps", std::fabs(hh.upper - 2.0 * eps) <= 1e-6, hh.upper}};
}

std::vector<Clause> verify_random(const json& in) {
  SeparatedPair pair = separated_pair_from_json(in);
  int d = pair.xs.empty() ? 1 : pair.xs[0].dim();

  double min_cross = 1e300;
  for (const auto& x : pair.xs)
    for (const auto& y : pair.ys) min_cross = std::min(min_cross, toroidal_distance(x, y));

  double max_sum = 0.0;
  double max_smoothed = 0.0;
  for (const auto& l : IndexSet::linf(d, 2 * pair.n - 1).enumerate(2e6)) {
    if (l.is_zero()) continue;
    std::complex<double> sx = 0.0, sy = 0.0;
    for (const auto& x : pair.xs) sx += comb_fourier(DiracComb({x}, {1.0}), l);
    for (const auto& y : pair.ys) sy += comb_fourier(DiracComb({y}, {1.0}), l);
    max_sum = std::max({max_sum, std::abs(sx) / pair.M, std::abs(sy) / pair.M});
    max_smoothed = std::max(max_smoothed, std::abs(lb_infinite_fourier_diff(pair, l)));
  }
  return {{"cross_separation_gt_4eps", min_cross > 4.0 * pair.eps, min_cross},
          {"exp_sums_below_half_kappa", max_sum < pair.kappa / 2.0, max_sum},
          {"smoothed_diff_below_kappa", max_smoothed < pair.kappa, max_smoothed}};
}

std::vector<Clause> verify_cube(const json& in) {
  CubePair pair = cube_pair_from_json(in);
  const int d = pair.mu.d;
  double s1 = 0.0, s2 = 0.0;
  for (int j = 0; j <= d; ++j) {
    s1 += pair.mu.weights[j];
    s2 += pair.nu.weights[j];
  }
  double a0 = std::fabs(pair.poly.a[0]);
  SupnormReport sup = supnorm_near_one(pair.poly, 1.0 - pair.k / (9.0 * d));
  double gap = std::fabs(mass_at_ones(pair.mu) - mass_at_ones(pair.nu));

  std::vector<Clause> clauses = {
      {"mu_mass_one", std::fabs(s1 - 1.0) <= 1e-9, s1},
      {"nu_mass_one", std::fabs(s2 - 1.0) <= 1e-9, s2},
      {"a0_at_least_3eps", a0 >= 3.0 * pair.eps, a0},
      {"supnorm_within_bound", sup.within, sup.measured},
      {"mass_gap_2eps", gap >= 2.0 * pair.eps, gap},
  };

  if (d <= 12) {
    std::vector<double> walsh = walsh_coeffs(mix_tabulate(pair.mu));
    double dev = 0.0;
    for (std::size_t s = 0; s < walsh.size(); ++s) {
      int level = 0;
      for (std::size_t bit = s; bit; bit &= bit - 1) ++level;
      dev = std::max(dev, std::fabs(walsh[s] - level_coeff(pair.mu, level)));
    }
    clauses.push_back({"walsh_oracle_match", dev <= 1e-12, dev});
  }
  if (d <= 14) {
    auto [e1, e2] = embed_on_torus(pair);
    SplitMix64 rng(1234);
    double dev = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> l(d);
      int level = 0;
      for (int& v : l) {
        v = static_cast<int>(rng.next() % 7) - 3;
        level += std::abs(v) % 2;
      }
      std::complex<double> lhs = comb_fourier(e1, FrequencyIndex(l));
      dev = std::max(dev, std::abs(lhs - std::pow(2.0, d) * level_coeff(pair.mu, level)));
    }
    clauses.push_back({"embedding_identity", dev <= 1e-10, dev});

    double gap_signed = mass_at_ones(pair.mu) - mass_at_ones(pair.nu);
    const DiracComb& big = gap_signed > 0 ? e1 : e2;
    const DiracComb& small = gap_signed > 0 ? e2 : e1;
    bool witness = hh_violation(big, small, 0.49, pair.eps, TorusPoint::zero(d), 0.0);
    clauses.push_back({"hh_witness_at_origin", witness, std::fabs(gap_signed)});
  }
  return clauses;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model-agnostic super-resolution toolkit on the torus"};
  app.require_subcommand(1);

  std::string output;
  std::uint64_t seed = 0;
  std::string format = "json";
  app.add_option("--output", output, "output file (stdout when omitted)");
  app.add_option("--seed", seed, "64-bit RNG seed");
  app.add_option("--format", format, "json|csv (sweep reports)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate an adversarial construction");
  std::string construction;
  int gen_d = 1;
  double gen_eps = 0.1;
  std::string emit_combs;
  int max_retries = 200;
  std::optional<long long> ov_M;
  std::optional<int> ov_n;
  std::optional<double> ov_kappa;
  bool desk_scale = false;
  gen->add_option("--construction", construction, "grid|random|onedim|cube")->required();
  gen->add_option("--d", gen_d, "dimension");
  gen->add_option("--epsilon", gen_eps, "eps parameter")->required();
  gen->add_option("--emit-combs", emit_combs, "also write <prefix>.d1.json/.d2.json");
  gen->add_option("--max-retries", max_retries, "random construction retry budget");
  gen->add_option("--M", ov_M, "override: points per side (random)");
  gen->add_option("--n", ov_n, "override: smoothing order (random)");
  gen->add_option("--kappa", ov_kappa, "override: coefficient closeness (random)");
  gen->add_flag("--desk-scale", desk_scale, "relax the cube eps-range check for small d");

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "reconstruct a signal from a coefficient table");
  std::string rec_input, rec_mode = "signed";
  int rec_d = 1;
  double rec_eps = 0.25;
  std::optional<long long> rec_K;
  std::optional<double> rec_kappa;
  std::optional<int> rec_T, rec_n;
  rec->add_option("--input", rec_input, "table JSON")->required();
  rec->add_option("--d", rec_d, "dimension")->required();
  rec->add_option("--epsilon", rec_eps, "target accuracy")->required();
  rec->add_option("--grid-K", rec_K, "override: grid resolution per axis");
  rec->add_option("--kappa", rec_kappa, "override: coefficient noise bound");
  rec->add_option("--bandlimit", rec_T, "override: bandlimit T");
  rec->add_option("--jackson-n", rec_n, "override: smoothing kernel order");
  rec->add_option("--mode", rec_mode, "signed|distribution");

  // distance
  auto* dist = app.add_subcommand("distance", "distance between two combs");
  std::string metric = "wasserstein", file_a, file_b;
  double eps_dist = 0.49;
  int center_grid = 64, radius_grid = 256;
  dist->add_option("--metric", metric, "wasserstein|hh")->required();
  dist->add_option("--a", file_a, "first comb JSON")->required();
  dist->add_option("--b", file_b, "second comb JSON")->required();
  dist->add_option("--eps-dist", eps_dist, "heavy-hitter scale");
  dist->add_option("--center-grid", center_grid, "hh center grid resolution");
  dist->add_option("--radius-grid", radius_grid, "hh radius grid resolution");

  // bump
  auto* bmp = app.add_subcommand("bump", "build the trigonometric bump and report");
  int bump_d = 16;
  double bump_eps = 0.25, bump_eps_dist = 0.49;
  std::string regime = "far";
  bool bump_verify = false;
  bmp->add_option("--d", bump_d, "dimension")->required();
  bmp->add_option("--epsilon", bump_eps, "accuracy")->required();
  bmp->add_option("--eps-dist", bump_eps_dist, "scale parameter")->required();
  bmp->add_option("--regime", regime, "near|far");
  bmp->add_flag("--verify", bump_verify, "run the grid verification report");

  // verify
  auto* ver = app.add_subcommand("verify", "check a generated construction");
  std::string ver_construction, ver_input;
  std::optional<int> ver_d;
  std::optional<double> ver_eps;
  ver->add_option("--construction", ver_construction, "grid|random|onedim|cube")->required();
  ver->add_option("--input", ver_input, "pair JSON (regenerated when omitted)");
  ver->add_option("--d", ver_d, "dimension (regeneration)");
  ver->add_option("--epsilon", ver_eps, "eps (regeneration)");

  // report
  auto* rep = app.add_subcommand("report", "parameter sweeps with plot-ready output");
  std::string kind = "jackson", n_list = "1,2,3,4,5,6,7,8", k_list = "32,64";
  int rep_d = 1, rep_trials = 5;
  double rep_eps = 0.25;
  rep->add_option("--kind", kind, "jackson|recon-sweep")->required();
  rep->add_option("--n-list", n_list, "kernel orders (jackson)");
  rep->add_option("--K-list", k_list, "grid resolutions (recon-sweep)");
  rep->add_option("--d", rep_d, "dimension");
  rep->add_option("--epsilon", rep_eps, "accuracy (recon-sweep)");
  rep->add_option("--trials", rep_trials, "signals per configuration");

  // Global flags (--output, --seed, --format) may appear after a subcommand.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      json out;
      DiracComb d1(1), d2(1);
      bool have_combs = false;
      if (construction == "grid") {
        GridPair gp = grid_pair(gen_d, gen_eps);
        out["construction"] = "grid";
        out["d"] = gen_d;
        out["eps"] = gen_eps;
        out["t_prime"] = gp.t_prime;
        out["d1"] = comb_to_json(gp.d1);
        out["d2"] = comb_to_json(gp.d2);
        d1 = gp.d1;
        d2 = gp.d2;
        have_combs = true;
      } else if (construction == "onedim") {
        auto [a, b] = one_dim_pair(gen_eps);
        out["construction"] = "onedim";
        out["d"] = 1;
        out["eps"] = gen_eps;
        out["d1"] = comb_to_json(a);
        out["d2"] = comb_to_json(b);
        d1 = a;
        d2 = b;
        have_combs = true;
      } else if (construction == "random") {
        SeparatedPairParams ov;
        ov.M = ov_M;
        ov.n = ov_n;
        ov.kappa = ov_kappa;
        SeparatedPair pair = random_separated_pair(gen_d, gen_eps, seed, max_retries, ov);
        out = separated_pair_to_json(pair);
      } else if (construction == "cube") {
        CubePair pair = cube_mixture_pair(gen_d, gen_eps, desk_scale);
        out = cube_pair_to_json(pair);
        auto [a, b] = pair.mu.d <= 14 ? embed_on_torus(pair)
                                      : std::pair<DiracComb, DiracComb>{DiracComb(1), DiracComb(1)};
        if (pair.mu.d <= 14) {
          d1 = a;
          d2 = b;
          have_combs = true;
        }
      } else {
        std::cerr << "gen: unknown construction '" << construction << "'\n";
        return 2;
      }
      out["seed"] = seed;
      emit(out, output);
      if (!emit_combs.empty() && have_combs) {
        save_json(comb_to_json(d1), emit_combs + ".d1.json");
        save_json(comb_to_json(d2), emit_combs + ".d2.json");
      }
      std::cout << "gen " << construction << ": ok\n";
      return 0;
    }

    if (rec->parsed()) {
      ReconParams::Overrides ov;
      ov.T = rec_T;
      ov.kappa = rec_kappa;
      ov.n = rec_n;
      ov.K = rec_K;
      ReconParams params = ReconParams::defaults(rec_d, rec_eps, ov);
      FourierTable u = table_from_json(load_json(rec_input));
      DiracComb g = rec_mode == "distribution" ? reconstruct_distribution(u, params)
                                               : reconstruct_signed(u, params);
      json out = comb_to_json(g);
      out["mode"] = rec_mode;
      out["params"] = params_to_json(params);
      emit(out, output);
      std::cout << "reconstruct: " << g.size() << " support points, total mass "
                << g.total_mass() << "\n";
      return 0;
    }

    if (dist->parsed()) {
      DiracComb a = comb_from_json(load_json(file_a));
      DiracComb b = comb_from_json(load_json(file_b));
      json out;
      if (metric == "wasserstein") {
        double w = wasserstein(a, b);
        out["metric"] = "wasserstein";
        out["value"] = w;
        std::cout << "wasserstein = " << w << "\n";
      } else if (metric == "hh") {
        HHParams p;
        p.eps_dist = eps_dist;
        p.center_grid = center_grid;
        p.radius_grid = radius_grid;
        HHInterval iv = hh_distance(a, b, p);
        out["metric"] = "hh";
        out["eps_dist"] = eps_dist;
        out["center_grid"] = center_grid;
        out["radius_grid"] = radius_grid;
        out["grid_r0"] = iv.grid_r0;
        out["lower"] = iv.lower;
        out["upper"] = iv.upper;
        out["exact"] = iv.exact;
        out["witness"] = {{"center", iv.witness_center.coords()},
                          {"tau", iv.witness_tau},
                          {"direction", iv.witness_direction}};
        std::cout << "hh in [" << iv.lower << ", " << iv.upper << "]\n";
      } else {
        std::cerr << "distance: unknown metric '" << metric << "'\n";
        return 2;
      }
      emit(out, output);
      return 0;
    }

    if (bmp->parsed()) {
      TauRegime reg = regime == "near" ? TauRegime::Near : TauRegime::Far;
      BumpPolynomial bump = build_q(bump_eps, bump_eps_dist, bump_d, reg);
      json out;
      out["d"] = bump_d;
      out["eps"] = bump_eps;
      out["eps_dist"] = bump_eps_dist;
      out["regime"] = regime;
      out["A"] = bump.A();
      out["b"] = bump.b();
      out["k"] = bump.k();
      out["base_degree"] = bump.base().degree;
      out["achieved_remez_error"] = bump.base().achieved_error;
      out["q_degree"] = bump.q_degree();
      out["trig_degree"] = bump.trig_degree();
      bool all_ok = true;
      if (bump_verify) {
        SplitMix64 rng(seed == 0 ? 1 : seed);
        double inner = std::sqrt(bump.A()) / M_PI;
        double outer = std::sqrt(bump.A() + bump.b()) / 2.0;
        bool range_ok = true, near_ok = true, far_ok = true;
        for (int trial = 0; trial < 10000; ++trial) {
          std::vector<double> c(bump_d);
          for (double& v : c) v = rng.next_double();
          TorusPoint x(std::move(c));
          double v = bump.eval(x);
          range_ok = range_ok && v >= -1e-9 && v <= 1.0 + 1e-9;
          double dist0 = toroidal_distance(x, TorusPoint::zero(bump_d));
          if (dist0 >= outer) far_ok = far_ok && v <= bump_eps / 8.0 + 1e-9;
          // Near-ball samples: scale a random direction into the inner ball.
          std::vector<double> c2(bump_d);
          double norm = 0.0;
          for (double& vv : c2) {
            vv = rng.next_in(-1.0, 1.0);
            norm += vv * vv;
          }
          norm = std::sqrt(norm);
          double rad = inner * std::pow(rng.next_double(), 1.0 / bump_d);
          for (double& vv : c2) vv = vv / norm * rad;
          double vnear = bump.eval(TorusPoint(std::move(c2)));
          near_ok = near_ok && vnear >= 1.0 - bump_eps / 2.0 - 1e-9;
        }
        out["verify"] = {{"range", range_ok}, {"near_ball", near_ok}, {"far_tail", far_ok}};
        all_ok = range_ok && near_ok && far_ok;
      }
      emit(out, output);
      std::cout << "bump: k=" << bump.k() << " base_degree=" << bump.base().degree
                << " q_degree=" << bump.q_degree() << (bump_verify && !all_ok ? " VERIFY-FAIL" : "")
                << "\n";
      return all_ok ? 0 : 1;
    }

    if (ver->parsed()) {
      json in;
      if (!ver_input.empty()) {
        in = load_json(ver_input);
      } else {
        // Regenerate from --d/--epsilon.
        if (!ver_eps) {
          std::cerr << "verify: need --input or --epsilon\n";
          return 2;
        }
        int d = ver_d.value_or(1);
        if (ver_construction == "grid") {
          GridPair gp = grid_pair(d, *ver_eps);
          in["d1"] = comb_to_json(gp.d1);
          in["d2"] = comb_to_json(gp.d2);
          in["t_prime"] = gp.t_prime;
          in["eps"] = *ver_eps;
        } else if (ver_construction == "onedim") {
          auto [a, b] = one_dim_pair(*ver_eps);
          in["d1"] = comb_to_json(a);
          in["d2"] = comb_to_json(b);
          in["eps"] = *ver_eps;
        } else if (ver_construction == "cube") {
          in = cube_pair_to_json(cube_mixture_pair(d, *ver_eps, d < 23));
        } else if (ver_construction == "random") {
          in = separated_pair_to_json(random_separated_pair(d, *ver_eps, seed, 200));
        } else {
          std::cerr << "verify: unknown construction '" << ver_construction << "'\n";
          return 2;
        }
      }
      std::vector<Clause> clauses;
      if (ver_construction == "grid")
        clauses = verify_grid(in);
      else if (ver_construction == "onedim")
        clauses = verify_onedim(in);
      else if (ver_construction == "random")
        clauses = verify_random(in);
      else if (ver_construction == "cube")
        clauses = verify_cube(in);
      else {
        std::cerr << "verify: unknown construction '" << ver_construction << "'\n";
        return 2;
      }
      return finish_verify(ver_construction, clauses, output);
    }

    if (rep->parsed()) {
      auto parse_list = [](const std::string& s) {
        std::vector<long long> out;
        std::size_t pos = 0;
        while (pos < s.size()) {
          std::size_t comma = s.find(',', pos);
          if (comma == std::string::npos) comma = s.size();
          out.push_back(std::stoll(s.substr(pos, comma - pos)));
          pos = comma + 1;
        }
        return out;
      };
      std::ostringstream csv;
      json rows = json::array();
      if (kind == "jackson") {
        csv << "n,alpha,quadrature_integral,max_closed_vs_quadrature\n";
        for (long long n : parse_list(n_list)) {
          JacksonKernel k(static_cast<int>(n), 1);
          double integral = 0.0;
          int panels = 100000;
          double h = 1.0 / panels;
          for (int i = 0; i < panels; ++i) {
            double x0 = i * h, x2 = x0 + h, x1 = x0 + 0.5 * h;
            integral += (h / 6.0) * (k.eval_1d(x0) + 4.0 * k.eval_1d(x1) + k.eval_1d(x2));
          }
          double max_dev = 0.0;
          for (long long l = 0; l <= 2 * n; ++l) {
            double q = 0.0;
            int p2 = 20000;
            double h2 = 1.0 / p2;
            for (int i = 0; i < p2; ++i) {
              double x0 = i * h2, x2 = x0 + h2, x1 = x0 + 0.5 * h2;
              auto f = [&](double x) { return k.eval_1d(x) * std::cos(2.0 * M_PI * l * x); };
              q += (h2 / 6.0) * (f(x0) + 4.0 * f(x1) + f(x2));
            }
            max_dev = std::max(max_dev, std::fabs(q - k.fourier_1d(l)));
          }
          csv << n << ',' << k.alpha() << ',' << integral << ',' << max_dev << '\n';
          rows.push_back({{"n", n},
                          {"alpha", k.alpha()},
                          {"quadrature_integral", integral},
                          {"max_closed_vs_quadrature", max_dev}});
        }
      } else if (kind == "recon-sweep") {
        csv << "K,T,n,kappa,trial,dW,pass\n";
        for (long long K : parse_list(k_list)) {
          ReconParams::Overrides ov;
          ov.K = K;
          ov.T = 24;
          ov.n = 4;
          ov.kappa = 0.01;
          ReconParams params = ReconParams::defaults(rep_d, rep_eps, ov);
          SplitMix64 rng(seed);
          for (int trial = 0; trial < rep_trials; ++trial) {
            std::vector<TorusPoint> pts;
            std::vector<double> ws;
            for (int s = 0; s < 3; ++s) {
              pts.push_back(TorusPoint({rng.next_double()}));
              ws.push_back(rng.next_in(0.2, 1.0));
            }
            DiracComb f = normalize_comb(DiracComb(pts, ws));
            FourierTable u = table_of(f, IndexSet::linf(rep_d, params.T));
            FourierTable noisy =
                perturb(u, params.kappa / 8.0, NoiseMode::WorstCaseSign, rng.next());
            DiracComb g = reconstruct_signed(noisy, params);
            double w = wasserstein(f, g);
            bool pass = w <= 4.0 * params.eps;
            csv << K << ',' << params.T << ',' << params.n << ',' << params.kappa << ','
                << trial << ',' << w << ',' << (pass ? 1 : 0) << '\n';
            rows.push_back(
                {{"K", K}, {"trial", trial}, {"dW", w}, {"pass", pass}});
          }
        }
      } else {
        std::cerr << "report: unknown kind '" << kind << "'\n";
        return 2;
      }
      if (format == "csv") {
        if (output.empty())
          std::cout << csv.str();
        else {
          std::ofstream out(output);
          out << csv.str();
        }
      } else {
        emit(json{{"kind", kind}, {"rows", rows}}, output);
      }
      std::cout << "report " << kind << ": ok\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
