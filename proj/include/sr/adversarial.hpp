#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sr/fourier.hpp"
#include "sr/torus.hpp"

namespace sr {

// Two uniform grids offset by half a cell: identical coefficients up to
// individual degree T'-1, Wasserstein distance at least eps.
struct GridPair {
  DiracComb d1;
  DiracComb d2;
  int t_prime = 0;
};
GridPair grid_pair(int d, double eps);

// Two point clouds that are cross-separated and have uniformly small
// empirical exponential sums; convolving the uniform measures on them with a
// smoothing kernel of order n gives far-apart distributions with everywhere-
// close coefficients.
struct SeparatedPairParams {
  std::optional<long long> M;
  std::optional<int> n;
  std::optional<double> kappa;
};
struct SeparatedPair {
  std::vector<TorusPoint> xs, ys;
  long long M = 0;
  int n = 0;
  double kappa = 0.0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  int attempts = 0;
};
SeparatedPair random_separated_pair(int d, double eps, std::uint64_t seed, int max_retries,
                                    const SeparatedPairParams& ov = {});

// J_hat(l) times the difference of the empirical exponential sums: the
// coefficient difference of the two smoothed distributions.
std::complex<double> lb_infinite_fourier_diff(const SeparatedPair& pair, const FrequencyIndex& l);

// (delta_0, (1-2 eps) delta_0 + 2 eps delta_{1/2}).
std::pair<DiracComb, DiracComb> one_dim_pair(double eps);

// Degree-d polynomial A(x) = (1-x)^k B(x) with sum |a_j| = 2 maximizing the
// constant coefficient, built by LP over B's coefficients.
struct RepeatedRootPoly {
  std::vector<double> a;         // coefficients of A, ascending
  std::vector<double> b_coeffs;  // coefficients of the cofactor B
  int k = 0;                     // multiplicity of the root at 1
  double a0_ratio = 0.0;         // |a_0| / sum_{j>=1} |a_j|
  double eval(double x) const;   // factored evaluation (1-x)^k B(x)
};
RepeatedRootPoly repeated_root_poly(int d, int k);

// Measured sup of |A(x)|/2 over [interval_lo, 1] on a 2^14 grid, against the
// root-damping bound (d+1)(e/9)^k.
struct SupnormReport {
  double measured = 0.0;
  double bound = 0.0;
  bool within = false;
};
SupnormReport supnorm_near_one(const RepeatedRootPoly& p, double interval_lo);

// Mixture over {-1,1}^d of i.i.d. product distributions with per-coordinate
// mean e^{-t_j}, t_j = j * gamma.
struct CubeMixture {
  int d = 0;
  std::vector<double> weights;  // p_0..p_d, nonneg, sum 1
  std::vector<double> rates;    // t_j = j * gamma
  double gamma = 0.0;
};

struct CubePair {
  CubeMixture mu, nu;
  RepeatedRootPoly poly;
  double eps = 0.0;
  int k = 0;
};

// Splits the signs of the extremal polynomial's coefficients into the two
// mixing-weight vectors. The range 2^{-d/3} < eps < 1/170 is enforced unless
// desk_scale is set (small-d runs that only need the checkable properties).
CubePair cube_mixture_pair(int d, double eps, bool desk_scale = false);

// 2^{-d} sum_j p_j e^{-t_j s}: the level-s Fourier coefficient (depends on a
// subset S only through |S| = s).
double level_coeff(const CubeMixture& m, int s);

// 2^{-d} sum_j p_j (1 + e^{-t_j})^d: mass on the all-ones string.
double mass_at_ones(const CubeMixture& m);

// Exhaustive tabulation over all 2^d strings (test oracle). Index bit i set
// means coordinate i equals -1.
std::vector<double> mix_tabulate(const CubeMixture& m);

// Walsh coefficients 2^{-d} sum_z f(z) chi_S(z) of a table indexed as above,
// via the fast transform.
std::vector<double> walsh_coeffs(std::vector<double> table);

// Embeds the cube pair on the torus: string z maps to the point with
// coordinate 0 where z_i = +1 and 1/2 where z_i = -1. Explicit tabulation, so
// d is capped at 20.
std::pair<DiracComb, DiracComb> embed_on_torus(const CubePair& pair);

}  // namespace sr
