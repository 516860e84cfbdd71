#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sr/poly.hpp"
#include "sr/torus.hpp"

namespace sr {

// Probability that k tosses of a t-biased coin yield at least k/2 heads.
// Degree-k polynomial in t; evaluated as a binomial tail (all terms positive)
// rather than through expanded coefficients, which cancel catastrophically
// past k around 40.
double amplifier(int k, double t);

// Exact power-basis coefficients of the amplifier, for small k only.
Poly amplifier_poly(int k);

// Smallest k with amplifier(k, 3/5) >= 1 - tau and amplifier(k, 2/5) <= tau.
int choose_k(double tau);

struct SoftStep {
  ChebPoly r;               // in [0,1] on [0,m]; >= 3/5 on [0,ell]; <= 2/5 on [ell+1,m]
  double achieved_error;    // minimax error of the underlying ramp fit
  int degree;
};

// Minimax polynomial approximation (error <= 1/3) of the clipped ramp that is
// 1 on [0,ell] and 0 on [ell+1,m], rescaled to r = (3/5)(p + 1/3). The fit
// degree doubles from degree_budget until the error bar is met, then a binary
// search finds the minimal sufficient degree.
SoftStep soft_step(double m, double ell, int degree_budget, int degree_cap = 4096,
                   int grid_pts = 4096);

enum class TauRegime { Near, Far };

// Ball radii parameters of the mass-comparison certificate: near covers
// witness radii 0.6 eps_dist <= tau <= eps_dist, far covers tau < 0.6 eps_dist.
struct BallScale {
  double A = 0.0;
  double b = 0.0;
};
BallScale bump_scale(TauRegime regime, double eps_dist);

// q(x) = amplifier(k, r(x * d/b)) restricted to x in [0,1], with
//   (1) q in [0,1];  (2) q >= 1 - eps/2 on [0, A/d];  (3) q <= eps/8 on
//   [(A+b)/d, 1];
// and the d-variate bump p(x) = q(sum_i sin^2(pi x_i)/d).
class BumpPolynomial {
 public:
  BumpPolynomial(SoftStep base, int k, int d, double eps, double eps_dist, BallScale scale);

  int k() const { return k_; }
  int d() const { return d_; }
  double eps() const { return eps_; }
  double eps_dist() const { return eps_dist_; }
  double A() const { return scale_.A; }
  double b() const { return scale_.b; }
  const SoftStep& base() const { return base_; }

  long long q_degree() const { return static_cast<long long>(k_) * base_.degree; }
  long long trig_degree() const { return 2 * q_degree(); }

  double eval_q(double x) const;            // x in [0,1]
  double eval(const TorusPoint& x) const;   // p(x)

 private:
  SoftStep base_;
  int k_;
  int d_;
  double eps_, eps_dist_;
  BallScale scale_;
};

BumpPolynomial build_q(double eps, double eps_dist, int d, TauRegime regime);

// Batch evaluation over many points; the parallel version is the production
// path, the serial one the reference kept for testing.
std::vector<double> eval_bump_batch(const BumpPolynomial& bump, std::span<const TorusPoint> pts);
std::vector<double> eval_bump_batch_serial(const BumpPolynomial& bump,
                                           std::span<const TorusPoint> pts);

double expectation_under_comb(const BumpPolynomial& bump, const DiracComb& d);

struct HHCertificateReport {
  double e1 = 0.0;
  double e2 = 0.0;
  double gap = 0.0;           // e1 - e2
  double index_count = 0.0;   // |{l : ||l||_1 <= degree_T}|
  double threshold = 0.0;     // eps/4 - kappa * index_count
  bool witnessed = false;     // gap >= threshold
};

// Expectation-comparison certificate: if every coefficient with l1 norm up to
// degree_T matched within kappa, the expectation gap could not exceed
// kappa * index_count; a gap at least eps/4 - kappa * index_count is the
// concrete form of the contrapositive chain.
HHCertificateReport hh_certificate_gap(const BumpPolynomial& bump, const DiracComb& d1,
                                       const DiracComb& d2, double kappa, long long degree_T);

}  // namespace sr
