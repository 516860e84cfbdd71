#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "sr/fourier.hpp"
#include "sr/torus.hpp"

namespace sr {

// Effective parameters for closeness certification and reconstruction.
// Defaults follow the certificate formulas: T = ceil(6 sqrt(d)/eps),
// kappa = 0.001 eps / log2(1/eps) for d = 1 and (0.01 eps / sqrt(d))^d for
// d >= 2, n = ceil(sqrt(d)/eps) inside the algorithm (ceil(T/2) for
// certification), K = ceil(100 d (2n)^(d+1) / kappa), delta = kappa/8.
// The certificate-exact K is astronomically large even for d = 1, so K, kappa,
// T, n are all overridable; outputs are stamped with the effective values.
struct ReconParams {
  int d = 1;
  double eps = 0.1;
  int T = 0;
  double kappa = 0.0;
  int n = 0;            // smoothing kernel order used by the algorithm
  int cert_n = 0;       // kernel order in the certificate statement
  long long K = 0;      // reconstruction grid resolution per axis
  double delta = 0.0;   // LP solve residual
  bool overridden = false;

  struct Overrides {
    std::optional<int> T;
    std::optional<double> kappa;
    std::optional<int> n;
    std::optional<long long> K;
  };

  static ReconParams defaults(int d, double eps, const Overrides& ov = {});
};

// Integral of e^{2 pi i (l . x)} over the axis-aligned grid cell j of the
// K-per-axis grid: product over coordinates of 1/K when l_i = 0, else
// (e^{2 pi i l_i (j_i+1)/K} - e^{2 pi i l_i j_i /K}) / (2 pi i l_i).
std::complex<double> rect_coeff(const std::vector<long long>& j, const FrequencyIndex& l,
                                long long K);

// True iff max |t1(l) - t2(l)| <= p.kappa over the shared linf ball of radius
// p.T. A true result certifies d_W <= p.eps for the underlying signals.
bool certify_closeness(const FourierTable& t1, const FourierTable& t2, const ReconParams& p);
bool certify_closeness(const FourierTable& t1, const FourierTable& t2, double eps);

// Wasserstein reconstruction from noisy bandlimited coefficients: Jackson
// smoothing, a feasibility LP over a grid-supported comb, and
// renormalization. Output comb satisfies sum |w| = 1 within 1e-9.
DiracComb reconstruct_signed(const FourierTable& u, const ReconParams& p);

// Distribution variant: the LP carries sum a_j = 1 and a_j >= 0; negative
// solver residue is clipped before the final normalization.
DiracComb reconstruct_distribution(const FourierTable& u, const ReconParams& p);

}  // namespace sr
