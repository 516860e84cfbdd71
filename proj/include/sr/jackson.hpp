#pragma once

#include <memory>
#include <vector>

#include "sr/fourier.hpp"
#include "sr/rng.hpp"
#include "sr/torus.hpp"

namespace sr {

// The degree-(2n-2) trigonometric mollifier alpha_n sin^4(pi n x)/sin^4(pi x)
// on the torus, and its d-variate product. Immutable; the sampler CDF table
// is built once at construction and shared read-only.
class JacksonKernel {
 public:
  JacksonKernel(int n, int dim);

  int n() const { return n_; }
  int dim() const { return dim_; }
  double alpha() const { return alpha_; }

  double eval_1d(double x) const;
  double eval_nd(const TorusPoint& x) const;

  // Exact closed-form coefficient; even in ell, in [0,1], exactly 1 at 0,
  // exactly 0 for |ell| >= 2n-1.
  double fourier_1d(long long ell) const;
  double fourier_nd(const FrequencyIndex& l) const;

  // Per-coordinate inverse-CDF draw from the kernel density.
  TorusPoint sample(SplitMix64& rng) const;

  // CDF accessor for tests: value of the numeric CDF at grid node i/N.
  double cdf_at_node(std::size_t i) const { return (*cdf_)[i]; }
  std::size_t cdf_nodes() const { return cdf_->size(); }

 private:
  int n_ = 1;
  int dim_ = 1;
  double alpha_ = 1.0;
  std::shared_ptr<const std::vector<double>> cdf_;  // 2^16+1 nodes on [0,1]
};

// u_l * J_hat(l) per index; requires an linf index set and matching dims.
FourierTable smooth_table(const FourierTable& u, const JacksonKernel& k);

}  // namespace sr
