#pragma once

#include <functional>
#include <vector>

namespace sr {

// Power-basis polynomial, coefficients ascending, trailing zeros trimmed.
// Intended for small degrees where the power basis is well conditioned.
struct Poly {
  std::vector<double> c;

  Poly() = default;
  explicit Poly(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  double eval(double x) const;

  static Poly mul(const Poly& a, const Poly& b);        // Kahan-compensated convolution
  static Poly add(const Poly& a, const Poly& b);
  static Poly compose(const Poly& outer, const Poly& inner);
};

// Chebyshev series on [lo, hi], evaluated by Clenshaw recurrence.
struct ChebPoly {
  double lo = -1.0, hi = 1.0;
  std::vector<double> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  double eval(double x) const;
};

struct RemezResult {
  ChebPoly p;
  double max_err = 0.0;  // max |p - f| over the fitting grid
  bool converged = false;
};

// Discrete minimax fit of degree `degree` to f on [lo, hi], by exchange on a
// Chebyshev-distributed grid of `grid_pts` points.
RemezResult remez_fit(const std::function<double(double)>& f, double lo, double hi, int degree,
                      int grid_pts = 4096);

}  // namespace sr
