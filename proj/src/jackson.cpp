#include "sr/jackson.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sr {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kCdfGrid = 1 << 16;

// C(a,3) with the convention C(a,3) = 0 for a < 3.
long long binom3(long long a) {
  if (a < 3) return 0;
  return a * (a - 1) * (a - 2) / 6;
}
}  // namespace

JacksonKernel::JacksonKernel(int n, int dim) : n_(n), dim_(dim) {
  if (n < 1) throw std::invalid_argument("JacksonKernel: n must be >= 1");
  if (dim < 1) throw std::invalid_argument("JacksonKernel: dim must be >= 1");
  if (n > 1000000) throw std::invalid_argument("JacksonKernel: n too large");
  alpha_ = 3.0 / (static_cast<double>(n) * (2.0 * static_cast<double>(n) * n + 1.0));

  // Numeric CDF of eval_1d on a uniform grid; the kernel is a trigonometric
  // polynomial of degree < 2n << kCdfGrid, so the trapezoid sum is exact up
  // to rounding.
  auto cdf = std::make_shared<std::vector<double>>(kCdfGrid + 1);
  double h = 1.0 / kCdfGrid;
  double prev = eval_1d(0.0);
  (*cdf)[0] = 0.0;
  for (std::size_t i = 1; i <= kCdfGrid; ++i) {
    double cur = eval_1d(i == kCdfGrid ? 0.0 : i * h);  // periodic wrap
    (*cdf)[i] = (*cdf)[i - 1] + 0.5 * h * (prev + cur);
    prev = cur;
  }
  cdf_ = std::move(cdf);
}

double JacksonKernel::eval_1d(double x) const {
  x = wrap01(x);
  double s = std::sin(kPi * x);
  if (std::fabs(s) < 1e-9) {
    // Removable singularity at the origin (x near 0 or 1): ratio series
    // sin(pi n t)/sin(pi t) = n (1 - (n^2-1)(pi t)^2/6 + O(t^4)).
    double t = std::min(x, 1.0 - x);
    double u = kPi * t;
    double nn = static_cast<double>(n_);
    double ratio = nn * (1.0 - (nn * nn - 1.0) * u * u / 6.0);
    double r2 = ratio * ratio;
    return alpha_ * r2 * r2;
  }
  double r = std::sin(kPi * n_ * x) / s;
  double r2 = r * r;
  return alpha_ * r2 * r2;
}

double JacksonKernel::eval_nd(const TorusPoint& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("JacksonKernel::eval_nd: dimension mismatch");
  double p = 1.0;
  for (int i = 0; i < dim_; ++i) p *= eval_1d(x[i]);
  return p;
}

double JacksonKernel::fourier_1d(long long ell) const {
  long long l = ell < 0 ? -ell : ell;
  long long n = n_;
  if (l >= 2 * n - 1) return 0.0;
  long long num;
  if (l <= n - 2) {
    num = binom3(2 * n + 1 - l) - 4 * binom3(n + 1 - l);
  } else {
    num = binom3(2 * n + 1 - l);
  }
  // alpha_n = 3/(n(2n^2+1)); the integer numerator keeps fourier_1d(0) exact.
  long long den = n * (2 * n * n + 1);
  return 3.0 * static_cast<double>(num) / static_cast<double>(den);
}

double JacksonKernel::fourier_nd(const FrequencyIndex& l) const {
  if (l.dim() != dim_) throw std::invalid_argument("JacksonKernel::fourier_nd: dimension mismatch");
  double p = 1.0;
  for (int e : l.entries) p *= fourier_1d(e);
  return p;
}

TorusPoint JacksonKernel::sample(SplitMix64& rng) const {
  const std::vector<double>& cdf = *cdf_;
  double total = cdf.back();
  std::vector<double> coords(dim_);
  for (int i = 0; i < dim_; ++i) {
    double u = rng.next_double() * total;
    // Binary search for the bracketing cell, then linear interpolation.
    std::size_t lo = 0, hi = cdf.size() - 1;
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (cdf[mid] <= u)
        lo = mid;
      else
        hi = mid;
    }
    double span = cdf[hi] - cdf[lo];
    double frac = span > 0.0 ? (u - cdf[lo]) / span : 0.0;
    coords[i] = (static_cast<double>(lo) + frac) / kCdfGrid;
  }
  return TorusPoint(std::move(coords));
}

FourierTable smooth_table(const FourierTable& u, const JacksonKernel& k) {
  if (u.dim() != k.dim()) throw std::invalid_argument("smooth_table: dimension mismatch");
  if (u.index_set().kind != IndexSetKind::Linf)
    throw std::invalid_argument("smooth_table: index set must be an linf ball");
  std::vector<std::complex<double>> vals(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) vals[i] = u.value(i) * k.fourier_nd(u.index(i));
  return FourierTable(u.index_set(), u.indices(), std::move(vals));
}

}  // namespace sr
