#include "sr/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sr {

double wrap01(double v) {
  double r = v - std::floor(v);
  // v just below an integer can round the difference up to exactly 1.0.
  if (r >= 1.0) r -= 1.0;
  if (r < 0.0) r += 1.0;
  return r;
}

TorusPoint::TorusPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double& c : coords_) {
    if (!std::isfinite(c)) throw std::invalid_argument("TorusPoint: non-finite coordinate");
    c = wrap01(c);
  }
}

TorusPoint TorusPoint::zero(int dim) { return TorusPoint(std::vector<double>(dim, 0.0)); }

double toroidal_distance(const TorusPoint& a, const TorusPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("toroidal_distance: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    double t = std::fabs(a[i] - b[i]);
    t = std::min(t, 1.0 - t);
    s += t * t;
  }
  return std::sqrt(s);
}

DiracComb::DiracComb(std::vector<TorusPoint> points, std::vector<double> weights) {
  if (points.size() != weights.size())
    throw std::invalid_argument("DiracComb: points/weights length mismatch");
  if (points.empty()) throw std::invalid_argument("DiracComb: empty point list");
  dim_ = points[0].dim();
  for (const auto& p : points)
    if (p.dim() != dim_) throw std::invalid_argument("DiracComb: mixed dimensions");

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });

  for (std::size_t idx : order) {
    if (!points_.empty() && points_.back() == points[idx]) {
      weights_.back() += weights[idx];
    } else {
      points_.push_back(points[idx]);
      weights_.push_back(weights[idx]);
    }
  }
  // Drop points whose merged weight cancelled to exactly zero.
  std::size_t out = 0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (weights_[i] != 0.0) {
      points_[out] = points_[i];
      weights_[out] = weights_[i];
      ++out;
    }
  }
  points_.resize(out);
  weights_.resize(out);

  total_mass_ = 0.0;
  for (double w : weights_) total_mass_ += std::fabs(w);
}

double DiracComb::signed_mass() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

bool DiracComb::is_normalized(double tol) const {
  return std::fabs(total_mass_ - 1.0) <= tol;
}

bool DiracComb::is_distribution(double tol) const {
  if (!is_normalized(tol)) return false;
  for (double w : weights_)
    if (w < 0.0) return false;
  return true;
}

DiracComb normalize_comb(const DiracComb& c) {
  if (c.total_mass() <= 0.0) throw std::invalid_argument("normalize_comb: all-zero weights");
  std::vector<double> w = c.weights();
  for (double& x : w) x /= c.total_mass();
  return DiracComb(c.points(), w);
}

double ball_mass(const DiracComb& d, const TorusPoint& center, double radius) {
  double s = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j)
    if (toroidal_distance(d.point(j), center) <= radius) s += d.weight(j);
  return s;
}

DiracComb grid_comb(int dim, int t_prime, double offset) {
  if (t_prime < 1) throw std::invalid_argument("grid_comb: T' must be >= 1");
  double count = std::pow(static_cast<double>(t_prime), dim);
  if (count > 1e7) throw std::invalid_argument("grid_comb: grid too large");
  std::size_t total = static_cast<std::size_t>(count + 0.5);

  std::vector<TorusPoint> pts;
  pts.reserve(total);
  std::vector<int> j(dim, 0);
  for (std::size_t c = 0; c < total; ++c) {
    std::vector<double> coords(dim);
    for (int i = 0; i < dim; ++i) coords[i] = wrap01(static_cast<double>(j[i]) / t_prime + offset);
    pts.emplace_back(std::move(coords));
    for (int i = dim - 1; i >= 0; --i) {
      if (++j[i] < t_prime) break;
      j[i] = 0;
    }
  }
  return DiracComb(std::move(pts), std::vector<double>(total, 1.0 / static_cast<double>(total)));
}

}  // namespace sr
