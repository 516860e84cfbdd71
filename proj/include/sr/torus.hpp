#pragma once

#include <cstddef>
#include <vector>

namespace sr {

// A point on the d-dimensional torus [0,1)^d. Coordinates are stored reduced
// mod 1, one canonical representative per point.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> coords);

  static TorusPoint zero(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const { return coords_; }

  bool operator==(const TorusPoint& o) const { return coords_ == o.coords_; }
  bool operator<(const TorusPoint& o) const { return coords_ < o.coords_; }

 private:
  std::vector<double> coords_;
};

double wrap01(double v);

// Euclidean combination of per-coordinate wraparound distances.
// Always <= sqrt(d)/2.
double toroidal_distance(const TorusPoint& a, const TorusPoint& b);

// Finite weighted point set, the universal signal representation. Duplicate
// points (exact coordinate equality after mod-1 reduction) are merged at
// construction by summing weights; points whose merged weight is exactly zero
// are dropped. Points are kept sorted lexicographically so equal combs have
// equal representations. Immutable after construction.
class DiracComb {
 public:
  explicit DiracComb(int dim) : dim_(dim), total_mass_(0.0) {}
  DiracComb(std::vector<TorusPoint> points, std::vector<double> weights);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const TorusPoint& point(std::size_t j) const { return points_[j]; }
  double weight(std::size_t j) const { return weights_[j]; }
  const std::vector<TorusPoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  // Sum of |w_j| (cached).
  double total_mass() const { return total_mass_; }
  double signed_mass() const;

  bool is_normalized(double tol = 1e-12) const;
  bool is_distribution(double tol = 1e-12) const;

  bool operator==(const DiracComb& o) const {
    return dim_ == o.dim_ && points_ == o.points_ && weights_ == o.weights_;
  }

 private:
  int dim_ = 0;
  std::vector<TorusPoint> points_;
  std::vector<double> weights_;
  double total_mass_ = 0.0;
};

// Scales weights so that sum |w_j| = 1. Throws on all-zero weights.
DiracComb normalize_comb(const DiracComb& c);

// Signed mass of the closed toroidal ball of given radius around center.
double ball_mass(const DiracComb& d, const TorusPoint& center, double radius);

// Uniform weight 1/T'^d on the T'^d-point grid (j/T' + offset) mod 1.
DiracComb grid_comb(int dim, int t_prime, double offset);

}  // namespace sr
