#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "sr/torus.hpp"

namespace sr {

struct FrequencyIndex {
  std::vector<int> entries;

  FrequencyIndex() = default;
  explicit FrequencyIndex(std::vector<int> e) : entries(std::move(e)) {}

  int dim() const { return static_cast<int>(entries.size()); }
  int linf_norm() const;
  int l1_norm() const;
  bool is_zero() const;

  bool operator==(const FrequencyIndex& o) const { return entries == o.entries; }
  bool operator<(const FrequencyIndex& o) const { return entries < o.entries; }
};

enum class IndexSetKind { Linf, L1 };

// A declared frequency window: the linf- or l1-ball of radius T in Z^d.
struct IndexSet {
  IndexSetKind kind = IndexSetKind::Linf;
  int dim = 0;
  int radius = 0;

  static IndexSet linf(int dim, int radius) { return {IndexSetKind::Linf, dim, radius}; }
  static IndexSet l1(int dim, int radius) { return {IndexSetKind::L1, dim, radius}; }

  bool contains(const FrequencyIndex& l) const;
  // Closed-form cardinality: (2T+1)^d for linf, sum_m 2^m C(d,m) C(T,m) for l1.
  double count() const;
  // All members in lexicographic order. Throws if count() exceeds cap.
  std::vector<FrequencyIndex> enumerate(double cap = 1e7) const;

  bool operator==(const IndexSet& o) const {
    return kind == o.kind && dim == o.dim && radius == o.radius;
  }
};

// Map from frequency indices to complex coefficients over a declared index
// set. Values are stored in the set's enumeration (lexicographic) order.
class FourierTable {
 public:
  FourierTable(IndexSet set, std::vector<FrequencyIndex> indices,
               std::vector<std::complex<double>> values);

  const IndexSet& index_set() const { return set_; }
  int dim() const { return set_.dim; }
  std::size_t size() const { return indices_.size(); }
  const FrequencyIndex& index(std::size_t i) const { return indices_[i]; }
  std::complex<double> value(std::size_t i) const { return values_[i]; }
  const std::vector<FrequencyIndex>& indices() const { return indices_; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  // Binary search; throws if the index is not in the set.
  std::complex<double> value_at(const FrequencyIndex& l) const;
  std::size_t position_of(const FrequencyIndex& l) const;

  bool conjugate_symmetric(double tol = 1e-10) const;

 private:
  IndexSet set_;
  std::vector<FrequencyIndex> indices_;
  std::vector<std::complex<double>> values_;
};

// f_hat(l) = sum_j w_j exp(2*pi*i l.x_j).
std::complex<double> comb_fourier(const DiracComb& c, const FrequencyIndex& l);

// Table of comb_fourier over the enumerated set. `table_of` runs the inner
// map over indices in parallel; `table_of_serial` is the reference kept for
// testing. Both produce bitwise-identical values.
FourierTable table_of(const DiracComb& c, const IndexSet& set, double cap = 1e7);
FourierTable table_of_serial(const DiracComb& c, const IndexSet& set, double cap = 1e7);

enum class NoiseMode { None, WorstCaseSign, UniformDisk };

// Moves each value by a complex offset of modulus <= kappa. Conjugate
// symmetry is preserved by perturbing only the lexicographically positive
// half-space and mirroring; self-conjugate indices get a real offset.
FourierTable perturb(const FourierTable& t, double kappa, NoiseMode mode, std::uint64_t seed);

// Argmax and max of |t1(l) - t2(l)|; ties broken by lexicographically
// smallest l. Requires identical index sets.
std::pair<FrequencyIndex, double> max_coeff_diff(const FourierTable& t1, const FourierTable& t2);

}  // namespace sr
