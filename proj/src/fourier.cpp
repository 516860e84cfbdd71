#include "sr/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sr/rng.hpp"

namespace sr {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

int FrequencyIndex::linf_norm() const {
  int m = 0;
  for (int e : entries) m = std::max(m, std::abs(e));
  return m;
}

int FrequencyIndex::l1_norm() const {
  int s = 0;
  for (int e : entries) s += std::abs(e);
  return s;
}

bool FrequencyIndex::is_zero() const {
  for (int e : entries)
    if (e != 0) return false;
  return true;
}

bool IndexSet::contains(const FrequencyIndex& l) const {
  if (l.dim() != dim) return false;
  return kind == IndexSetKind::Linf ? l.linf_norm() <= radius : l.l1_norm() <= radius;
}

double IndexSet::count() const {
  if (kind == IndexSetKind::Linf) return std::pow(2.0 * radius + 1.0, dim);
  double total = 0.0;
  for (int m = 0; m <= std::min(dim, radius); ++m)
    total += std::pow(2.0, m) * binom(dim, m) * binom(radius, m);
  return total;
}

std::vector<FrequencyIndex> IndexSet::enumerate(double cap) const {
  if (radius < 0) throw std::invalid_argument("IndexSet: negative radius");
  if (count() > cap) throw std::runtime_error("IndexSet: enumeration exceeds configured cap");
  std::vector<FrequencyIndex> out;
  out.reserve(static_cast<std::size_t>(count()));
  std::vector<int> cur(dim);
  if (kind == IndexSetKind::Linf) {
    // Odometer from (-T,...,-T) upward: lexicographic order.
    for (int i = 0; i < dim; ++i) cur[i] = -radius;
    while (true) {
      out.emplace_back(cur);
      int i = dim - 1;
      for (; i >= 0; --i) {
        if (++cur[i] <= radius) break;
        cur[i] = -radius;
      }
      if (i < 0) break;
    }
  } else {
    // Recursive lexicographic walk keeping the remaining l1 budget.
    auto rec = [&](auto&& self, int pos, int budget) -> void {
      if (pos == dim) {
        out.emplace_back(cur);
        return;
      }
      for (int v = -budget; v <= budget; ++v) {
        cur[pos] = v;
        self(self, pos + 1, budget - std::abs(v));
      }
    };
    rec(rec, 0, radius);
  }
  return out;
}

FourierTable::FourierTable(IndexSet set, std::vector<FrequencyIndex> indices,
                           std::vector<std::complex<double>> values)
    : set_(set), indices_(std::move(indices)), values_(std::move(values)) {
  if (indices_.size() != values_.size())
    throw std::invalid_argument("FourierTable: indices/values length mismatch");
  for (const auto& l : indices_)
    if (!set_.contains(l)) throw std::invalid_argument("FourierTable: index outside declared set");
}

std::size_t FourierTable::position_of(const FrequencyIndex& l) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), l);
  if (it == indices_.end() || !(*it == l))
    throw std::out_of_range("FourierTable: index not present");
  return static_cast<std::size_t>(it - indices_.begin());
}

std::complex<double> FourierTable::value_at(const FrequencyIndex& l) const {
  return values_[position_of(l)];
}

bool FourierTable::conjugate_symmetric(double tol) const {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    FrequencyIndex neg = indices_[i];
    for (int& e : neg.entries) e = -e;
    auto it = std::lower_bound(indices_.begin(), indices_.end(), neg);
    if (it == indices_.end() || !(*it == neg)) continue;
    std::size_t j = static_cast<std::size_t>(it - indices_.begin());
    if (std::abs(values_[i] - std::conj(values_[j])) > tol) return false;
  }
  return true;
}

std::complex<double> comb_fourier(const DiracComb& c, const FrequencyIndex& l) {
  if (c.dim() != l.dim()) throw std::invalid_argument("comb_fourier: dimension mismatch");
  std::complex<double> s = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    double phase = 0.0;
    const TorusPoint& p = c.point(j);
    for (int i = 0; i < c.dim(); ++i) phase += l.entries[i] * p[i];
    s += c.weight(j) * std::polar(1.0, kTwoPi * phase);
  }
  return s;
}

namespace {
FourierTable build_table(const DiracComb& c, const IndexSet& set, double cap, bool parallel) {
  if (c.empty()) throw std::invalid_argument("table_of: empty comb");
  if (c.dim() != set.dim) throw std::invalid_argument("table_of: dimension mismatch");
  std::vector<FrequencyIndex> idx = set.enumerate(cap);
  std::vector<std::complex<double>> vals(idx.size());
  const std::int64_t n = static_cast<std::int64_t>(idx.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) vals[i] = comb_fourier(c, idx[i]);
  } else {
    for (std::int64_t i = 0; i < n; ++i) vals[i] = comb_fourier(c, idx[i]);
  }
  return FourierTable(set, std::move(idx), std::move(vals));
}
}  // namespace

FourierTable table_of(const DiracComb& c, const IndexSet& set, double cap) {
  return build_table(c, set, cap, true);
}

FourierTable table_of_serial(const DiracComb& c, const IndexSet& set, double cap) {
  return build_table(c, set, cap, false);
}

FourierTable perturb(const FourierTable& t, double kappa, NoiseMode mode, std::uint64_t seed) {
  if (kappa < 0.0) throw std::invalid_argument("perturb: negative kappa");
  std::vector<std::complex<double>> vals = t.values();
  if (mode == NoiseMode::None || kappa == 0.0)
    return FourierTable(t.index_set(), t.indices(), std::move(vals));

  SplitMix64 rng(seed);
  // An index is "positive" when lexicographically greater than its negation;
  // the zero index (and any self-conjugate index) is its own mirror.
  for (std::size_t i = 0; i < t.size(); ++i) {
    FrequencyIndex neg = t.index(i);
    for (int& e : neg.entries) e = -e;
    if (t.index(i) < neg) continue;  // mirrored later from the positive side
    bool self = t.index(i) == neg;

    std::complex<double> offset;
    if (mode == NoiseMode::WorstCaseSign) {
      std::complex<double> v = vals[i];
      offset = (std::abs(v) == 0.0) ? std::complex<double>(kappa, 0.0) : kappa * v / std::abs(v);
    } else {
      // Uniform over the radius-kappa disk.
      double r = kappa * std::sqrt(rng.next_double());
      double a = kTwoPi * rng.next_double();
      offset = std::polar(r, a);
    }
    if (self) offset = std::complex<double>(offset.real(), 0.0);
    vals[i] += offset;
    if (!self) {
      std::size_t j = t.position_of(neg);
      vals[j] += std::conj(offset);
    }
  }
  return FourierTable(t.index_set(), t.indices(), std::move(vals));
}

std::pair<FrequencyIndex, double> max_coeff_diff(const FourierTable& t1, const FourierTable& t2) {
  if (!(t1.index_set() == t2.index_set()))
    throw std::invalid_argument("max_coeff_diff: index-set mismatch");
  std::size_t best = 0;
  double best_val = -1.0;
  for (std::size_t i = 0; i < t1.size(); ++i) {
    double d = std::abs(t1.value(i) - t2.value(i));
    if (d > best_val) {  // strict: lexicographically smallest argmax wins
      best_val = d;
      best = i;
    }
  }
  return {t1.index(best), best_val};
}

}  // namespace sr
