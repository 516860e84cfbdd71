#include "sr/poly.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sr {

namespace {
void trim(std::vector<double>& c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}
}  // namespace

Poly::Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {
  if (c.empty()) c.push_back(0.0);
  trim(c);
}

double Poly::eval(double x) const {
  double r = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Poly Poly::mul(const Poly& a, const Poly& b) {
  std::vector<double> out(a.c.size() + b.c.size() - 1, 0.0);
  std::vector<double> comp(out.size(), 0.0);  // Kahan carry per slot
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      double term = a.c[i] * b.c[j] - comp[i + j];
      double sum = out[i + j] + term;
      comp[i + j] = (sum - out[i + j]) - term;
      out[i + j] = sum;
    }
  }
  return Poly(std::move(out));
}

Poly Poly::add(const Poly& a, const Poly& b) {
  std::vector<double> out(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
  return Poly(std::move(out));
}

Poly Poly::compose(const Poly& outer, const Poly& inner) {
  Poly r({outer.c.back()});
  for (std::size_t i = outer.c.size() - 1; i-- > 0;) {
    r = Poly::mul(r, inner);
    r = Poly::add(r, Poly({outer.c[i]}));
  }
  return r;
}

double ChebPoly::eval(double x) const {
  double u = (2.0 * x - lo - hi) / (hi - lo);
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) {
    double b0 = 2.0 * u * b1 - b2 + c[i];
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + (c.empty() ? 0.0 : c[0]);
}

namespace {

// Solve the (m x m) dense system in place, partial pivoting.
void solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& rhs) {
  const int m = static_cast<int>(rhs.size());
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-300) throw std::runtime_error("remez: singular reference system");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < m; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int k = col; k < m; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int col = m; col-- > 0;) {
    double s = rhs[col];
    for (int k = col + 1; k < m; ++k) s -= a[col][k] * rhs[k];
    rhs[col] = s / a[col][col];
  }
}

void cheb_basis_row(double u, int degree, std::vector<double>& row) {
  row.resize(degree + 1);
  double t0 = 1.0, t1 = u;
  row[0] = 1.0;
  if (degree >= 1) row[1] = u;
  for (int j = 2; j <= degree; ++j) {
    double t2 = 2.0 * u * t1 - t0;
    row[j] = t2;
    t0 = t1;
    t1 = t2;
  }
}

}  // namespace

RemezResult remez_fit(const std::function<double(double)>& f, double lo, double hi, int degree,
                      int grid_pts) {
  if (degree < 0 || grid_pts < degree + 2) throw std::invalid_argument("remez_fit: bad sizes");
  const int G = grid_pts;
  const int m = degree + 2;

  std::vector<double> gx(G), gu(G), gf(G);
  for (int g = 0; g < G; ++g) {
    // Chebyshev-distributed abscissae cluster where extrema live.
    double u = -std::cos(std::numbers::pi * g / (G - 1));
    gu[g] = u;
    gx[g] = lo + (hi - lo) * (u + 1.0) / 2.0;
    gf[g] = f(gx[g]);
  }

  std::vector<int> ref(m);
  for (int i = 0; i < m; ++i) ref[i] = static_cast<int>(std::round(double(i) * (G - 1) / (m - 1)));

  RemezResult best;
  best.max_err = std::numeric_limits<double>::infinity();

  std::vector<double> err(G);
  for (int iter = 0; iter < 120; ++iter) {
    // Alternation system on the current reference.
    std::vector<std::vector<double>> a(m, std::vector<double>(m));
    std::vector<double> rhs(m);
    for (int i = 0; i < m; ++i) {
      cheb_basis_row(gu[ref[i]], degree, a[i]);
      a[i].push_back(0.0);  // placeholder resized below
      a[i][degree + 1] = (i % 2 == 0) ? 1.0 : -1.0;
      rhs[i] = gf[ref[i]];
    }
    solve_dense(a, rhs);

    ChebPoly p;
    p.lo = lo;
    p.hi = hi;
    p.c.assign(rhs.begin(), rhs.begin() + degree + 1);
    double lev = std::fabs(rhs[degree + 1]);

    double max_err = 0.0;
    int argmax = 0;
    for (int g = 0; g < G; ++g) {
      err[g] = p.eval(gx[g]) - gf[g];
      if (std::fabs(err[g]) > max_err) {
        max_err = std::fabs(err[g]);
        argmax = g;
      }
    }
    if (max_err < best.max_err) {
      best.p = p;
      best.max_err = max_err;
    }
    if (max_err <= lev * (1.0 + 1e-9) + 1e-14) {
      best.converged = true;
      return best;
    }

    // Multi-point exchange: one extremum per sign run.
    std::vector<int> cands;
    int cur_sign = 0, best_g = -1;
    double best_mag = -1.0;
    for (int g = 0; g < G; ++g) {
      int s = (err[g] > 0.0) - (err[g] < 0.0);
      if (s == 0) continue;
      if (s != cur_sign) {
        if (best_g >= 0) cands.push_back(best_g);
        cur_sign = s;
        best_g = g;
        best_mag = std::fabs(err[g]);
      } else if (std::fabs(err[g]) > best_mag) {
        best_g = g;
        best_mag = std::fabs(err[g]);
      }
    }
    if (best_g >= 0) cands.push_back(best_g);

    if (static_cast<int>(cands.size()) >= m) {
      while (static_cast<int>(cands.size()) > m) {
        if (std::fabs(err[cands.front()]) <= std::fabs(err[cands.back()]))
          cands.erase(cands.begin());
        else
          cands.pop_back();
      }
      ref = cands;
    } else {
      // Not enough oscillation yet: single exchange preserving alternation.
      int s_star = (err[argmax] > 0.0) - (err[argmax] < 0.0);
      auto sign_at = [&](int g) { return (err[g] > 0.0) - (err[g] < 0.0); };
      if (argmax < ref.front()) {
        if (sign_at(ref.front()) == s_star) {
          ref.front() = argmax;
        } else {
          ref.pop_back();
          ref.insert(ref.begin(), argmax);
        }
      } else if (argmax > ref.back()) {
        if (sign_at(ref.back()) == s_star) {
          ref.back() = argmax;
        } else {
          ref.erase(ref.begin());
          ref.push_back(argmax);
        }
      } else {
        for (int i = 0; i < m - 1; ++i) {
          if (ref[i] <= argmax && argmax <= ref[i + 1]) {
            if (sign_at(ref[i]) == s_star)
              ref[i] = argmax;
            else
              ref[i + 1] = argmax;
            break;
          }
        }
      }
    }
  }
  return best;  // iteration cap; best.converged stays false
}

}  // namespace sr
