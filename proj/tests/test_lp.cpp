#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sr/lp.hpp"
#include "sr/rng.hpp"

using namespace sr::lp;

TEST_CASE("tiny problems") {
  {
    LinearProgram p;
    p.add_var(0.0, kInf);
    p.add_constraint({1.0}, Relation::LessEq, 3.0);
    p.set_objective(Sense::Maximize, {1.0});
    Solution s = solve(p);
    CHECK(s.status == Status::Optimal);
    CHECK(s.objective_value == doctest::Approx(3.0));
  }
  {
    LinearProgram p;
    p.add_var();
    p.add_var();
    p.add_constraint({1.0, 1.0}, Relation::Equal, 1.0);
    Solution s = solve(p);
    CHECK(s.status == Status::Feasible);
    CHECK(s.x[0] + s.x[1] == doctest::Approx(1.0));
    CHECK(s.x[0] >= -1e-9);
    CHECK(s.x[1] >= -1e-9);
  }
  {
    LinearProgram p;
    p.add_var();
    p.add_constraint({1.0}, Relation::GreaterEq, 2.0);
    p.add_constraint({1.0}, Relation::LessEq, 1.0);
    CHECK(solve(p).status == Status::Infeasible);
  }
}

TEST_CASE("bounds handling") {
  // Free variable via internal split.
  LinearProgram p;
  p.add_var(-kInf, kInf);
  p.add_constraint({2.0}, Relation::Equal, -5.0);
  Solution s = solve(p);
  CHECK(s.status == Status::Feasible);
  CHECK(s.x[0] == doctest::Approx(-2.5));

  // Two-sided bounds.
  LinearProgram q;
  q.add_var(-2.0, 4.0);
  q.set_objective(Sense::Minimize, {1.0});
  Solution smin = solve(q);
  CHECK(smin.objective_value == doctest::Approx(-2.0));
  q.set_objective(Sense::Maximize, {1.0});
  CHECK(solve(q).objective_value == doctest::Approx(4.0));

  // Upper-bounded only.
  LinearProgram r;
  r.add_var(-kInf, 7.0);
  r.set_objective(Sense::Maximize, {1.0});
  CHECK(solve(r).objective_value == doctest::Approx(7.0));
}

TEST_CASE("hand-computed transportation plan") {
  // Two 2-point measures on a line with distances fixed by hand:
  // supply (0.7, 0.3) at {0, 1}; demand (0.4, 0.6) at {0, 1} with cost
  // c00=0, c01=1, c10=1, c11=0 -> optimal plan ships 0.3 from 0 to 1, cost 0.3.
  LinearProgram p;
  for (int i = 0; i < 4; ++i) p.add_var();
  p.add_constraint({1, 1, 0, 0}, Relation::Equal, 0.7);
  p.add_constraint({0, 0, 1, 1}, Relation::Equal, 0.3);
  p.add_constraint({1, 0, 1, 0}, Relation::Equal, 0.4);
  p.add_constraint({0, 1, 0, 1}, Relation::Equal, 0.6);
  p.set_objective(Sense::Minimize, {0.0, 1.0, 1.0, 0.0});
  Solution s = solve(p);
  CHECK(s.status == Status::Optimal);
  CHECK(s.objective_value == doctest::Approx(0.3));
}

TEST_CASE("solution satisfies residuals within tol") {
  sr::SplitMix64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng.next() % 4);
    int m = 2 + static_cast<int>(rng.next() % 4);
    LinearProgram p;
    for (int i = 0; i < n; ++i) p.add_var(0.0, 2.0);
    // Constraints built around a known feasible interior point.
    std::vector<double> x0(n);
    for (double& v : x0) v = rng.next_in(0.2, 1.8);
    for (int r = 0; r < m; ++r) {
      std::vector<double> a(n);
      double lhs = 0.0;
      for (int i = 0; i < n; ++i) {
        a[i] = rng.next_in(-1.0, 1.0);
        lhs += a[i] * x0[i];
      }
      Relation rel = (r % 2 == 0) ? Relation::LessEq : Relation::GreaterEq;
      double slacked = lhs + (rel == Relation::LessEq ? 0.3 : -0.3);
      p.add_constraint(std::move(a), rel, slacked);
    }
    std::vector<double> c(n);
    for (double& v : c) v = rng.next_in(-1.0, 1.0);
    p.set_objective(Sense::Minimize, c);
    Solution s = solve(p, 1e-9);
    REQUIRE(s.status == Status::Optimal);
    for (const auto& con : p.constraints) {
      double lhs = 0.0;
      for (int i = 0; i < n; ++i) lhs += con.coeffs[i] * s.x[i];
      if (con.rel == Relation::LessEq) CHECK(lhs <= con.rhs + 1e-9);
      if (con.rel == Relation::GreaterEq) CHECK(lhs >= con.rhs - 1e-9);
    }
    for (int i = 0; i < n; ++i) {
      CHECK(s.x[i] >= -1e-9);
      CHECK(s.x[i] <= 2.0 + 1e-9);
    }
  }
}

TEST_CASE("duality gap on random dense problems") {
  // Primal: max c'x st Ax <= b, x >= 0. Dual: min b'y st A'y >= c, y >= 0.
  sr::SplitMix64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng.next() % 3);
    int m = 3 + static_cast<int>(rng.next() % 3);
    std::vector<std::vector<double>> A(m, std::vector<double>(n));
    std::vector<double> b(m), c(n);
    for (auto& row : A)
      for (double& v : row) v = rng.next_in(0.1, 1.0);
    for (double& v : b) v = rng.next_in(0.5, 2.0);
    for (double& v : c) v = rng.next_in(0.1, 1.0);

    LinearProgram primal;
    for (int i = 0; i < n; ++i) primal.add_var();
    for (int r = 0; r < m; ++r) primal.add_constraint(A[r], Relation::LessEq, b[r]);
    primal.set_objective(Sense::Maximize, c);
    Solution sp = solve(primal, 1e-9);
    REQUIRE(sp.status == Status::Optimal);

    LinearProgram dual;
    for (int r = 0; r < m; ++r) dual.add_var();
    for (int i = 0; i < n; ++i) {
      std::vector<double> col(m);
      for (int r = 0; r < m; ++r) col[r] = A[r][i];
      dual.add_constraint(std::move(col), Relation::GreaterEq, c[i]);
    }
    dual.set_objective(Sense::Minimize, b);
    Solution sd = solve(dual, 1e-9);
    REQUIRE(sd.status == Status::Optimal);

    CHECK(std::fabs(sp.objective_value - sd.objective_value) <= 1e-8);
  }
}

TEST_CASE("determinism") {
  LinearProgram p;
  for (int i = 0; i < 6; ++i) p.add_var(0.0, 1.0);
  p.add_constraint({1, 1, 1, 1, 1, 1}, Relation::Equal, 2.5);
  p.add_constraint({1, -1, 2, 0, 1, -2}, Relation::LessEq, 1.0);
  p.set_objective(Sense::Maximize, {3, 1, 4, 1, 5, 9});
  Solution a = solve(p), b = solve(p);
  CHECK(a.x == b.x);
  CHECK(a.objective_value == b.objective_value);
}

TEST_CASE("dump format") {
  LinearProgram p;
  p.add_var(0.0, 1.0);
  p.add_constraint({2.0}, Relation::LessEq, 1.0);
  p.set_objective(Sense::Minimize, {1.0});
  std::string d = dump(p);
  CHECK(d.find("min 1") != std::string::npos);
  CHECK(d.find("<= 1") != std::string::npos);
  CHECK(d.find("bounds") != std::string::npos);
}
