#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sr::lp {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Feasible, Infeasible };

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Constraint {
  std::vector<double> coeffs;
  Relation rel = Relation::LessEq;
  double rhs = 0.0;
};

// Variables with bounds, linear equality/inequality constraints, optional
// linear objective. Absolute values are always modeled by the caller via
// nonnegative variable splitting; this layer stays purely linear.
struct LinearProgram {
  int num_vars = 0;
  std::optional<Sense> sense;
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  std::vector<double> lower;  // -inf allowed
  std::vector<double> upper;  // +inf allowed

  // Adds a variable with the given bounds, returns its column index.
  int add_var(double lo = 0.0, double hi = kInf);
  void add_constraint(std::vector<double> coeffs, Relation rel, double rhs);
  void set_objective(Sense s, std::vector<double> coeffs);
};

struct Solution {
  Status status = Status::Infeasible;
  std::vector<double> x;
  double objective_value = 0.0;
};

// Dense two-phase simplex, Dantzig pricing with lowest-index tie-breaking and
// a Bland fallback after stalls. Deterministic for identical input. Phase-1
// residual above tol reports Infeasible; iteration exhaustion throws instead
// of returning a wrong answer.
Solution solve(const LinearProgram& prob, double tol = 1e-9);

// Fixed-format text dump (objective row, constraint rows, bounds) for
// external cross-checking.
std::string dump(const LinearProgram& prob);

}  // namespace sr::lp
