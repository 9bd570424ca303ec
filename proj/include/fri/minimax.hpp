#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fri/core.hpp"

namespace fri {

// Z(x) = max_j x_j. Throws InputError on an empty assignment.
UnitScalar objective(const Assignment& x);

// One iterate of the single-row scheme: the constant level u_k, its active
// set J(u_k) = { j : u_k >= 1 - a_j } (0-based columns) and the active row
// sum  sum_{j in J(u_k)} T_L(a_j, u_k).
struct RowStep {
  std::size_t k = 0;
  UnitScalar u;
  std::vector<std::size_t> active;
  Rational row_sum;
};

enum class StopRule {
  TightSum,         // the first iterate already meets b_i with equality
  StableActiveSet,  // J(u_k) == J(u_{k-1}); the row sum is then exactly b_i
};

struct RowMinimaxTrace {
  std::size_t row = 0;
  std::vector<RowStep> steps;
  UnitScalar final_u;
  StopRule stop = StopRule::TightSum;
};

struct RowSolution {
  UnitScalar u;
  RowMinimaxTrace trace;
};

// Least y in [0, 1] with sum_j T_L(a_j, y) >= b. Starts from
//   u_0 = (b - sum_j a_j) / n + 1
// and repeats  u_k = (b - sum_{J(u_{k-1})} a_j) / |J(u_{k-1})| + 1  while the
// active set keeps shrinking. Both stopping rules are checked against each
// other; a disagreement raises InternalError.
// Throws InputError on an entry outside [0, 1], InfeasibleError when
// sum_j a_j < b.
RowSolution solve_row(std::span<const Rational> a_row, const Requirement& b,
                      std::size_t row_index = 0);

struct MinimaxResult {
  std::vector<RowSolution> per_row;
  UnitScalar u_star;
  // The constant vector u_star: the greatest optimal solution.
  Assignment greatest_optimal;
  UnitScalar optimal_value;
  // True iff greatest_optimal is itself a minimal solution, in which case it
  // is the only optimal solution.
  bool unique = false;
};

// Minimizes max_j x_j over the solution set. Throws InfeasibleError on an
// unsolvable system.
MinimaxResult solve_minimax(const Problem& p);

// Minimal solutions below the greatest optimal solution, found by the
// permutation sweep (see enumerate_minimals). Each has objective u_star.
std::vector<Assignment> minimal_optimal_solutions(const Problem& p, std::size_t limit,
                                                  bool allow_large = false);

}  // namespace fri
