#include "fri/minimax.hpp"

#include <string>
#include <utility>

#include "fri/errors.hpp"
#include "fri/minimality.hpp"

namespace fri {
namespace {

std::vector<std::size_t> active_set(std::span<const Rational> thresholds, const Rational& u) {
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < thresholds.size(); ++j)
    if (u >= thresholds[j]) active.push_back(j);
  return active;
}

Rational active_sum(std::span<const Rational> a_row, const std::vector<std::size_t>& active) {
  Rational sum = 0;
  for (std::size_t j : active) sum += a_row[j];
  return sum;
}

bool is_proper_subset(const std::vector<std::size_t>& inner, const std::vector<std::size_t>& outer) {
  if (inner.size() >= outer.size()) return false;
  std::size_t k = 0;
  for (std::size_t j : inner) {
    while (k < outer.size() && outer[k] < j) ++k;
    if (k == outer.size() || outer[k] != j) return false;
  }
  return true;
}

}  // namespace

UnitScalar objective(const Assignment& x) {
  if (x.empty()) throw InputError("objective of an empty assignment");
  const Rational* best = &x[0];
  for (const auto& v : x)
    if (v > *best) best = &v;
  return UnitScalar(*best);
}

RowSolution solve_row(std::span<const Rational> a_row, const Requirement& b,
                      std::size_t row_index) {
  const std::size_t n = a_row.size();
  if (n == 0) throw InputError("empty row");
  std::vector<Rational> thresholds(n);
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a_row[j] < 0 || a_row[j] > 1)
      throw InputError("row entry " + std::to_string(j + 1) + " = " +
                       to_exact_string(a_row[j]) + " lies outside [0, 1]");
    thresholds[j] = 1 - a_row[j];
    total += a_row[j];
  }
  const Rational& bi = b.value();
  if (total < bi)
    throw InfeasibleError("row " + std::to_string(row_index + 1) + " cannot reach " +
                          to_exact_string(bi) + ": its entries sum to " +
                          to_exact_string(total));

  RowMinimaxTrace trace;
  trace.row = row_index;

  // Records iterate u; returns its active set and the sum of a_j over it.
  auto record = [&](std::size_t k, Rational u) {
    RowStep step;
    step.k = k;
    step.active = active_set(thresholds, u);
    if (step.active.empty())
      throw InputError("empty active set in row " + std::to_string(row_index + 1) +
                       "; b must be positive");
    Rational a_sum = active_sum(a_row, step.active);
    // Every active term is unclamped: a_j + u - 1 >= 0.
    step.row_sum = a_sum + Rational(step.active.size()) * (u - 1);
    step.u = UnitScalar(std::move(u));
    trace.steps.push_back(std::move(step));
    return a_sum;
  };

  Rational a_sum = record(0, (bi - total) / Rational(n) + 1);
  if (trace.steps.back().row_sum < bi)
    throw InternalError("initial iterate is infeasible for row " + std::to_string(row_index + 1));

  if (trace.steps.back().row_sum == bi) {
    trace.stop = StopRule::TightSum;
  } else {
    for (std::size_t k = 1;; ++k) {
      if (k > n)
        throw InternalError("active-set iteration did not terminate within n steps");
      const auto previous = trace.steps.back().active;
      a_sum = record(k, (bi - a_sum) / Rational(previous.size()) + 1);
      const RowStep& cur = trace.steps.back();
      const bool stable = cur.active == previous;
      const bool tight = cur.row_sum == bi;
      if (stable != tight)
        throw InternalError("stopping rules disagree in row " + std::to_string(row_index + 1));
      if (stable) {
        trace.stop = StopRule::StableActiveSet;
        break;
      }
      if (!is_proper_subset(cur.active, previous) || cur.row_sum < bi)
        throw InternalError("active set failed to shrink in row " +
                            std::to_string(row_index + 1));
    }
  }
  trace.final_u = trace.steps.back().u;
  return RowSolution{trace.final_u, std::move(trace)};
}

MinimaxResult solve_minimax(const Problem& p) {
  if (!is_solvable(p)) throw InfeasibleError("the system has no solution");
  MinimaxResult result;
  result.per_row.reserve(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    result.per_row.push_back(solve_row(p.row(i), Requirement(p.b(i)), i));
    if (result.per_row.back().u > result.u_star) result.u_star = result.per_row.back().u;
  }
  result.optimal_value = result.u_star;
  result.greatest_optimal = Assignment::constant(p.cols(), result.u_star.value());
  result.unique = is_minimal(p, result.greatest_optimal).minimal;
  return result;
}

std::vector<Assignment> minimal_optimal_solutions(const Problem& p, std::size_t limit,
                                                  bool allow_large) {
  const MinimaxResult r = solve_minimax(p);
  return enumerate_minimals(p, r.greatest_optimal, limit, allow_large);
}

}  // namespace fri
