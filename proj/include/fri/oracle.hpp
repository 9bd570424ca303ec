#pragma once

// Brute-force references for tests and the CLI's verification mode. Row
// evaluation here is written out independently of the core module.

#include <cstdint>
#include <optional>
#include <vector>

#include "fri/core.hpp"

namespace fri::oracle {

inline constexpr std::uint64_t kDefaultGridCap = 10'000'000;

// The per-coordinate grid {0, step, 2 step, ..., 1} plus optional extra
// points in [0, 1].
class GridSpec {
 public:
  // Throws InputError unless 1/step is a positive integer and every extra
  // point lies in [0, 1].
  explicit GridSpec(Rational step, std::vector<Rational> extra_points = {});

  const Rational& step() const { return step_; }
  // Sorted, duplicate-free grid values.
  const std::vector<Rational>& values() const { return values_; }

 private:
  Rational step_;
  std::vector<Rational> values_;
};

// kDefaultGridCap, or the value of FRI_GRID_CAP when set to a positive
// integer.
std::uint64_t grid_cap_from_env();

// Sum_j max(a_ij + x_j - 1, 0) >= b_i for all i, evaluated from scratch.
bool satisfies(const Problem& p, const Assignment& x);

// Lazily walks the grid in lexicographic order and yields feasible points.
class FeasibleGridStream {
 public:
  // Throws ResourceError if the grid has more than `cap` points.
  FeasibleGridStream(Problem p, GridSpec grid, std::uint64_t cap = kDefaultGridCap);

  std::optional<Assignment> next();
  // Points examined so far.
  std::uint64_t visited() const { return visited_; }

 private:
  bool odometer_feasible() const;

  Problem problem_;
  GridSpec grid_;
  // Term tables indexed [(j * grid size + value index) * rows + i]. When
  // every entry shares a small common denominator the terms are scaled to
  // integers; otherwise the exact rationals are kept.
  bool scaled_ = false;
  std::vector<std::int64_t> int_terms_;
  std::vector<std::int64_t> int_b_;
  std::vector<Rational> terms_;
  std::vector<std::size_t> odometer_;
  bool done_ = false;
  std::uint64_t visited_ = 0;
};

FeasibleGridStream grid_feasible(const Problem& p, const GridSpec& g,
                                 std::uint64_t cap = kDefaultGridCap);

enum class ScanMode {
  Diagonal,  // constant vectors (t, ..., t) only
  Full,      // every grid point, minimum of max_j x_j over feasible ones
};

// Least grid value of max_j x_j over feasible grid points. Throws
// InfeasibleError if the system has no solution.
UnitScalar grid_minimax_value(const Problem& p, const GridSpec& g,
                              ScanMode mode = ScanMode::Diagonal,
                              std::uint64_t cap = kDefaultGridCap);

// Some feasible grid point y <= x, y != x, if one exists. Absence is not a
// proof of minimality. Throws PreconditionError if x is not a solution and
// ResourceError if the sub-grid below x exceeds `cap`.
std::optional<Assignment> falsify_minimality(const Problem& p, const Assignment& x,
                                             const GridSpec& g,
                                             std::uint64_t cap = kDefaultGridCap);

}  // namespace fri::oracle
