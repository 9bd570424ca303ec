#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fri/core.hpp"

namespace fri {

// Columns j with x_j > 0, ascending.
struct Support {
  std::vector<std::size_t> indices;

  bool contains(std::size_t j) const;
  friend bool operator==(const Support&, const Support&) = default;
};

Support support(const Assignment& x);

// The closed interval [low, high] of values that coordinate j of a solution
// may take while the other coordinates stay fixed. high is always 1.
struct Interval {
  UnitScalar low;
  UnitScalar high = UnitScalar::one();

  bool contains(const Rational& t) const { return t >= low.value() && t <= high.value(); }
};

// Smallest t in [0, 1] such that x with x_j := t is still a solution.
// With R_i the row value of x without column j,
//   delta_j(x) = max(0, max over rows with b_i > R_i of (1 - a_ij + b_i - R_i)).
// Throws PreconditionError if x is not a solution.
UnitScalar delta(const Problem& p, const Assignment& x, std::size_t j);

// (delta_1(x), ..., delta_n(x)) in O(mn).
Assignment delta_vector(const Problem& p, const Assignment& x);

Interval f_interval(const Problem& p, const Assignment& x, std::size_t j);

struct MinimalityCertificate {
  bool minimal = false;
  // The first tight row with every supported term unclamped, if there is
  // one. Otherwise the first tight row, if any.
  std::optional<std::size_t> tight_row;
  // True when tight_row has every supported term unclamped. Sufficient for
  // minimality but not necessary: different columns may be held by
  // different rows.
  bool single_row = false;
  Support support;
  // j -> (a_ij + x_j - 1 > 0) at tight_row, for j in the support.
  std::map<std::size_t, bool> strict_flags;
  // j -> a tight row in which column j's term is unclamped. x is minimal
  // iff every supported column has one.
  std::map<std::size_t, std::size_t> column_witnesses;
  Assignment fixed_point_deltas;
};

// First tight row whose terms are unclamped on the whole support.
// Throws PreconditionError if x is not a solution.
std::optional<std::size_t> single_row_witness(const Problem& p, const Assignment& x);

// Decides minimality by tight rows: every supported column needs a tight row
// where its term is unclamped. Cross-checked against the fixed-point
// criterion x == delta_vector(x); a disagreement raises InternalError.
// Throws PreconditionError if x is not a solution.
MinimalityCertificate is_minimal(const Problem& p, const Assignment& x);

struct CoordinateCandidate {
  Assignment point;
  // True when the construction's sufficient conditions for minimality hold:
  // A has no zero entry and a_ij + y_j - 1 > 0 on every row.
  bool certified = false;
};

// y_j = max_i max(0, 1 + b_i - sum_t a_it), y_k = 1 elsewhere. Always a
// solution; minimal when certified. Throws InfeasibleError on an unsolvable
// system.
CoordinateCandidate single_coordinate_candidate(const Problem& p, std::size_t j);

// A rearrangement of 0..n-1.
class Permutation {
 public:
  // Throws InputError unless `order` contains each of 0..n-1 exactly once.
  explicit Permutation(std::vector<std::size_t> order);
  static Permutation identity(std::size_t n);
  // From 1-based indices, as written on the command line.
  static Permutation from_one_based(const std::vector<std::size_t>& order);

  std::size_t size() const { return order_.size(); }
  std::size_t operator[](std::size_t k) const { return order_[k]; }
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  std::vector<std::size_t> order_;
};

struct ReductionStep {
  std::size_t column;
  UnitScalar delta;
  Assignment after;
};

struct ReductionTrace {
  // (delta_1(1..1), ..., delta_n(1..1)).
  Assignment shortcut_candidate;
  bool shortcut_taken = false;
  std::vector<ReductionStep> steps;
  Assignment result;
};

// Sequential coordinate reduction: column perm[k] is replaced by its delta
// in the current vector. When the delta vector of all-ones is itself a
// solution (and below x) it is returned directly, being the unique minimal
// solution. Throws PreconditionError if x is not a solution.
ReductionTrace reduce_to_minimal_traced(const Problem& p, const Assignment& x,
                                        const Permutation& perm);
Assignment reduce_to_minimal(const Problem& p, const Assignment& x, const Permutation& perm);

// Columns above which a full permutation sweep needs explicit consent.
inline constexpr std::size_t kMaxSweepColumns = 8;

// Runs the reduction over permutations in lexicographic order until all n!
// are tried or `limit` distinct minimal solutions are found. The result is
// deduplicated and sorted lexicographically.
// Throws InputError if limit == 0, ResourceError if n > kMaxSweepColumns and
// allow_large is false.
std::vector<Assignment> enumerate_minimals(const Problem& p, const Assignment& x,
                                           std::size_t limit, bool allow_large = false);

// The unique minimal solution, if the system has one.
std::optional<Assignment> unique_minimal(const Problem& p);

}  // namespace fri
