#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fri/rational.hpp"

namespace fri {

// A candidate point x in [0,1]^n.
class Assignment {
 public:
  Assignment() = default;
  // Throws InputError if a coordinate lies outside [0, 1].
  explicit Assignment(std::vector<Rational> coords);

  static Assignment constant(std::size_t n, const Rational& value);
  static Assignment ones(std::size_t n) { return constant(n, Rational(1)); }

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const Rational& operator[](std::size_t j) const { return coords_[j]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  // Copy with coordinate j replaced; `value` must lie in [0, 1].
  Assignment with(std::size_t j, Rational value) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  // Lexicographic by coordinate.
  friend std::strong_ordering operator<=>(const Assignment& lhs, const Assignment& rhs);

 private:
  std::vector<Rational> coords_;
};

// x <= y coordinatewise. Sizes must match.
bool dominated_by(const Assignment& x, const Assignment& y);

// The pair (A, b) of the system  sum_j T_L(a_ij, x_j) >= b_i  for all rows i.
// Entries of A lie in [0, 1]; every b_i is strictly positive.
class Problem {
 public:
  // Throws InputError (with a 1-based row/column location) on an empty or
  // ragged matrix, an entry outside [0, 1], a non-positive b_i, or a length
  // mismatch between A and b.
  Problem(const std::vector<std::vector<Rational>>& a, std::vector<Rational> b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& a(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const Rational& b(std::size_t i) const { return b_[i]; }
  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(a_).subspan(i * cols_, cols_);
  }
  std::span<const Rational> requirements() const { return b_; }
  // sum_j a_ij
  Rational row_sum(std::size_t i) const;

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
  std::vector<Rational> b_;
};

// Lukasiewicz t-norm: max(a + x - 1, 0).
UnitScalar luk(const UnitScalar& a, const UnitScalar& x);

namespace detail {
// Unchecked form of luk for inputs already known to lie in [0, 1].
inline Rational luk_term(const Rational& a, const Rational& x) {
  Rational t = a + x - 1;
  return sgn(t) > 0 ? t : Rational(0);
}
// Throws InputError unless x.size() == p.cols().
void require_width(const Problem& p, const Assignment& x);
void require_column(const Problem& p, std::size_t j);
}  // namespace detail

// sum_j T_L(a_ij, x_j). Row index is 0-based.
Rational row_value(const Problem& p, std::size_t i, const Assignment& x);

bool is_solution(const Problem& p, const Assignment& x);

// S(A, b) is non-empty iff every row sum of A reaches b_i.
bool is_solvable(const Problem& p);

// All-ones. Throws InfeasibleError if the system has no solution.
Assignment greatest_solution(const Problem& p);

// Coordinatewise maximum.
Assignment join(const Assignment& x, const Assignment& y);

// True iff all-ones is the only solution. A tight row with no zero entry
// decides it directly; otherwise the system has a unique solution exactly
// when delta_j(all-ones) = 1 for every column.
// Throws InfeasibleError if the system has no solution.
bool unique_solution_check(const Problem& p);

}  // namespace fri
