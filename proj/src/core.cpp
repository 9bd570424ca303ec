#include "fri/core.hpp"

#include <string>
#include <utility>

#include "fri/errors.hpp"
#include "fri/minimality.hpp"

namespace fri {
namespace {

void check_unit(Rational& v, const char* what, std::size_t index) {
  v.canonicalize();
  if (v < 0 || v > 1)
    throw InputError(std::string(what) + " " + std::to_string(index + 1) + " = " +
                     to_exact_string(v) + " lies outside [0, 1]");
}

}  // namespace

Assignment::Assignment(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (std::size_t j = 0; j < coords_.size(); ++j) check_unit(coords_[j], "coordinate", j);
}

Assignment Assignment::constant(std::size_t n, const Rational& value) {
  return Assignment(std::vector<Rational>(n, value));
}

Assignment Assignment::with(std::size_t j, Rational value) const {
  if (j >= coords_.size())
    throw InputError("coordinate index " + std::to_string(j + 1) + " out of range");
  check_unit(value, "coordinate", j);
  Assignment copy = *this;
  copy.coords_[j] = std::move(value);
  return copy;
}

std::strong_ordering operator<=>(const Assignment& lhs, const Assignment& rhs) {
  const std::size_t common = std::min(lhs.size(), rhs.size());
  for (std::size_t j = 0; j < common; ++j) {
    if (auto c = compare(lhs[j], rhs[j]); c != 0) return c;
  }
  return lhs.size() <=> rhs.size();
}

bool dominated_by(const Assignment& x, const Assignment& y) {
  if (x.size() != y.size())
    throw InputError("dimension mismatch: " + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] > y[j]) return false;
  return true;
}

Problem::Problem(const std::vector<std::vector<Rational>>& a, std::vector<Rational> b)
    : b_(std::move(b)) {
  if (a.empty()) throw InputError("matrix A has no rows");
  rows_ = a.size();
  cols_ = a.front().size();
  if (cols_ == 0) throw InputError("matrix A has no columns");
  if (b_.size() != rows_)
    throw InputError("b has length " + std::to_string(b_.size()) + " but A has " +
                     std::to_string(rows_) + " rows");
  a_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (a[i].size() != cols_)
      throw InputError("row " + std::to_string(i + 1) + " has " + std::to_string(a[i].size()) +
                       " entries, expected " + std::to_string(cols_));
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational v = a[i][j];
      v.canonicalize();
      if (v < 0 || v > 1)
        throw InputError("A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                         "] = " + to_exact_string(v) + " lies outside [0, 1]");
      a_.push_back(std::move(v));
    }
    b_[i].canonicalize();
    if (b_[i] <= 0)
      throw InputError("b[" + std::to_string(i + 1) + "] = " + to_exact_string(b_[i]) +
                       " must be positive");
  }
}

Rational Problem::row_sum(std::size_t i) const {
  Rational sum = 0;
  for (const auto& v : row(i)) sum += v;
  return sum;
}

UnitScalar luk(const UnitScalar& a, const UnitScalar& x) {
  return UnitScalar(detail::luk_term(a.value(), x.value()));
}

namespace detail {

void require_width(const Problem& p, const Assignment& x) {
  if (x.size() != p.cols())
    throw InputError("assignment has " + std::to_string(x.size()) +
                     " coordinates, problem has " + std::to_string(p.cols()) + " columns");
}

void require_column(const Problem& p, std::size_t j) {
  if (j >= p.cols())
    throw InputError("column index " + std::to_string(j + 1) + " out of range 1.." +
                     std::to_string(p.cols()));
}

}  // namespace detail

Rational row_value(const Problem& p, std::size_t i, const Assignment& x) {
  detail::require_width(p, x);
  if (i >= p.rows())
    throw InputError("row index " + std::to_string(i + 1) + " out of range 1.." +
                     std::to_string(p.rows()));
  Rational sum = 0, term;
  const auto row = p.row(i);
  for (std::size_t j = 0; j < row.size(); ++j) {
    term = row[j];
    term += x[j];
    term -= 1;
    if (sgn(term) > 0) sum += term;
  }
  return sum;
}

bool is_solution(const Problem& p, const Assignment& x) {
  detail::require_width(p, x);
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (row_value(p, i, x) < p.b(i)) return false;
  return true;
}

bool is_solvable(const Problem& p) {
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (p.row_sum(i) < p.b(i)) return false;
  return true;
}

Assignment greatest_solution(const Problem& p) {
  if (!is_solvable(p)) throw InfeasibleError("the system has no solution");
  return Assignment::ones(p.cols());
}

Assignment join(const Assignment& x, const Assignment& y) {
  if (x.size() != y.size())
    throw InputError("dimension mismatch: " + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  std::vector<Rational> out;
  out.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out.push_back(x[j] >= y[j] ? x[j] : y[j]);
  return Assignment(std::move(out));
}

bool unique_solution_check(const Problem& p) {
  if (!is_solvable(p)) throw InfeasibleError("the system has no solution");
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (p.row_sum(i) != p.b(i)) continue;
    bool all_positive = true;
    for (const auto& v : p.row(i)) all_positive = all_positive && sgn(v) > 0;
    if (all_positive) return true;
  }
  // Every solution's j-th coordinate ranges over [delta_j(1), 1].
  const Assignment deltas = delta_vector(p, Assignment::ones(p.cols()));
  for (const auto& d : deltas)
    if (d != 1) return false;
  return true;
}

}  // namespace fri
