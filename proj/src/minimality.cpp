#include "fri/minimality.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "fri/errors.hpp"

namespace fri {
namespace {

// Row values of x, after checking that x solves the system.
std::vector<Rational> solution_row_values(const Problem& p, const Assignment& x) {
  detail::require_width(p, x);
  std::vector<Rational> values(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    values[i] = row_value(p, i, x);
    if (values[i] < p.b(i))
      throw PreconditionError("the point is not a solution: row " + std::to_string(i + 1) +
                              " evaluates to " + to_exact_string(values[i]) + " < " +
                              to_exact_string(p.b(i)));
  }
  return values;
}

Rational delta_from_row_values(const Problem& p, const Assignment& x,
                               const std::vector<Rational>& values, std::size_t j) {
  Rational best = 0;
  Rational gap;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    // gap = b_i - R_i, where R_i excludes column j.
    gap = p.b(i) - (values[i] - detail::luk_term(p.a(i, j), x[j]));
    if (sgn(gap) <= 0) continue;
    Rational need = 1 - p.a(i, j) + gap;
    if (need > best) best = std::move(need);
  }
  return best;
}

void require_solvable(const Problem& p) {
  if (!is_solvable(p)) throw InfeasibleError("the system has no solution");
}

struct Reducer {
  const Problem& p;
  std::optional<Assignment> shortcut;  // set when delta(1..1) is a usable answer

  Assignment run(Assignment x, const Permutation& perm,
                 std::vector<ReductionStep>* steps = nullptr) const {
    if (shortcut) return *shortcut;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const std::size_t j = perm[k];
      const auto values = solution_row_values(p, x);
      Rational d = delta_from_row_values(p, x, values, j);
      x = x.with(j, d);
      if (steps) steps->push_back({j, UnitScalar(std::move(d)), x});
    }
    return x;
  }
};

Reducer make_reducer(const Problem& p, const Assignment& x, Assignment* candidate = nullptr) {
  solution_row_values(p, x);
  Assignment tilde = delta_vector(p, Assignment::ones(p.cols()));
  Reducer r{p, std::nullopt};
  if (is_solution(p, tilde) && dominated_by(tilde, x)) r.shortcut = tilde;
  if (candidate) *candidate = std::move(tilde);
  return r;
}

void require_perm_width(const Problem& p, const Permutation& perm) {
  if (perm.size() != p.cols())
    throw InputError("permutation has " + std::to_string(perm.size()) +
                     " entries, problem has " + std::to_string(p.cols()) + " columns");
}

}  // namespace

bool Support::contains(std::size_t j) const {
  return std::binary_search(indices.begin(), indices.end(), j);
}

Support support(const Assignment& x) {
  Support s;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (sgn(x[j]) > 0) s.indices.push_back(j);
  return s;
}

UnitScalar delta(const Problem& p, const Assignment& x, std::size_t j) {
  detail::require_column(p, j);
  const auto values = solution_row_values(p, x);
  return UnitScalar(delta_from_row_values(p, x, values, j));
}

Assignment delta_vector(const Problem& p, const Assignment& x) {
  const auto values = solution_row_values(p, x);
  std::vector<Rational> out;
  out.reserve(p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j)
    out.push_back(delta_from_row_values(p, x, values, j));
  return Assignment(std::move(out));
}

Interval f_interval(const Problem& p, const Assignment& x, std::size_t j) {
  return Interval{delta(p, x, j), UnitScalar::one()};
}

std::optional<std::size_t> single_row_witness(const Problem& p, const Assignment& x) {
  const auto values = solution_row_values(p, x);
  const Support supp = support(x);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (values[i] != p.b(i)) continue;
    if (std::all_of(supp.indices.begin(), supp.indices.end(),
                    [&](std::size_t j) { return sgn(p.a(i, j) + x[j] - 1) > 0; }))
      return i;
  }
  return std::nullopt;
}

MinimalityCertificate is_minimal(const Problem& p, const Assignment& x) {
  const auto values = solution_row_values(p, x);
  MinimalityCertificate cert;
  cert.support = support(x);

  auto unclamped = [&](std::size_t i, std::size_t j) {
    return sgn(p.a(i, j) + x[j] - 1) > 0;
  };
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (values[i] == p.b(i)) tight.push_back(i);

  bool every_column = true;
  for (std::size_t j : cert.support.indices) {
    auto it = std::find_if(tight.begin(), tight.end(),
                           [&](std::size_t i) { return unclamped(i, j); });
    if (it == tight.end()) {
      every_column = false;
      continue;
    }
    cert.column_witnesses[j] = *it;
  }
  cert.minimal = every_column;

  cert.single_row = single_row_witness(p, x).has_value();
  if (cert.single_row) {
    cert.tight_row = single_row_witness(p, x);
  } else if (!tight.empty()) {
    cert.tight_row = tight.front();
  }
  if (cert.tight_row) {
    for (std::size_t j : cert.support.indices) cert.strict_flags[j] = unclamped(*cert.tight_row, j);
  }

  cert.fixed_point_deltas = delta_vector(p, x);
  const bool fixed_point = cert.fixed_point_deltas == x;
  if (fixed_point != cert.minimal)
    throw InternalError("tight-row and fixed-point minimality criteria disagree");
  if (cert.single_row && !cert.minimal)
    throw InternalError("single tight row witness on a non-minimal solution");
  return cert;
}

CoordinateCandidate single_coordinate_candidate(const Problem& p, std::size_t j) {
  require_solvable(p);
  detail::require_column(p, j);
  Rational yj = 0;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Rational v = 1 + p.b(i) - p.row_sum(i);
    if (v > yj) yj = std::move(v);
  }
  CoordinateCandidate out{Assignment::ones(p.cols()).with(j, yj), true};
  for (std::size_t i = 0; i < p.rows() && out.certified; ++i) {
    if (sgn(p.a(i, j) + yj - 1) <= 0) out.certified = false;
    for (const auto& v : p.row(i))
      if (sgn(v) == 0) out.certified = false;
  }
  return out;
}

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t j : order_) {
    if (j >= order_.size() || seen[j])
      throw InputError("not a permutation of 1.." + std::to_string(order_.size()));
    seen[j] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Permutation(std::move(order));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(order.size());
  for (std::size_t j : order) {
    if (j == 0) throw InputError("permutation entries are 1-based");
    zero_based.push_back(j - 1);
  }
  return Permutation(std::move(zero_based));
}

ReductionTrace reduce_to_minimal_traced(const Problem& p, const Assignment& x,
                                        const Permutation& perm) {
  require_perm_width(p, perm);
  ReductionTrace trace;
  const Reducer reducer = make_reducer(p, x, &trace.shortcut_candidate);
  trace.shortcut_taken = reducer.shortcut.has_value();
  trace.result = reducer.run(x, perm, &trace.steps);
  return trace;
}

Assignment reduce_to_minimal(const Problem& p, const Assignment& x, const Permutation& perm) {
  require_perm_width(p, perm);
  return make_reducer(p, x).run(x, perm);
}

std::vector<Assignment> enumerate_minimals(const Problem& p, const Assignment& x,
                                           std::size_t limit, bool allow_large) {
  if (limit == 0) throw InputError("limit must be positive");
  detail::require_width(p, x);
  if (p.cols() > kMaxSweepColumns && !allow_large)
    throw ResourceError("permutation sweep over " + std::to_string(p.cols()) +
                        " columns refused; pass the large-sweep override");
  const Reducer reducer = make_reducer(p, x);
  if (reducer.shortcut) return {*reducer.shortcut};

  std::set<Assignment> found;
  std::vector<std::size_t> order(p.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    found.insert(reducer.run(x, Permutation(order)));
  } while (found.size() < limit && std::next_permutation(order.begin(), order.end()));
  return {found.begin(), found.end()};
}

std::optional<Assignment> unique_minimal(const Problem& p) {
  require_solvable(p);
  Assignment v = delta_vector(p, Assignment::ones(p.cols()));
  if (is_solution(p, v)) return v;
  return std::nullopt;
}

}  // namespace fri
