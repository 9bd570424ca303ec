#include "fri/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "fri/errors.hpp"

namespace fri::oracle {
namespace {

// Product of sizes, or nullopt once it passes `cap`.
std::optional<std::uint64_t> bounded_product(const std::vector<std::size_t>& sizes,
                                             std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) return 0;
    if (total > cap / s) return std::nullopt;
    total *= s;
  }
  if (total > cap) return std::nullopt;
  return total;
}

[[noreturn]] void over_cap(std::uint64_t cap) {
  throw ResourceError("grid exceeds the cap of " + std::to_string(cap) + " points");
}

}  // namespace

GridSpec::GridSpec(Rational step, std::vector<Rational> extra_points) : step_(std::move(step)) {
  step_.canonicalize();
  if (sgn(step_) <= 0 || step_.get_num() != 1)
    throw InputError("grid step must be 1/k for a positive integer k, got " +
                     to_exact_string(step_));
  if (!step_.get_den().fits_ulong_p() || step_.get_den() > 100'000'000)
    throw ResourceError("grid step denominator too large");
  const unsigned long k = step_.get_den().get_ui();
  values_.reserve(k + 1 + extra_points.size());
  for (unsigned long t = 0; t <= k; ++t) values_.emplace_back(Rational(t, k));
  for (auto& v : values_) v.canonicalize();
  for (auto& v : extra_points) {
    if (v < 0 || v > 1)
      throw InputError("grid extra point " + to_exact_string(v) + " lies outside [0, 1]");
    values_.push_back(std::move(v));
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

std::uint64_t grid_cap_from_env() {
  const char* raw = std::getenv("FRI_GRID_CAP");
  if (!raw || !*raw) return kDefaultGridCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) return kDefaultGridCap;
  return v;
}

bool satisfies(const Problem& p, const Assignment& x) {
  if (x.size() != p.cols()) throw InputError("assignment width does not match the problem");
  Rational term;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      term = p.a(i, j) + x[j];
      term -= 1;
      if (term > 0) lhs += term;
    }
    if (lhs < p.b(i)) return false;
  }
  return true;
}

FeasibleGridStream::FeasibleGridStream(Problem p, GridSpec grid, std::uint64_t cap)
    : problem_(std::move(p)), grid_(std::move(grid)), odometer_(problem_.cols(), 0) {
  if (!bounded_product(std::vector<std::size_t>(problem_.cols(), grid_.values().size()), cap))
    over_cap(cap);
  const std::size_t m = problem_.rows(), n = problem_.cols();
  const auto& values = grid_.values();

  mpz_class den = 1;
  auto absorb = [&den](const Rational& v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) absorb(problem_.a(i, j));
    absorb(problem_.b(i));
  }
  for (const auto& v : values) absorb(v);
  // Sums of n terms, each at most den, must stay well inside int64.
  scaled_ = den < mpz_class(1) << 40 && n < (std::size_t{1} << 20);

  const std::size_t size = n * values.size() * m;
  if (scaled_) {
    int_terms_.resize(size);
    int_b_.resize(m);
  } else {
    terms_.resize(size);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t v = 0; v < values.size(); ++v) {
      for (std::size_t i = 0; i < m; ++i) {
        Rational t = problem_.a(i, j) + values[v] - 1;
        if (t < 0) t = 0;
        const std::size_t at = (j * values.size() + v) * m + i;
        if (scaled_) {
          int_terms_[at] = mpz_class(t * den).get_si();
        } else {
          terms_[at] = std::move(t);
        }
      }
    }
  }
  if (scaled_)
    for (std::size_t i = 0; i < m; ++i) int_b_[i] = mpz_class(problem_.b(i) * den).get_si();
}

bool FeasibleGridStream::odometer_feasible() const {
  const std::size_t m = problem_.rows(), k = grid_.values().size();
  for (std::size_t i = 0; i < m; ++i) {
    if (scaled_) {
      std::int64_t lhs = 0;
      for (std::size_t j = 0; j < odometer_.size(); ++j)
        lhs += int_terms_[(j * k + odometer_[j]) * m + i];
      if (lhs < int_b_[i]) return false;
    } else {
      Rational lhs = 0;
      for (std::size_t j = 0; j < odometer_.size(); ++j)
        lhs += terms_[(j * k + odometer_[j]) * m + i];
      if (lhs < problem_.b(i)) return false;
    }
  }
  return true;
}

std::optional<Assignment> FeasibleGridStream::next() {
  const auto& values = grid_.values();
  while (!done_) {
    const bool feasible = odometer_feasible();
    std::optional<Assignment> x;
    if (feasible) {
      std::vector<Rational> coords;
      coords.reserve(odometer_.size());
      for (std::size_t idx : odometer_) coords.push_back(values[idx]);
      x.emplace(std::move(coords));
    }
    ++visited_;

    // Advance, last coordinate fastest.
    std::size_t pos = odometer_.size();
    while (pos > 0) {
      --pos;
      if (++odometer_[pos] < values.size()) break;
      odometer_[pos] = 0;
      if (pos == 0) done_ = true;
    }
    if (x) return x;
  }
  return std::nullopt;
}

FeasibleGridStream grid_feasible(const Problem& p, const GridSpec& g, std::uint64_t cap) {
  return FeasibleGridStream(p, g, cap);
}

UnitScalar grid_minimax_value(const Problem& p, const GridSpec& g, ScanMode mode,
                              std::uint64_t cap) {
  if (!satisfies(p, Assignment::ones(p.cols())))
    throw InfeasibleError("the system has no solution");
  if (mode == ScanMode::Diagonal) {
    for (const auto& t : g.values())
      if (satisfies(p, Assignment::constant(p.cols(), t))) return UnitScalar(t);
    throw InternalError("all-ones is feasible but no grid diagonal point is");
  }
  FeasibleGridStream stream(p, g, cap);
  std::optional<Rational> best;
  while (auto x = stream.next()) {
    Rational z = *std::max_element(x->begin(), x->end());
    if (!best || z < *best) best = std::move(z);
  }
  if (!best) throw InternalError("all-ones is feasible but the grid scan found nothing");
  return UnitScalar(*best);
}

std::optional<Assignment> falsify_minimality(const Problem& p, const Assignment& x,
                                             const GridSpec& g, std::uint64_t cap) {
  if (!satisfies(p, x)) throw PreconditionError("the point is not a solution");
  // Candidate values per coordinate: grid values not above x_j.
  std::vector<std::vector<Rational>> choices(p.cols());
  std::vector<std::size_t> sizes(p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j) {
    for (const auto& v : g.values())
      if (v <= x[j]) choices[j].push_back(v);
    sizes[j] = choices[j].size();
  }
  const auto total = bounded_product(sizes, cap);
  if (!total) over_cap(cap);
  if (*total == 0) return std::nullopt;

  std::vector<std::size_t> odometer(p.cols(), 0);
  for (std::uint64_t visited = 0; visited < *total; ++visited) {
    std::vector<Rational> coords;
    coords.reserve(p.cols());
    for (std::size_t j = 0; j < p.cols(); ++j) coords.push_back(choices[j][odometer[j]]);
    Assignment y(std::move(coords));
    if (y != x && satisfies(p, y)) return y;
    for (std::size_t pos = p.cols(); pos-- > 0;) {
      if (++odometer[pos] < sizes[pos]) break;
      odometer[pos] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace fri::oracle
