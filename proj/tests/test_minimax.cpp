#include <doctest.h>

#include "fri/errors.hpp"
#include "fri/minimax.hpp"
#include "fri/oracle.hpp"
#include "test_support.hpp"

using namespace fri;
using namespace fri::testing;

namespace {

std::vector<Rational> row_of(const Problem& p, std::size_t i) {
  auto r = p.row(i);
  return {r.begin(), r.end()};
}

// Least t on the 1/den grid with sum_j max(a_j + t - 1, 0) >= b.
Rational scan_row(const std::vector<Rational>& a, const Rational& b, long den) {
  const Problem p({a}, {b});
  for (long k = 0; k <= den; ++k) {
    Rational t(k, den);
    t.canonicalize();
    if (oracle::satisfies(p, Assignment::constant(a.size(), t))) return t;
  }
  return Rational(2);
}

}  // namespace

TEST_SUITE("minimax") {

TEST_CASE("objective") {
  CHECK(objective(X({"0.2", "0.7", "0.5"})).value() == R("0.7"));
  CHECK(objective(X({"0"})).value() == 0);
  CHECK_THROWS_AS(objective(Assignment(std::vector<Rational>{})), InputError);
}

TEST_CASE("solve_row: single-row example trace") {
  const Problem ex4 = fixture("example4.json");
  const auto sol = solve_row(ex4.row(0), Requirement(ex4.b(0)));
  REQUIRE(sol.trace.steps.size() == 2);
  CHECK(sol.trace.steps[0].u.value() == Rational(17, 20));
  CHECK(sol.trace.steps[0].active == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(sol.trace.steps[0].row_sum == R("1.6"));
  CHECK(sol.trace.steps[1].u.value() == Rational(4, 5));
  CHECK(sol.trace.steps[1].active == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(sol.trace.steps[1].row_sum == R("1.4"));
  CHECK(sol.trace.stop == StopRule::StableActiveSet);
  CHECK(sol.u.value() == Rational(4, 5));
  CHECK(scan_row(row_of(ex4, 0), ex4.b(0), 100) == Rational(4, 5));
}

TEST_CASE("solve_row: three-user rows stop on a tight first sum") {
  const Problem ex5 = fixture("example5.json");
  const std::vector<Rational> expected{Rational(4, 5), Rational(13, 15), Rational(5, 6)};
  for (std::size_t i = 0; i < 3; ++i) {
    CAPTURE(i);
    const auto sol = solve_row(ex5.row(i), Requirement(ex5.b(i)), i);
    CHECK(sol.u.value() == expected[i]);
    CHECK(sol.trace.row == i);
    CHECK(sol.trace.steps.size() == 1);
    CHECK(sol.trace.stop == StopRule::TightSum);
    CHECK(scan_row(row_of(ex5, i), ex5.b(i), 30) == expected[i]);
  }
}

TEST_CASE("solve_row: five-user rows") {
  const Problem ex6 = fixture("example6.json");
  const std::vector<Rational> expected{Rational(5, 6), Rational(7, 10), Rational(4, 5),
                                       Rational(19, 25)};
  for (std::size_t i = 0; i < 4; ++i) {
    CAPTURE(i);
    const auto sol = solve_row(ex6.row(i), Requirement(ex6.b(i)), i);
    CHECK(sol.u.value() == expected[i]);
    CHECK(scan_row(row_of(ex6, i), ex6.b(i), 150) == expected[i]);
    CHECK(sol.trace.steps.size() <= 6);
  }
}

TEST_CASE("solve_row: boundaries and errors") {
  // Requirement equal to the row sum: only all-ones works.
  const std::vector<Rational> a{R("0.5"), R("0.5")};
  CHECK(solve_row(a, Requirement(R("1"))).u.value() == 1);
  // A single column.
  const std::vector<Rational> one{R("0.7")};
  CHECK(solve_row(one, Requirement(R("0.2"))).u.value() == R("0.5"));
  CHECK_THROWS_AS(solve_row(a, Requirement(R("1.1"))), InfeasibleError);
  const std::vector<Rational> bad{R("1.2")};
  CHECK_THROWS_AS(solve_row(bad, Requirement(R("0.1"))), InputError);
  const std::vector<Rational> empty;
  CHECK_THROWS_AS(solve_row(empty, Requirement(R("0.1"))), InputError);
  CHECK_THROWS_AS(Requirement(R("0")), InputError);
}

TEST_CASE("solve_row: zero entries never enter the active set below 1") {
  const std::vector<Rational> a{R("0"), R("0"), R("1")};
  const auto sol = solve_row(a, Requirement(R("0.3")));
  CHECK(sol.u.value() == R("0.3"));
  CHECK(sol.trace.steps.back().active == std::vector<std::size_t>{2});
}

TEST_CASE("solve_minimax: three users") {
  const Problem ex5 = fixture("example5.json");
  const auto r = solve_minimax(ex5);
  CHECK(r.u_star.value() == Rational(13, 15));
  CHECK(r.optimal_value.value() == Rational(13, 15));
  CHECK(r.greatest_optimal == Assignment::constant(3, Rational(13, 15)));
  CHECK(r.unique);
  CHECK(oracle::grid_minimax_value(ex5, oracle::GridSpec(Rational(1, 30))).value() ==
        Rational(13, 15));
}

TEST_CASE("solve_minimax: five users") {
  const Problem ex6 = fixture("example6.json");
  const auto r = solve_minimax(ex6);
  REQUIRE(r.per_row.size() == 4);
  CHECK(r.u_star.value() == Rational(5, 6));
  CHECK(r.greatest_optimal == Assignment::constant(5, Rational(5, 6)));
  CHECK_FALSE(r.unique);
  CHECK(is_solution(ex6, r.greatest_optimal));
  CHECK(oracle::grid_minimax_value(ex6, oracle::GridSpec(Rational(1, 150))).value() ==
        Rational(5, 6));
}

TEST_CASE("solve_minimax: infeasible") {
  CHECK_THROWS_AS(solve_minimax(fixture("infeasible.json")), InfeasibleError);
}

TEST_CASE("minimal_optimal_solutions") {
  const Problem ex7 = fixture("example7.json");
  const auto found = minimal_optimal_solutions(ex7, 1000);
  const Rational u(5, 6);
  REQUIRE(found.size() == 2);
  const Assignment first({Rational(7, 15), u, u, u, u});
  const Assignment second({u, u, u, Rational(2, 3), u});
  CHECK(found[0] == first);
  CHECK(found[1] == second);
  for (const auto& x : found) {
    CHECK(objective(x).value() == u);
    CHECK(is_minimal(ex7, x).minimal);
    CHECK_FALSE(oracle::falsify_minimality(ex7, x, oracle::GridSpec(Rational(1, 10), {Rational(7, 15), Rational(2, 3), u})).has_value());
  }
  CHECK(minimal_optimal_solutions(ex7, 1).size() == 1);

  const Problem ex5 = fixture("example5.json");
  CHECK(minimal_optimal_solutions(ex5, 10) ==
        std::vector<Assignment>{Assignment::constant(3, Rational(13, 15))});
}

}
