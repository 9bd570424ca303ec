#include <doctest.h>

#include "fri/minimax.hpp"
#include "fri/oracle.hpp"
#include "property_checks.hpp"

using namespace fri;
using namespace fri::testing;

namespace {

constexpr int kTrials = 300;

void run_trials(std::uint64_t seed, std::string (*check)(const Problem&, RandomSystems&)) {
  RandomSystems gen(seed);
  for (int t = 0; t < kTrials; ++t) {
    const Problem p = gen.solvable(4, 4);
    const std::string failure = check(p, gen);
    CAPTURE(t);
    REQUIRE_MESSAGE(failure.empty(), failure);
  }
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("solution set is an up-set") { run_trials(11, check_up_set); }
TEST_CASE("solution set is closed under join") { run_trials(12, check_join); }
TEST_CASE("segments between comparable solutions stay feasible") { run_trials(13, check_segment); }
TEST_CASE("minimality criteria agree") { run_trials(14, check_characterizations); }
TEST_CASE("reduction yields fixed minimal points") { run_trials(15, check_reduction); }
TEST_CASE("delta is antitone") { run_trials(16, check_monotonicity); }
TEST_CASE("projections are [delta, 1]") { run_trials(17, check_projection); }
TEST_CASE("coordinate replacement keeps feasibility") {
  run_trials(18, check_coordinate_replacement);
}

TEST_CASE("row solver matches a grid scan") {
  RandomSystems gen(21);
  for (int t = 0; t < kTrials; ++t) {
    const Problem p = gen.solvable(1, 6);
    const auto sol = solve_row(p.row(0), Requirement(p.b(0)));
    CAPTURE(render_problem(p));
    const auto& steps = sol.trace.steps;
    REQUIRE(steps.size() <= p.cols() + 1);
    for (std::size_t k = 1; k < steps.size(); ++k) {
      CHECK(steps[k].u.value() <= steps[k - 1].u.value());
      CHECK(steps[k].active.size() <= steps[k - 1].active.size());
    }
    const std::size_t n = p.cols();
    // u is the least constant level meeting the row.
    CHECK(oracle::satisfies(p, Assignment::constant(n, sol.u.value())));
    const mpz_class den = common_denominator(p) * static_cast<unsigned long>(n);
    const Rational below = sol.u.value() - Rational(mpz_class(1), den);
    if (below >= 0) CHECK_FALSE(oracle::satisfies(p, Assignment::constant(n, below)));
  }
}

TEST_CASE("minimax value bounds every solution") {
  RandomSystems gen(22);
  for (int t = 0; t < kTrials; ++t) {
    const Problem p = gen.solvable(4, 4);
    const auto r = solve_minimax(p);
    CAPTURE(render_problem(p));
    REQUIRE(is_solution(p, r.greatest_optimal));
    const Assignment x = gen.solution(p);
    CHECK(objective(x).value() >= r.u_star.value());
    const Assignment y = reduce_to_minimal(p, r.greatest_optimal, gen.permutation(p.cols()));
    CHECK(objective(y).value() == r.u_star.value());
    CHECK(r.unique == (delta_vector(p, r.greatest_optimal) == r.greatest_optimal));
  }
}

TEST_CASE("unique solution check matches a sweep of minimal points") {
  RandomSystems gen(23);
  for (int t = 0; t < kTrials; ++t) {
    const Problem p = gen.solvable(3, 3);
    const auto mins = enumerate_minimals(p, Assignment::ones(p.cols()), 100);
    const bool only_ones = mins.size() == 1 && mins[0] == Assignment::ones(p.cols());
    CAPTURE(render_problem(p));
    CHECK(unique_solution_check(p) == only_ones);
    const auto u = unique_minimal(p);
    if (u) CHECK(mins == std::vector<Assignment>{*u});
  }
}

TEST_CASE("render round-trip on random problems") {
  RandomSystems gen(24);
  for (int t = 0; t < kTrials; ++t) {
    const Problem p = gen.solvable(5, 5, 97);
    CHECK(parse_problem(render_problem(p)) == p);
    const Assignment x = gen.solution(p, 97);
    CHECK(parse_assignment(render_assignment(x)) == x);
  }
}

}
