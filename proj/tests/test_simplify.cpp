#include "doctest.h"

#include <set>

#include "qf/eqgen.hpp"
#include "qf/errors.hpp"
#include "qf/parser.hpp"
#include "qf/simplify.hpp"

using namespace qf;

namespace {

std::string free_names(const ReducedSystem& red) {
    std::string s;
    for (auto v : red.free_order) {
        if (!s.empty()) s += " ";
        s += red.residual.variables[v].name;
    }
    return s;
}

}  // namespace

TEST_CASE("constant propagation and sum rules") {
    // x + y = 2 forces both to one; u + v = 0 forces both to zero
    ReducedSystem red = reduce(parse_equations(
        "vars x1 y1 u1 v1\n"
        "x1 + y1 - 2 = 0\n"
        "u1 + v1 = 0\n"));
    CHECK(red.fixed.size() == 4);
    CHECK(red.free_order.empty());
    CHECK(red.residual.equations.empty());
    CHECK(red.fixed.at(0) == 1);
    CHECK(red.fixed.at(1) == 1);
    CHECK(red.fixed.at(2) == 0);
    CHECK(red.fixed.at(3) == 0);
}

TEST_CASE("complement substitution across families") {
    ReducedSystem red = reduce(parse_equations("vars x1 y1\nx1 + y1 - 1 = 0\n"));
    CHECK(red.fixed.empty());
    CHECK(red.substitutions.size() == 1);
    CHECK(red.free_order.size() == 1);
    CHECK(red.residual.equations.empty());
    // x1 (earlier name) is expressed through y1
    CHECK(free_names(red) == "y1");
    std::map<std::uint32_t, int> fv{{red.free_order[0], 1}};
    Assignment lifted = red.lift(fv);
    CHECK(lifted[0] == 0);
    CHECK(lifted[1] == 1);
}

TEST_CASE("same-family relation stays in the residual") {
    ReducedSystem red = reduce(parse_equations("vars q1 q2\nq1 + q2 - 1 = 0\n"));
    CHECK(red.substitutions.empty());
    CHECK(red.free_order.size() == 2);
    REQUIRE(red.residual.equations.size() == 1);
    CHECK(residual_solutions(red).size() == 2);
}

TEST_CASE("infeasible systems are rejected") {
    CHECK_THROWS_AS(reduce(parse_equations("vars x1\nx1 + 1 = 0\n")), InfeasibleError);
    CHECK_THROWS_AS(reduce(parse_equations("vars x1 y1\nx1 + y1 - 3 = 0\n")),
                    InfeasibleError);
    // 33 = 3 * 11 has no pair of 3-bit factors even though 33 is in range
    CHECK_THROWS_AS(reduce(generate_biprime_system(33, 1, 1)), InfeasibleError);
}

TEST_CASE("175 reduction: affine elimination") {
    ReducedSystem red = reduce(parse_equations(
        "vars p1 q1 r1\n"
        "layout 175 p=1 q=1 r=1\n"
        "p1 + q1 + r1 - 1 = 0\n"
        "p1*q1 + q1*r1 + p1*r1 = 0\n"));
    CHECK(free_names(red) == "p1 q1");
    REQUIRE(red.substitutions.size() == 1);
    // r1 = 1 - p1 - q1
    std::uint32_t r1 = 2;
    REQUIRE(red.substitutions.count(r1));
    BinaryPolynomial body = red.substitutions.at(r1);
    CHECK(body.evaluate({0, 0, 0}) == 1);
    CHECK(body.evaluate({1, 0, 0}) == 0);
    CHECK(body.evaluate({0, 1, 0}) == 0);
    // residual collapses to the single product constraint
    REQUIRE(red.residual.equations.size() == 1);
    BinaryPolynomial expect;
    expect.add_term({0, 1}, 1);
    CHECK(red.residual.equations[0] == expect);
    CHECK(residual_solutions(red).size() == 3);
}

TEST_CASE("143 reduction matches the known form") {
    EquationSystem sys = generate_biprime_system(143, 2, 2);
    ReducedSystem red = reduce(sys);
    CHECK(free_names(red) == "q1 q2");
    CHECK(red.substitutions.size() == 2);  // p1, p2 are complements
    CHECK(red.fixed.size() == sys.variables.size() - 4);
    REQUIRE(red.residual.equations.size() == 1);
    CHECK(residual_solutions(red).size() == 2);
    CHECK(verify_equivalence(sys, red));
}

TEST_CASE("966887 reduction: pairwise parity residual") {
    EquationSystem sys = generate_biprime_system(966887, 8, 8);
    ReducedSystem red = reduce(sys);
    CHECK(free_names(red) == "q1 q2 q3 q6");
    CHECK(red.residual.equations.size() == 6);  // all pairs constrained
    auto sols = residual_solutions(red);
    REQUIRE(sols.size() == 2);
    std::set<std::vector<int>> got(sols.begin(), sols.end());
    CHECK(got.count({0, 1, 1, 1}));
    CHECK(got.count({1, 0, 0, 0}));
    CHECK(verify_equivalence(sys, red));
}

TEST_CASE("solver agreement on small systems") {
    EquationSystem sys = generate_biprime_system(143, 2, 2);
    auto brute = brute_force_solutions(sys);
    auto backtrack = solve_system(sys);
    CHECK(std::set<Assignment>(brute.begin(), brute.end()) ==
          std::set<Assignment>(backtrack.begin(), backtrack.end()));
}

TEST_CASE("equivalence across a small semiprime sweep") {
    // full sweep lives in the acceptance suite; spot-check the small end here
    for (std::uint64_t n : {15, 21, 33, 35, 49, 77, 91, 143, 187, 221}) {
        for (auto [m, nn] : layout_candidates(n)) {
            try {
                EquationSystem sys = generate_biprime_system(n, m, nn);
                ReducedSystem red = reduce(sys);
                CHECK(verify_equivalence(sys, red));
            } catch (const InfeasibleError&) {
                // rejected layouts are fine as long as nothing slips through
            }
        }
    }
}
