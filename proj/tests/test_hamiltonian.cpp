#include "doctest.h"

#include <set>

#include "qf/eqgen.hpp"
#include "qf/hamiltonian.hpp"
#include "qf/parser.hpp"
#include "qf/simplify.hpp"

using namespace qf;

namespace {

ZHamiltonian build_for(const EquationSystem& sys) {
    return build_hamiltonian(reduce(sys));
}

}  // namespace

TEST_CASE("143 Hamiltonian coefficients") {
    ZHamiltonian h = build_for(generate_biprime_system(143, 2, 2));
    CHECK(h.n_qubits == 2);
    REQUIRE(h.terms.size() == 2);
    CHECK(h.terms.at(0b00) == Dyadic(1, 1));  // identity: 1/2
    CHECK(h.terms.at(0b11) == Dyadic(1, 1));  // Z1 Z2: +1/2
    CHECK(h.str() == "1/2 + 1/2 Z1*Z2");
}

TEST_CASE("4088459 Hamiltonian coefficients") {
    ZHamiltonian h = build_for(generate_biprime_system(4088459, 9, 9));
    REQUIRE(h.terms.size() == 2);
    CHECK(h.terms.at(0b00) == Dyadic(1, 1));
    CHECK(h.terms.at(0b11) == Dyadic(-1, 1));  // opposite parity of 143
}

TEST_CASE("966887 Hamiltonian: six pair couplings") {
    ZHamiltonian h = build_for(generate_biprime_system(966887, 8, 8));
    CHECK(h.n_qubits == 4);
    REQUIRE(h.terms.size() == 7);
    const Dyadic half(1, 1);
    CHECK(h.terms.at(0b0000) == Dyadic(3));
    CHECK(h.terms.at(0b0011) == half);    // Z1 Z2
    CHECK(h.terms.at(0b0101) == half);    // Z1 Z3
    CHECK(h.terms.at(0b1001) == half);    // Z1 Z4
    CHECK(h.terms.at(0b0110) == -half);   // Z2 Z3
    CHECK(h.terms.at(0b1010) == -half);   // Z2 Z4
    CHECK(h.terms.at(0b1100) == -half);   // Z3 Z4
}

TEST_CASE("175 Hamiltonian: projector onto p1 q1") {
    ZHamiltonian h = build_for(parse_equations(
        "vars p1 q1 r1\n"
        "layout 175 p=1 q=1 r=1\n"
        "p1 + q1 + r1 - 1 = 0\n"
        "p1*q1 + q1*r1 + p1*r1 = 0\n"));
    const Dyadic quarter(1, 2);
    REQUIRE(h.terms.size() == 4);
    CHECK(h.terms.at(0b00) == quarter);
    CHECK(h.terms.at(0b01) == -quarter);
    CHECK(h.terms.at(0b10) == -quarter);
    CHECK(h.terms.at(0b11) == quarter);
}

TEST_CASE("eigenvalues equal the squared residuals") {
    EquationSystem sys = generate_biprime_system(966887, 8, 8);
    ReducedSystem red = reduce(sys);
    ZHamiltonian h = build_hamiltonian(red);
    const int n = h.n_qubits;
    Assignment asg(red.residual.variables.size(), 0);
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
        for (int i = 1; i <= n; ++i)
            asg[red.free_order[i - 1]] = static_cast<int>((b >> (n - i)) & 1);
        std::int64_t expect = 0;
        for (const auto& eq : red.residual.equations) {
            std::int64_t v = eq.evaluate(asg);
            expect += v * v;
        }
        CHECK(h.eigenvalue(b) == Dyadic(expect));
    }
}

TEST_CASE("ground states match residual solutions") {
    for (std::uint64_t n : {143ull, 323ull, 899ull, 966887ull}) {
        auto cands = layout_candidates(n);
        REQUIRE(!cands.empty());
        EquationSystem sys =
            generate_biprime_system(n, cands.front().first, cands.front().second);
        ReducedSystem red = reduce(sys);
        ZHamiltonian h = build_hamiltonian(red);
        std::set<std::uint64_t> grounds;
        for (auto g : ground_states(h)) grounds.insert(g);
        std::set<std::uint64_t> expect;
        for (const auto& sol : residual_solutions(red)) {
            std::uint64_t b = 0;
            for (std::size_t i = 0; i < sol.size(); ++i)
                if (sol[i]) b |= std::uint64_t(1) << (sol.size() - 1 - i);
            expect.insert(b);
        }
        CHECK(grounds == expect);
    }
}

TEST_CASE("spectrum classes for 966887") {
    ZHamiltonian h = build_for(generate_biprime_system(966887, 8, 8));
    auto classes = spectrum_classes(h);
    REQUIRE(classes.size() == 3);
    CHECK(classes.at(Dyadic(0)) == 2);
    CHECK(classes.at(Dyadic(3)) == 8);
    CHECK(classes.at(Dyadic(4)) == 6);
}

TEST_CASE("decode_factors verifies the product") {
    ReducedSystem red = reduce(generate_biprime_system(143, 2, 2));
    ZHamiltonian h = build_hamiltonian(red);
    auto grounds = ground_states(h);
    REQUIRE(grounds.size() == 2);
    for (auto g : grounds) {
        auto fs = decode_factors(red, g);
        REQUIRE(fs.size() == 2);
        CHECK(fs[0] * fs[1] == 143);
    }
    // a non-ground state (|00> here) does not decode to a valid factorization
    CHECK_THROWS_AS(decode_factors(red, 0b00), std::logic_error);
}
