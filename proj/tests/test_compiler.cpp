#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qf/compiler.hpp"
#include "qf/eqgen.hpp"
#include "qf/searchplan.hpp"
#include "qf/simplify.hpp"
#include "qf/simulator.hpp"

using namespace qf;

namespace {

/// Columns of the circuit's unitary, from basis-state inputs.
std::vector<std::vector<Amplitude>> unitary_of(const Circuit& c) {
    const std::uint64_t dim = std::uint64_t(1) << c.n_qubits;
    std::vector<std::vector<Amplitude>> cols(dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
        StateVector sv = StateVector::zero(c.n_qubits);
        sv.amps[0] = 0;
        sv.amps[b] = 1;
        sv.apply(c);
        cols[b] = sv.amps;
    }
    return cols;
}

ZHamiltonian random_hamiltonian(std::mt19937_64& rng, int n_qubits) {
    ZHamiltonian h;
    h.n_qubits = n_qubits;
    std::uniform_int_distribution<int> num(-8, 8), den(0, 3);
    std::uniform_int_distribution<std::uint64_t> mask(0, (1ull << n_qubits) - 1);
    const int n_terms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < n_terms; ++t) {
        Dyadic c(num(rng), den(rng));
        if (c.is_zero()) continue;
        h.terms[mask(rng)] = c;
    }
    return h;
}

}  // namespace

TEST_CASE("oracle on a single-qubit Z term") {
    ZHamiltonian h;
    h.n_qubits = 1;
    h.terms[0b1] = Dyadic(1);
    const double theta = 0.7;
    Circuit c = compile_phase_oracle(h, theta);
    auto u = unitary_of(c);
    CHECK(std::abs(u[0][0] - std::exp(Amplitude(0, -theta))) < 1e-12);
    CHECK(std::abs(u[1][1] - std::exp(Amplitude(0, theta))) < 1e-12);
}

TEST_CASE("oracle equals the exact diagonal unitary (500 random cases)") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        ZHamiltonian h = random_hamiltonian(rng, n);
        const double theta = angle(rng);
        Circuit c = compile_phase_oracle(h, theta);
        auto u = unitary_of(c);
        std::vector<Dyadic> d = h.diagonal();
        const std::uint64_t dim = std::uint64_t(1) << n;
        double worst = 0;
        for (std::uint64_t col = 0; col < dim; ++col) {
            for (std::uint64_t row = 0; row < dim; ++row) {
                Amplitude expect = row == col
                                       ? std::exp(Amplitude(0, -theta * d[row].to_double()))
                                       : Amplitude(0, 0);
                worst = std::max(worst, std::abs(u[col][row] - expect));
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("zero-phase construction") {
    const double mu = 1.234;
    Circuit c = compile_zero_phase(3, mu);
    auto u = unitary_of(c);
    for (std::uint64_t b = 0; b < 8; ++b) {
        Amplitude expect = b == 0 ? std::exp(Amplitude(0, mu)) : Amplitude(1, 0);
        CHECK(std::abs(u[b][b] - expect) < 1e-12);
    }
}

TEST_CASE("lowering preserves the action exactly (tracked global phase)") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> angle(-2 * M_PI, 2 * M_PI);
    for (int n = 1; n <= 6; ++n) {
        Circuit c;
        c.n_qubits = n;
        std::vector<int> all;
        for (int q = 1; q <= n; ++q) all.push_back(q);
        c.add(GateKind::NCPHASE, all, angle(rng));
        if (n >= 2) c.add(GateKind::NCPHASE, {1, n}, angle(rng));
        c.add(GateKind::NCPHASE, {1}, angle(rng));
        Circuit low = lower(c);
        for (const auto& g : low.gates) CHECK(g.kind != GateKind::NCPHASE);
        auto u1 = unitary_of(c);
        auto u2 = unitary_of(low);
        for (std::uint64_t col = 0; col < u1.size(); ++col)
            for (std::uint64_t row = 0; row < u1.size(); ++row)
                CHECK(std::abs(u1[col][row] - u2[col][row]) < 1e-10);
    }
}

TEST_CASE("lowered search circuit equals the unlowered one") {
    ZHamiltonian h = build_hamiltonian(reduce(generate_biprime_system(966887, 8, 8)));
    SearchPlan plan = plan_search(h, PlanMode::Paper);
    Circuit full = assemble_search(h, plan);
    StateVector a = StateVector::zero(h.n_qubits);
    a.apply(full);
    StateVector b = StateVector::zero(h.n_qubits);
    b.apply(lower(full));
    for (std::uint64_t i = 0; i < a.amps.size(); ++i)
        CHECK(std::abs(a.amps[i] - b.amps[i]) < 1e-10);
}

TEST_CASE("qasm export shape") {
    ZHamiltonian h = build_hamiltonian(reduce(generate_biprime_system(143, 2, 2)));
    SearchPlan plan = plan_search(h, PlanMode::Exact);
    std::string qasm = export_qasm(assemble_search(h, plan));
    CHECK(qasm.rfind("OPENQASM 2.0;\n", 0) == 0);
    CHECK(qasm.find("include \"qelib1.inc\";") != std::string::npos);
    CHECK(qasm.find("// global phase: ") != std::string::npos);
    CHECK(qasm.find("qreg q[2];") != std::string::npos);
    CHECK(qasm.find("rz(1.57079632679) q[1];") != std::string::npos);
    CHECK(qasm.find("cu1(1.57079632679) q[0],q[1];") != std::string::npos);
    CHECK(qasm.find("measure q[1] -> c[1];") != std::string::npos);
    CHECK(qasm.find("ncp") == std::string::npos);
}
