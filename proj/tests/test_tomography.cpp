#include "doctest.h"

#include <cmath>

#include "qf/eqgen.hpp"
#include "qf/pipeline.hpp"
#include "qf/simplify.hpp"
#include "qf/tomography.hpp"

using namespace qf;

namespace {

StateVector final_state_of(std::uint64_t n) {
    RunOptions opt;
    opt.n = n;
    opt.deterministic = true;
    return run_factorize(opt).final_state;
}

double max_entry_error(const DensityMatrix& a, const DensityMatrix& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
    return worst;
}

}  // namespace

TEST_CASE("theoretical density of |0>") {
    StateVector sv = StateVector::zero(1);
    DensityMatrix rho = theoretical_density(sv);
    CHECK(std::abs(rho.at(0, 0) - Amplitude(1, 0)) < 1e-15);
    CHECK(std::abs(rho.at(1, 1)) < 1e-15);
    CHECK(std::abs(rho.trace() - Amplitude(1, 0)) < 1e-15);
}

TEST_CASE("final-state density matrices of the two-qubit instances") {
    // 4088459: equal superposition of |00> and |11> -> 1/2 at the corners
    DensityMatrix bell = theoretical_density(final_state_of(4088459));
    CHECK(std::abs(bell.at(0, 0) - Amplitude(0.5, 0)) < 1e-9);
    CHECK(std::abs(bell.at(0, 3) - Amplitude(0.5, 0)) < 1e-9);
    CHECK(std::abs(bell.at(3, 0) - Amplitude(0.5, 0)) < 1e-9);
    CHECK(std::abs(bell.at(3, 3) - Amplitude(0.5, 0)) < 1e-9);
    CHECK(std::abs(bell.at(1, 1)) < 1e-9);

    // 175: 1/3 across the {|00>, |01>, |10>} block
    RunOptions opt;
    opt.n = 175;
    opt.deterministic = true;
    opt.equations_text =
        "vars p1 q1 r1\nlayout 175 p=1 q=1 r=1\n"
        "p1 + q1 + r1 - 1 = 0\np1*q1 + q1*r1 + p1*r1 = 0\n";
    DensityMatrix w = theoretical_density(run_factorize(opt).final_state);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(std::abs(w.at(r, c) - Amplitude(1.0 / 3, 0)) < 1e-9);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(w.at(3, i)) < 1e-9);
}

TEST_CASE("measurement bases") {
    StateVector zero = StateVector::zero(1);
    // |0> along X: symmetric outcomes
    CountHistogram h = measure_setting(zero, {Axis::X}, 8192, 5);
    CHECK(std::abs(static_cast<double>(h[0]) - 4096) < 5 * 45);
    // |+> along X: deterministic
    StateVector plus = StateVector::zero(1);
    plus.apply({GateKind::H, {1}});
    CountHistogram hp = measure_setting(plus, {Axis::X}, 2048, 5);
    CHECK(hp[0] == 2048);
    // |i> = S H |0> along Y: deterministic
    StateVector yi = StateVector::zero(1);
    yi.apply({GateKind::H, {1}});
    yi.amps[1] *= Amplitude(0, 1);
    CountHistogram hy = measure_setting(yi, {Axis::Y}, 2048, 5);
    CHECK(hy[0] == 2048);
}

TEST_CASE("infinite-shot reconstruction is exact") {
    for (std::uint64_t n : {143ull, 4088459ull, 966887ull}) {
        StateVector sv = final_state_of(n);
        DensityMatrix rho_t = theoretical_density(sv);
        DensityMatrix rho_e = reconstruct(stokes_exact(sv));
        CHECK(max_entry_error(rho_t, rho_e) < 1e-9);
        CHECK(fidelity(rho_t, rho_e) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("sampled reconstruction stays Hermitian and trace-1") {
    StateVector sv = final_state_of(966887);
    auto counts = measure_all_settings(sv, 512, 42);
    DensityMatrix rho = reconstruct(stokes_from_counts(counts, sv.n_qubits));
    CHECK(rho.hermiticity_defect() < 1e-12);
    CHECK(std::abs(rho.trace() - Amplitude(1, 0)) < 1e-9);
    StokesTensor st = stokes_from_counts(counts, sv.n_qubits);
    for (auto& [word, value] : st.values) CHECK(std::abs(value) <= 1.05);
    CHECK(st.values.at(AxisWord(4, Axis::I)) == doctest::Approx(1.0));
}

TEST_CASE("uniform counts reconstruct the maximally mixed state") {
    std::map<AxisWord, CountHistogram> counts;
    for (const auto& setting : all_settings(2)) {
        CountHistogram h;
        for (std::uint64_t b = 0; b < 4; ++b) h[b] = 100;
        counts[setting] = h;
    }
    DensityMatrix rho = reconstruct(stokes_from_counts(counts, 2));
    for (std::uint64_t r = 0; r < 4; ++r)
        for (std::uint64_t c = 0; c < 4; ++c)
            CHECK(std::abs(rho.at(r, c) - (r == c ? Amplitude(0.25, 0)
                                                  : Amplitude(0, 0))) < 1e-12);
}

TEST_CASE("reconstruction input validation") {
    StateVector sv = StateVector::zero(1);
    auto counts = measure_all_settings(sv, 100, 1);
    auto missing = counts;
    missing.erase(AxisWord{Axis::Y});
    CHECK_THROWS_AS(stokes_from_counts(missing, 1), std::invalid_argument);
    auto uneven = counts;
    uneven[AxisWord{Axis::X}][0] += 1;
    CHECK_THROWS_AS(stokes_from_counts(uneven, 1), std::invalid_argument);
}

TEST_CASE("fidelity basics") {
    StateVector zero = StateVector::zero(1);
    StateVector one = StateVector::zero(1);
    one.apply({GateKind::X, {1}});
    DensityMatrix r0 = theoretical_density(zero);
    DensityMatrix r1 = theoretical_density(one);
    CHECK(fidelity(r0, r0) == doctest::Approx(1.0));
    CHECK(fidelity(r0, r1) == doctest::Approx(0.0));

    DensityMatrix bad = r0;
    bad.at(0, 1) = Amplitude(0.5, 0);  // breaks Hermiticity
    CHECK_THROWS_AS(fidelity(r0, bad), std::invalid_argument);
}

TEST_CASE("fidelity decreases with mixing") {
    StateVector sv = final_state_of(4088459);
    DensityMatrix pure = theoretical_density(sv);
    double last = 2;
    for (double eps : {0.0, 0.1, 0.3, 0.6, 0.9}) {
        DensityMatrix mixed = pure;
        for (std::uint64_t r = 0; r < 4; ++r)
            for (std::uint64_t c = 0; c < 4; ++c)
                mixed.at(r, c) = (1 - eps) * pure.at(r, c) +
                                 (r == c ? Amplitude(eps / 4, 0) : Amplitude(0, 0));
        double f = fidelity(pure, mixed);
        CHECK(f < last);
        last = f;
    }
}
