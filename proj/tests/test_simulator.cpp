#include "doctest.h"

#include <cmath>

#include "qf/simulator.hpp"

using namespace qf;

TEST_CASE("qubit 1 is the most significant bit") {
    StateVector sv = StateVector::zero(2);
    sv.apply({GateKind::X, {1}});
    CHECK(sv.probability(0b10) == doctest::Approx(1.0));
    sv.apply({GateKind::X, {2}});
    CHECK(sv.probability(0b11) == doctest::Approx(1.0));
}

TEST_CASE("hadamard and interference") {
    StateVector sv = StateVector::zero(1);
    sv.apply({GateKind::H, {1}});
    CHECK(sv.amps[0].real() == doctest::Approx(1 / std::sqrt(2)));
    CHECK(sv.amps[1].real() == doctest::Approx(1 / std::sqrt(2)));
    sv.apply({GateKind::H, {1}});
    CHECK(sv.probability(0) == doctest::Approx(1.0));
    CHECK(std::abs(sv.amps[1]) < 1e-15);
}

TEST_CASE("rz phases") {
    StateVector sv = StateVector::zero(1);
    sv.apply({GateKind::X, {1}});
    sv.apply({GateKind::RZ, {1}, M_PI});
    // e^{+i pi/2} |1> = i |1>
    CHECK(sv.amps[1].imag() == doctest::Approx(1.0));
    CHECK(sv.amps[1].real() == doctest::Approx(0.0));
}

TEST_CASE("cnot and cphase") {
    StateVector sv = StateVector::zero(2);
    sv.apply({GateKind::X, {1}});
    sv.apply({GateKind::CNOT, {1, 2}});
    CHECK(sv.probability(0b11) == doctest::Approx(1.0));
    sv.apply({GateKind::CPHASE, {1, 2}, M_PI / 2});
    CHECK(sv.amps[0b11].imag() == doctest::Approx(1.0));
    // control low: no action
    StateVector sw = StateVector::zero(2);
    sw.apply({GateKind::CNOT, {1, 2}});
    CHECK(sw.probability(0b00) == doctest::Approx(1.0));
}

TEST_CASE("norm is preserved") {
    StateVector sv = StateVector::zero(3);
    for (int q = 1; q <= 3; ++q) sv.apply({GateKind::H, {q}});
    sv.apply({GateKind::CNOT, {1, 3}});
    sv.apply({GateKind::RZ, {2}, 0.3});
    sv.apply({GateKind::NCPHASE, {1, 2, 3}, 1.1});
    CHECK(sv.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("splitmix64 known answers") {
    // reference sequence values for the standard splitmix64 finalizer
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafull);
    CHECK(splitmix64(1) == 0x910a2dec89025cc1ull);
}

TEST_CASE("sampling is deterministic per seed") {
    StateVector sv = StateVector::zero(2);
    sv.apply({GateKind::H, {1}});
    sv.apply({GateKind::CNOT, {1, 2}});  // (|00> + |11>)/sqrt 2
    CountHistogram a = sample(sv, 4096, 9);
    CountHistogram b = sample(sv, 4096, 9);
    CHECK(a == b);
    CountHistogram c = sample(sv, 4096, 10);
    CHECK(a != c);
    std::uint64_t total = 0;
    for (auto& [basis, count] : a) {
        CHECK((basis == 0b00 || basis == 0b11));
        total += count;
    }
    CHECK(total == 4096);
    // both outcomes within 5 sigma of the mean 2048
    CHECK(std::abs(static_cast<double>(a[0b00]) - 2048) < 5 * 32);
}

TEST_CASE("sampling never hits zero-amplitude states") {
    StateVector sv = StateVector::zero(2);
    sv.apply({GateKind::H, {2}});  // support on |00>, |01> only
    CountHistogram h = sample(sv, 8192, 123);
    for (auto& [basis, count] : h) CHECK(basis <= 1);
}

TEST_CASE("bitstrings and csv") {
    CHECK(to_bitstring(0b0111, 4) == "0111");
    CHECK(to_bitstring(0, 3) == "000");
    CountHistogram h{{0b01, 500}, {0b10, 524}};
    CHECK(histogram_csv(h, 2) ==
          "bitstring,count,probability\n"
          "01,500,0.48828125\n"
          "10,524,0.51171875\n");
}
