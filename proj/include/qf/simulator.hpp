#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qf/circuit.hpp"
#include "qf/hamiltonian.hpp"

namespace qf {

using Amplitude = std::complex<double>;

/// shot counts per basis index
using CountHistogram = std::map<std::uint64_t, std::uint64_t>;

/// Dense state vector over n qubits. Qubit 1 is the most significant bit of
/// the basis index, matching the Hamiltonian's convention.
struct StateVector {
    int n_qubits = 0;
    std::vector<Amplitude> amps;

    static StateVector zero(int n_qubits);  // |0...0>

    void apply(const Gate& gate);
    void apply(const Circuit& circuit);  // includes the tracked global phase
    void apply_global_phase(double phase);

    /// exp(-i H theta) applied exactly through the diagonal.
    void apply_diagonal_phase(const ZHamiltonian& h, double theta);

    /// Idealized marking oracle: ground states gain e^{+i mu}, the rest are
    /// untouched.
    void apply_ideal_oracle(const ZHamiltonian& h, double mu);

    double probability(std::uint64_t basis) const;
    double norm() const;

    /// Total probability mass on the Hamiltonian's ground states.
    double success_probability(const ZHamiltonian& h) const;
};

/// Measure `shots` times in the computational basis.
///
/// PRNG contract (stable across platforms and releases): a std::mt19937_64
/// seeded with splitmix64(seed); each shot draws u = (next() >> 11) * 2^-53
/// and inverts the cumulative distribution. Identical state, shots and seed
/// always give identical counts.
CountHistogram sample(const StateVector& state, std::uint64_t shots,
                      std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

/// Basis index as a bitstring, qubit 1 leftmost ("0111" for 7 on 4 qubits).
std::string to_bitstring(std::uint64_t basis, int n_qubits);

/// CSV with header "bitstring,count" in basis order.
std::string histogram_csv(const CountHistogram& counts, int n_qubits);

}  // namespace qf
