#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qf/rational.hpp"
#include "qf/simplify.hpp"

namespace qf {

/// Diagonal Hamiltonian as a sum of Pauli-Z strings with exact dyadic
/// coefficients. A term's mask has bit (i-1) set when Z acts on qubit i;
/// qubit i corresponds to free_order[i-1] of the reduced system. Qubit 1 is
/// the most significant bit of a computational basis index.
struct ZHamiltonian {
    int n_qubits = 0;
    std::map<std::uint64_t, Dyadic> terms;  // Z-string mask -> coefficient

    /// Eigenvalue on basis state |b> (exact; the operator is diagonal).
    Dyadic eigenvalue(std::uint64_t basis) const;

    /// All 2^n eigenvalues in basis order.
    std::vector<Dyadic> diagonal() const;

    std::string str() const;  // e.g. "1/2 - 1/2 Z1*Z2"
};

/// H = sum_k r_k(a)^2 over the residual equations, with binary variables
/// mapped through x = (1 - Z)/2. Ground space (eigenvalue 0) is exactly the
/// residual's solution set.
ZHamiltonian build_hamiltonian(const ReducedSystem& reduced);

/// Eigenvalue -> multiplicity over the full computational basis.
std::map<Dyadic, int> spectrum_classes(const ZHamiltonian& h);

/// Basis states with eigenvalue zero.
std::vector<std::uint64_t> ground_states(const ZHamiltonian& h);

/// Map qubit values (qubit 1 = MSB of `basis`) back through the reduction and
/// factor layout to the recovered factors. Throws std::logic_error if their
/// product does not reproduce the layout's target.
std::vector<std::uint64_t> decode_factors(const ReducedSystem& reduced,
                                          std::uint64_t basis);

}  // namespace qf
