#pragma once

#include "qf/circuit.hpp"
#include "qf/hamiltonian.hpp"
#include "qf/searchplan.hpp"

namespace qf {

/// exp(-i H theta) for a diagonal Z-string Hamiltonian: per term, a CNOT
/// parity ladder onto the term's highest qubit around RZ(2 c theta); the
/// identity term becomes global phase.
Circuit compile_phase_oracle(const ZHamiltonian& h, double theta);

/// Phase e^{i mu} on |0...0>: X on every qubit, NCPHASE(mu), X again.
Circuit compile_zero_phase(int n_qubits, double mu);

/// Full search circuit: H^n then plan.iterations times
/// [oracle(theta), H^n, zero-phase(mu), H^n].
Circuit assemble_search(const ZHamiltonian& h, const SearchPlan& plan);

/// Rewrite NCPHASE gates into {H, X, RZ, CNOT, CPHASE}: one qubit becomes
/// RZ plus global phase, two qubits CPHASE, larger gates expand through the
/// Z-parity form of the all-ones projector (exact, no ancillas).
Circuit lower(const Circuit& circuit);

/// OpenQASM 2.0 text of a lowered circuit. The global phase, which QASM 2
/// cannot express, is recorded in a header comment.
std::string export_qasm(const Circuit& circuit);

}  // namespace qf
