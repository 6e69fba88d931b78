#pragma once

#include <string>
#include <vector>

namespace qf {

/// Gate vocabulary. NCPHASE is the only composite: a phase of e^{i angle} on
/// the all-ones state of its qubits (symmetric, any qubit may be "target");
/// lower() rewrites it into the rest of the set.
enum class GateKind { H, X, RZ, CNOT, CPHASE, NCPHASE };

/// qubits are 1-based; for CNOT the order is {control, target}. RZ(a) =
/// diag(e^{-ia/2}, e^{ia/2}); CPHASE(a) phases |11> by e^{ia}.
struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    double angle = 0;
};

struct Circuit {
    int n_qubits = 0;
    double global_phase = 0;  // accumulated e^{i global_phase}
    std::vector<Gate> gates;

    void add(GateKind kind, std::vector<int> qubits, double angle = 0) {
        gates.push_back({kind, std::move(qubits), angle});
    }
};

std::string gate_name(GateKind kind);

}  // namespace qf
