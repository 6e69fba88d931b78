#pragma once

#include <cstdint>
#include <optional>

#include "qf/hamiltonian.hpp"

namespace qf {

enum class PlanMode { Exact, Paper };

/// Amplitude-amplification schedule for a diagonal Hamiltonian whose ground
/// space marks the targets.
///
/// With M targets among 2^n states, phi = arcsin(sqrt(M/2^n)). Exact mode
/// picks the smallest iteration count j with a consistent rotation angle
///   j = pi/(4 phi) - 1/2 rounded up to an integer,
///   mu = 2 arcsin(sin(pi/(4j+2)) / sin(phi)),
/// which drives the success probability to 1. Paper mode fixes j = 1 and
/// clamps the arcsin argument to 1 when phi is too small (mu = pi then), the
/// single-iteration variant.
///
/// The oracle phase theta = mu / E_b scales the Hamiltonian so the modal
/// nonzero eigenvalue E_b picks up exactly phase mu.
struct SearchPlan {
    PlanMode mode = PlanMode::Exact;
    int n_qubits = 0;
    std::uint64_t m_targets = 0;  // ground-space dimension
    int iterations = 0;           // j
    double phi = 0;
    double mu = 0;                // marking / zero-reflection phase
    double e_b = 0;               // reference eigenvalue (modal nonzero)
    double theta = 0;             // oracle time: exp(-i H theta)
    bool clamped = false;         // paper mode hit the arcsin clamp

    /// Predicted success probability after j iterations of the idealized
    /// two-phase walk (exact for the idealized oracle).
    double predicted_success() const;
};

/// Throws std::domain_error when the Hamiltonian has no ground state or no
/// excited state. `theta_override` replaces theta = mu/E_b when given;
/// `baseline_override` replaces the modal-eigenvalue choice of E_b.
SearchPlan plan_search(const ZHamiltonian& h, PlanMode mode,
                       std::optional<double> theta_override = std::nullopt,
                       std::optional<double> baseline_override = std::nullopt);

}  // namespace qf
