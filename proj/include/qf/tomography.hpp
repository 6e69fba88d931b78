#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qf/simulator.hpp"

namespace qf {

/// Dense 2^n x 2^n complex matrix, row-major. Reconstructions are Hermitian
/// and trace-1 by construction but, being linear inversions, need not be
/// positive semidefinite.
struct DensityMatrix {
    int n_qubits = 0;
    std::vector<Amplitude> data;  // row-major, dim = 2^n

    std::uint64_t dim() const { return std::uint64_t(1) << n_qubits; }
    Amplitude& at(std::uint64_t r, std::uint64_t c) { return data[r * dim() + c]; }
    const Amplitude& at(std::uint64_t r, std::uint64_t c) const {
        return data[r * dim() + c];
    }

    std::complex<double> trace() const;
    double hermiticity_defect() const;  // max |rho - rho^dagger| entry

    /// Aligned fixed-point text, "real+imag i" with 6 decimals per entry.
    std::string str() const;
};

/// Measurement axis per qubit. Settings are words over {X, Y, Z}; the Stokes
/// expansion additionally uses I.
enum class Axis { I, X, Y, Z };

using AxisWord = std::vector<Axis>;  // one entry per qubit, qubit 1 first

std::string axis_word_str(const AxisWord& word);

/// Expectation value T_v of each Pauli word v over {I,X,Y,Z}^n. T_{I...I}=1.
struct StokesTensor {
    int n_qubits = 0;
    std::map<AxisWord, double> values;
};

/// rho = |psi><psi|.
DensityMatrix theoretical_density(const StateVector& psi);

/// Rotate into the measurement basis (X: H, Y: S-dagger then H, Z: nothing)
/// and sample in the computational basis.
CountHistogram measure_setting(const StateVector& psi, const AxisWord& axes,
                               std::uint64_t shots, std::uint64_t seed);

/// Exact outcome probabilities of a setting (infinite-shot limit).
std::vector<double> setting_probabilities(const StateVector& psi,
                                          const AxisWord& axes);

/// All 3^n settings in lexicographic X < Y < Z order; setting i is sampled
/// with seed (seed + i), giving a deterministic full tomography pass.
std::vector<AxisWord> all_settings(int n_qubits);

std::map<AxisWord, CountHistogram> measure_all_settings(const StateVector& psi,
                                                        std::uint64_t shots,
                                                        std::uint64_t seed);

/// Stokes parameters from measured counts. A word with identity positions is
/// estimated from the setting that replaces each I with Z, marginalizing
/// those qubits. Throws std::invalid_argument on a missing setting or
/// mismatched shot totals.
StokesTensor stokes_from_counts(const std::map<AxisWord, CountHistogram>& counts,
                                int n_qubits);

/// Infinite-shot Stokes parameters straight from the state.
StokesTensor stokes_exact(const StateVector& psi);

/// Linear inversion: rho = 2^-n sum_v T_v sigma_v. Hermitian, trace 1.
DensityMatrix reconstruct(const StokesTensor& stokes);

/// Uhlmann fidelity F = tr sqrt(sqrt(rhoT) rhoE sqrt(rhoT)). Rank-1 rhoT
/// short-circuits to sqrt(max(0, Re<psi|rhoE|psi>)); the general path runs a
/// Hermitian eigendecomposition. Throws std::invalid_argument when an input
/// is non-Hermitian beyond 1e-8.
double fidelity(const DensityMatrix& rho_t, const DensityMatrix& rho_e);

}  // namespace qf
