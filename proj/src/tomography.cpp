#include "qf/tomography.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qf {
namespace {

using Eigen::MatrixXcd;

MatrixXcd to_eigen(const DensityMatrix& rho) {
    const std::uint64_t d = rho.dim();
    MatrixXcd m(d, d);
    for (std::uint64_t r = 0; r < d; ++r)
        for (std::uint64_t c = 0; c < d; ++c) m(r, c) = rho.at(r, c);
    return m;
}

/// In-place basis rotation before a Z-basis readout.
void rotate_to_setting(StateVector& psi, const AxisWord& axes) {
    if (static_cast<int>(axes.size()) != psi.n_qubits)
        throw std::invalid_argument("axis word width mismatch");
    for (int q = 1; q <= psi.n_qubits; ++q) {
        Axis a = axes[q - 1];
        if (a == Axis::Z || a == Axis::I) continue;
        if (a == Axis::Y) {
            // S-dagger: |1> component gains -i
            const std::uint64_t b = std::uint64_t(1) << (psi.n_qubits - q);
            for (std::uint64_t i = 0; i < psi.amps.size(); ++i)
                if (i & b) psi.amps[i] *= Amplitude(0, -1);
        }
        psi.apply({GateKind::H, {q}});
    }
}

/// sigma_axis entry (r, c) for r, c in {0, 1}.
Amplitude pauli_entry(Axis a, int r, int c) {
    switch (a) {
        case Axis::I: return r == c ? 1.0 : 0.0;
        case Axis::X: return r != c ? 1.0 : 0.0;
        case Axis::Y:
            if (r == c) return 0.0;
            return r == 0 ? Amplitude(0, -1) : Amplitude(0, 1);
        case Axis::Z: return r == c ? (r == 0 ? 1.0 : -1.0) : 0.0;
    }
    return 0.0;
}

std::vector<AxisWord> all_pauli_words(int n_qubits) {
    std::vector<AxisWord> words;
    const std::uint64_t total = std::uint64_t(1) << (2 * n_qubits);
    for (std::uint64_t w = 0; w < total; ++w) {
        AxisWord word(n_qubits);
        for (int q = 0; q < n_qubits; ++q) {
            int digit = static_cast<int>((w >> (2 * (n_qubits - 1 - q))) & 3);
            word[q] = static_cast<Axis>(digit);
        }
        words.push_back(std::move(word));
    }
    return words;
}

AxisWord designated_setting(const AxisWord& word) {
    AxisWord s = word;
    for (auto& a : s)
        if (a == Axis::I) a = Axis::Z;
    return s;
}

double word_expectation(const AxisWord& word, const std::vector<double>& probs,
                        int n_qubits) {
    double t = 0;
    for (std::uint64_t b = 0; b < probs.size(); ++b) {
        int parity = 0;
        for (int q = 0; q < n_qubits; ++q)
            if (word[q] != Axis::I) parity ^= static_cast<int>((b >> (n_qubits - 1 - q)) & 1);
        t += parity ? -probs[b] : probs[b];
    }
    return t;
}

}  // namespace

std::complex<double> DensityMatrix::trace() const {
    std::complex<double> t = 0;
    for (std::uint64_t i = 0; i < dim(); ++i) t += at(i, i);
    return t;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0;
    for (std::uint64_t r = 0; r < dim(); ++r)
        for (std::uint64_t c = 0; c < dim(); ++c)
            worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
    return worst;
}

std::string DensityMatrix::str() const {
    std::ostringstream os;
    for (std::uint64_t r = 0; r < dim(); ++r) {
        for (std::uint64_t c = 0; c < dim(); ++c) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%9.6f%+9.6fi", at(r, c).real(),
                          at(r, c).imag());
            os << buf << (c + 1 < dim() ? "  " : "");
        }
        os << "\n";
    }
    return os.str();
}

std::string axis_word_str(const AxisWord& word) {
    std::string s;
    for (Axis a : word) s += "IXYZ"[static_cast<int>(a)];
    return s;
}

DensityMatrix theoretical_density(const StateVector& psi) {
    DensityMatrix rho;
    rho.n_qubits = psi.n_qubits;
    rho.data.resize(psi.amps.size() * psi.amps.size());
    for (std::uint64_t r = 0; r < psi.amps.size(); ++r)
        for (std::uint64_t c = 0; c < psi.amps.size(); ++c)
            rho.at(r, c) = psi.amps[r] * std::conj(psi.amps[c]);
    return rho;
}

CountHistogram measure_setting(const StateVector& psi, const AxisWord& axes,
                               std::uint64_t shots, std::uint64_t seed) {
    StateVector rotated = psi;
    rotate_to_setting(rotated, axes);
    return sample(rotated, shots, seed);
}

std::vector<double> setting_probabilities(const StateVector& psi,
                                          const AxisWord& axes) {
    StateVector rotated = psi;
    rotate_to_setting(rotated, axes);
    std::vector<double> probs(rotated.amps.size());
    for (std::uint64_t i = 0; i < probs.size(); ++i) probs[i] = std::norm(rotated.amps[i]);
    return probs;
}

std::vector<AxisWord> all_settings(int n_qubits) {
    std::vector<AxisWord> out;
    std::uint64_t total = 1;
    for (int i = 0; i < n_qubits; ++i) total *= 3;
    for (std::uint64_t w = 0; w < total; ++w) {
        AxisWord word(n_qubits);
        std::uint64_t rem = w;
        for (int q = n_qubits - 1; q >= 0; --q) {
            word[q] = static_cast<Axis>(1 + rem % 3);  // X, Y, Z
            rem /= 3;
        }
        out.push_back(std::move(word));
    }
    return out;
}

std::map<AxisWord, CountHistogram> measure_all_settings(const StateVector& psi,
                                                        std::uint64_t shots,
                                                        std::uint64_t seed) {
    std::map<AxisWord, CountHistogram> out;
    std::vector<AxisWord> settings = all_settings(psi.n_qubits);
    for (std::size_t i = 0; i < settings.size(); ++i)
        out[settings[i]] = measure_setting(psi, settings[i], shots, seed + i);
    return out;
}

StokesTensor stokes_from_counts(const std::map<AxisWord, CountHistogram>& counts,
                                int n_qubits) {
    // common shot count across settings
    std::uint64_t shots = 0;
    bool first = true;
    for (const auto& [word, histogram] : counts) {
        std::uint64_t t = 0;
        for (const auto& [basis, c] : histogram) t += c;
        if (first) {
            shots = t;
            first = false;
        } else if (t != shots) {
            throw std::invalid_argument("settings measured with different shot counts");
        }
    }
    if (shots == 0) throw std::invalid_argument("empty tomography data");

    StokesTensor stokes;
    stokes.n_qubits = n_qubits;
    const std::uint64_t dim = std::uint64_t(1) << n_qubits;
    for (const auto& word : all_pauli_words(n_qubits)) {
        auto it = counts.find(designated_setting(word));
        if (it == counts.end())
            throw std::invalid_argument("missing tomography setting " +
                                        axis_word_str(designated_setting(word)));
        std::vector<double> probs(dim, 0.0);
        for (const auto& [basis, c] : it->second)
            probs[basis] = static_cast<double>(c) / shots;
        stokes.values[word] = word_expectation(word, probs, n_qubits);
    }
    return stokes;
}

StokesTensor stokes_exact(const StateVector& psi) {
    StokesTensor stokes;
    stokes.n_qubits = psi.n_qubits;
    for (const auto& word : all_pauli_words(psi.n_qubits)) {
        std::vector<double> probs = setting_probabilities(psi, designated_setting(word));
        stokes.values[word] = word_expectation(word, probs, psi.n_qubits);
    }
    return stokes;
}

DensityMatrix reconstruct(const StokesTensor& stokes) {
    const int n = stokes.n_qubits;
    DensityMatrix rho;
    rho.n_qubits = n;
    const std::uint64_t d = std::uint64_t(1) << n;
    rho.data.assign(d * d, Amplitude(0, 0));
    const double scale = 1.0 / static_cast<double>(d);
    for (const auto& [word, t] : stokes.values) {
        if (t == 0) continue;
        for (std::uint64_t r = 0; r < d; ++r) {
            for (std::uint64_t c = 0; c < d; ++c) {
                Amplitude e = 1;
                for (int q = 0; q < n && e != Amplitude(0, 0); ++q)
                    e *= pauli_entry(word[q],
                                     static_cast<int>((r >> (n - 1 - q)) & 1),
                                     static_cast<int>((c >> (n - 1 - q)) & 1));
                if (e != Amplitude(0, 0)) rho.at(r, c) += scale * t * e;
            }
        }
    }
    return rho;
}

double fidelity(const DensityMatrix& rho_t, const DensityMatrix& rho_e) {
    if (rho_t.n_qubits != rho_e.n_qubits)
        throw std::invalid_argument("fidelity: dimension mismatch");
    if (rho_t.hermiticity_defect() > 1e-8 || rho_e.hermiticity_defect() > 1e-8)
        throw std::invalid_argument("fidelity: non-Hermitian input");

    MatrixXcd t = to_eigen(rho_t);
    MatrixXcd e = to_eigen(rho_e);

    Eigen::SelfAdjointEigenSolver<MatrixXcd> est(t);
    const auto& evals = est.eigenvalues();
    const std::uint64_t d = rho_t.dim();

    // rank-1 shortcut: pure target state
    if (evals(d - 1) > 1 - 1e-9 && std::abs(evals(0)) < 1e-9) {
        Eigen::VectorXcd psi = est.eigenvectors().col(d - 1);
        double overlap = std::real((psi.adjoint() * e * psi)(0, 0));
        return std::sqrt(std::max(0.0, overlap));
    }

    // F = tr sqrt(sqrt(t) e sqrt(t)), clamping negative eigenvalues
    Eigen::VectorXd clamped = evals.cwiseMax(0.0).cwiseSqrt();
    MatrixXcd sq = est.eigenvectors() * clamped.asDiagonal() *
                   est.eigenvectors().adjoint();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> inner(sq * e * sq);
    double f = 0;
    for (std::uint64_t i = 0; i < d; ++i)
        f += std::sqrt(std::max(0.0, inner.eigenvalues()(i)));
    return f;
}

}  // namespace qf
