#include "qf/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qf {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

StateVector StateVector::zero(int n_qubits) {
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.assign(std::uint64_t(1) << n_qubits, Amplitude(0, 0));
    s.amps[0] = Amplitude(1, 0);
    return s;
}

void StateVector::apply(const Gate& gate) {
    // qubit i toggles bit (n - i) of the basis index
    auto bit_of = [&](int q) { return std::uint64_t(1) << (n_qubits - q); };
    switch (gate.kind) {
        case GateKind::H: {
            const std::uint64_t b = bit_of(gate.qubits[0]);
            for (std::uint64_t i = 0; i < amps.size(); ++i) {
                if (i & b) continue;
                Amplitude lo = amps[i], hi = amps[i | b];
                amps[i] = kInvSqrt2 * (lo + hi);
                amps[i | b] = kInvSqrt2 * (lo - hi);
            }
            break;
        }
        case GateKind::X: {
            const std::uint64_t b = bit_of(gate.qubits[0]);
            for (std::uint64_t i = 0; i < amps.size(); ++i)
                if (!(i & b)) std::swap(amps[i], amps[i | b]);
            break;
        }
        case GateKind::RZ: {
            const std::uint64_t b = bit_of(gate.qubits[0]);
            const Amplitude p0 = std::exp(Amplitude(0, -gate.angle / 2));
            const Amplitude p1 = std::exp(Amplitude(0, gate.angle / 2));
            for (std::uint64_t i = 0; i < amps.size(); ++i)
                amps[i] *= (i & b) ? p1 : p0;
            break;
        }
        case GateKind::CNOT: {
            const std::uint64_t c = bit_of(gate.qubits[0]);
            const std::uint64_t t = bit_of(gate.qubits[1]);
            for (std::uint64_t i = 0; i < amps.size(); ++i)
                if ((i & c) && !(i & t)) std::swap(amps[i], amps[i | t]);
            break;
        }
        case GateKind::CPHASE: {
            const std::uint64_t m = bit_of(gate.qubits[0]) | bit_of(gate.qubits[1]);
            const Amplitude p = std::exp(Amplitude(0, gate.angle));
            for (std::uint64_t i = 0; i < amps.size(); ++i)
                if ((i & m) == m) amps[i] *= p;
            break;
        }
        case GateKind::NCPHASE: {
            std::uint64_t m = 0;
            for (int q : gate.qubits) m |= bit_of(q);
            const Amplitude p = std::exp(Amplitude(0, gate.angle));
            for (std::uint64_t i = 0; i < amps.size(); ++i)
                if ((i & m) == m) amps[i] *= p;
            break;
        }
    }
}

void StateVector::apply(const Circuit& circuit) {
    if (circuit.n_qubits != n_qubits)
        throw std::invalid_argument("circuit width does not match state");
    for (const auto& g : circuit.gates) apply(g);
    apply_global_phase(circuit.global_phase);
}

void StateVector::apply_global_phase(double phase) {
    if (phase == 0) return;
    const Amplitude p = std::exp(Amplitude(0, phase));
    for (auto& a : amps) a *= p;
}

void StateVector::apply_diagonal_phase(const ZHamiltonian& h, double theta) {
    std::vector<Dyadic> d = h.diagonal();
    for (std::uint64_t i = 0; i < amps.size(); ++i)
        amps[i] *= std::exp(Amplitude(0, -theta * d[i].to_double()));
}

void StateVector::apply_ideal_oracle(const ZHamiltonian& h, double mu) {
    const Amplitude p = std::exp(Amplitude(0, mu));
    std::vector<Dyadic> d = h.diagonal();
    for (std::uint64_t i = 0; i < amps.size(); ++i)
        if (d[i].is_zero()) amps[i] *= p;
}

double StateVector::probability(std::uint64_t basis) const {
    return std::norm(amps[basis]);
}

double StateVector::norm() const {
    double t = 0;
    for (const auto& a : amps) t += std::norm(a);
    return t;
}

double StateVector::success_probability(const ZHamiltonian& h) const {
    double t = 0;
    for (auto g : ground_states(h)) t += probability(g);
    return t;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

CountHistogram sample(const StateVector& state, std::uint64_t shots,
                      std::uint64_t seed) {
    std::vector<double> cdf(state.amps.size());
    double acc = 0;
    for (std::uint64_t i = 0; i < state.amps.size(); ++i) {
        acc += std::norm(state.amps[i]);
        cdf[i] = acc;
    }
    std::mt19937_64 rng(splitmix64(seed));
    CountHistogram counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        std::uint64_t idx =
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        if (idx >= cdf.size()) idx = cdf.size() - 1;
        ++counts[idx];
    }
    return counts;
}

std::string to_bitstring(std::uint64_t basis, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int i = 0; i < n_qubits; ++i)
        if ((basis >> (n_qubits - 1 - i)) & 1) s[i] = '1';
    return s;
}

std::string histogram_csv(const CountHistogram& counts, int n_qubits) {
    std::uint64_t shots = 0;
    for (const auto& [basis, count] : counts) shots += count;
    std::ostringstream os;
    os << "bitstring,count,probability\n";
    for (const auto& [basis, count] : counts) {
        char prob[32];
        std::snprintf(prob, sizeof prob, "%.10g",
                      shots ? static_cast<double>(count) / shots : 0.0);
        os << to_bitstring(basis, n_qubits) << "," << count << "," << prob << "\n";
    }
    return os.str();
}

}  // namespace qf
