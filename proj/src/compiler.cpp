#include "qf/compiler.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qf {
namespace {

void append(Circuit& dst, const Circuit& src) {
    dst.global_phase += src.global_phase;
    dst.gates.insert(dst.gates.end(), src.gates.begin(), src.gates.end());
}

void hadamard_layer(Circuit& c) {
    for (int i = 1; i <= c.n_qubits; ++i) c.add(GateKind::H, {i});
}

std::string format_angle(double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", a);
    return buf;
}

}  // namespace

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::RZ: return "rz";
        case GateKind::CNOT: return "cx";
        case GateKind::CPHASE: return "cp";
        case GateKind::NCPHASE: return "ncp";
    }
    return "?";
}

Circuit compile_phase_oracle(const ZHamiltonian& h, double theta) {
    Circuit c;
    c.n_qubits = h.n_qubits;
    for (const auto& [mask, coeff] : h.terms) {
        const double a = coeff.to_double() * theta;
        if (mask == 0) {
            c.global_phase -= a;  // e^{-i theta c I}
            continue;
        }
        std::vector<int> qs;
        for (int i = 1; i <= h.n_qubits; ++i)
            if ((mask >> (i - 1)) & 1) qs.push_back(i);
        for (std::size_t i = 0; i + 1 < qs.size(); ++i)
            c.add(GateKind::CNOT, {qs[i], qs[i + 1]});
        c.add(GateKind::RZ, {qs.back()}, 2 * a);
        for (std::size_t i = qs.size() - 1; i-- > 0;)
            c.add(GateKind::CNOT, {qs[i], qs[i + 1]});
    }
    return c;
}

Circuit compile_zero_phase(int n_qubits, double mu) {
    Circuit c;
    c.n_qubits = n_qubits;
    std::vector<int> all;
    for (int i = 1; i <= n_qubits; ++i) {
        c.add(GateKind::X, {i});
        all.push_back(i);
    }
    c.add(GateKind::NCPHASE, all, mu);
    for (int i = 1; i <= n_qubits; ++i) c.add(GateKind::X, {i});
    return c;
}

Circuit assemble_search(const ZHamiltonian& h, const SearchPlan& plan) {
    Circuit c;
    c.n_qubits = h.n_qubits;
    hadamard_layer(c);
    Circuit oracle = compile_phase_oracle(h, plan.theta);
    Circuit zero = compile_zero_phase(h.n_qubits, plan.mu);
    for (int it = 0; it < plan.iterations; ++it) {
        append(c, oracle);
        hadamard_layer(c);
        append(c, zero);
        hadamard_layer(c);
    }
    return c;
}

Circuit lower(const Circuit& circuit) {
    Circuit out;
    out.n_qubits = circuit.n_qubits;
    out.global_phase = circuit.global_phase;
    for (const auto& g : circuit.gates) {
        if (g.kind != GateKind::NCPHASE) {
            out.gates.push_back(g);
            continue;
        }
        const std::size_t q = g.qubits.size();
        if (q == 1) {
            // P(a) = e^{ia/2} RZ(a)
            out.add(GateKind::RZ, g.qubits, g.angle);
            out.global_phase += g.angle / 2;
        } else if (q == 2) {
            out.add(GateKind::CPHASE, g.qubits, g.angle);
        } else {
            // |1..1><1..1| = prod x_i = 2^-q sum_S (-1)^|S| Z_S; exponentiate
            // each Z-string with the matching fraction of the angle
            if (q > 30) throw std::invalid_argument("lower: phase gate too wide");
            ZHamiltonian expansion;
            expansion.n_qubits = circuit.n_qubits;
            for (std::uint32_t sub = 0; sub < (1u << q); ++sub) {
                std::uint64_t mask = 0;
                for (std::size_t i = 0; i < q; ++i)
                    if ((sub >> i) & 1) mask |= std::uint64_t(1) << (g.qubits[i] - 1);
                int sign = std::popcount(sub) & 1 ? -1 : 1;
                expansion.terms[mask] = Dyadic(sign, static_cast<int>(q));
            }
            append(out, compile_phase_oracle(expansion, -g.angle));
        }
    }
    return out;
}

std::string export_qasm(const Circuit& circuit) {
    Circuit low = lower(circuit);
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "// global phase: " << format_angle(low.global_phase) << "\n";
    os << "qreg q[" << low.n_qubits << "];\n";
    os << "creg c[" << low.n_qubits << "];\n";
    for (const auto& g : low.gates) {
        switch (g.kind) {
            case GateKind::H:
                os << "h q[" << g.qubits[0] - 1 << "];\n";
                break;
            case GateKind::X:
                os << "x q[" << g.qubits[0] - 1 << "];\n";
                break;
            case GateKind::RZ:
                os << "rz(" << format_angle(g.angle) << ") q[" << g.qubits[0] - 1
                   << "];\n";
                break;
            case GateKind::CNOT:
                os << "cx q[" << g.qubits[0] - 1 << "],q[" << g.qubits[1] - 1 << "];\n";
                break;
            case GateKind::CPHASE:
                os << "cu1(" << format_angle(g.angle) << ") q[" << g.qubits[0] - 1
                   << "],q[" << g.qubits[1] - 1 << "];\n";
                break;
            case GateKind::NCPHASE:
                throw std::logic_error("export_qasm: unlowered gate");
        }
    }
    for (int i = 0; i < low.n_qubits; ++i)
        os << "measure q[" << i << "] -> c[" << i << "];\n";
    return os.str();
}

}  // namespace qf
