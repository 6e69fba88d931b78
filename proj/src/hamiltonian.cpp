#include "qf/hamiltonian.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qf {

Dyadic ZHamiltonian::eigenvalue(std::uint64_t basis) const {
    Dyadic e;
    for (const auto& [mask, coeff] : terms) {
        // qubit i reads bit (n - i) of the basis index; Z gives (-1)^bit
        std::uint64_t ones = 0;
        for (int i = 1; i <= n_qubits; ++i)
            if ((mask >> (i - 1)) & 1) ones ^= (basis >> (n_qubits - i)) & 1;
        e += ones ? -coeff : coeff;
    }
    return e;
}

std::vector<Dyadic> ZHamiltonian::diagonal() const {
    std::vector<Dyadic> d(std::uint64_t(1) << n_qubits);
    for (std::uint64_t b = 0; b < d.size(); ++b) d[b] = eigenvalue(b);
    return d;
}

std::string ZHamiltonian::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, coeff] : terms) {
        Dyadic c = coeff;
        if (first) {
            if (c.num < 0) {
                os << "- ";
                c = -c;
            }
        } else {
            os << (c.num < 0 ? " - " : " + ");
            if (c.num < 0) c = -c;
        }
        first = false;
        if (mask == 0) {
            os << c.str();
            continue;
        }
        if (!(c == Dyadic(1))) os << c.str() << " ";
        bool firstz = true;
        for (int i = 1; i <= n_qubits; ++i) {
            if (!((mask >> (i - 1)) & 1)) continue;
            if (!firstz) os << "*";
            firstz = false;
            os << "Z" << i;
        }
    }
    return os.str();
}

ZHamiltonian build_hamiltonian(const ReducedSystem& reduced) {
    ZHamiltonian h;
    h.n_qubits = static_cast<int>(reduced.free_order.size());
    std::map<std::uint32_t, int> qubit_of;  // var -> 0-based qubit position
    for (std::size_t i = 0; i < reduced.free_order.size(); ++i)
        qubit_of[reduced.free_order[i]] = static_cast<int>(i);

    for (const auto& eq : reduced.residual.equations) {
        BinaryPolynomial sq = eq.multiply(eq);
        for (const auto& [mono, coeff] : sq.terms()) {
            // product over mono of (1 - Z_i)/2 expands over subsets S with
            // sign (-1)^|S| and denominator 2^|mono|
            const int k = static_cast<int>(mono.size());
            std::vector<int> qubits;
            for (auto v : mono) {
                auto it = qubit_of.find(v);
                if (it == qubit_of.end())
                    throw std::logic_error("residual mentions a non-free variable");
                qubits.push_back(it->second);
            }
            for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
                std::uint64_t mask = 0;
                for (int i = 0; i < k; ++i)
                    if ((sub >> i) & 1) mask |= std::uint64_t(1) << qubits[i];
                int sign = std::popcount(sub) & 1 ? -1 : 1;
                Dyadic& slot = h.terms[mask];
                slot += Dyadic(sign * coeff, k);
                if (slot.is_zero()) h.terms.erase(mask);
            }
        }
    }
    return h;
}

std::map<Dyadic, int> spectrum_classes(const ZHamiltonian& h) {
    std::map<Dyadic, int> classes;
    for (const auto& e : h.diagonal()) ++classes[e];
    return classes;
}

std::vector<std::uint64_t> ground_states(const ZHamiltonian& h) {
    std::vector<std::uint64_t> out;
    std::vector<Dyadic> d = h.diagonal();
    for (std::uint64_t b = 0; b < d.size(); ++b)
        if (d[b].is_zero()) out.push_back(b);
    return out;
}

std::vector<std::uint64_t> decode_factors(const ReducedSystem& reduced,
                                          std::uint64_t basis) {
    if (!reduced.residual.layout)
        throw std::logic_error("decode_factors: system has no factor layout");
    const FactorLayout& lay = *reduced.residual.layout;
    const int n = static_cast<int>(reduced.free_order.size());

    std::map<std::uint32_t, int> fv;
    for (int i = 1; i <= n; ++i)
        fv[reduced.free_order[i - 1]] = static_cast<int>((basis >> (n - i)) & 1);
    Assignment asg = reduced.lift(fv);

    std::vector<std::uint64_t> factors;
    std::uint64_t product = 1;
    for (std::size_t f = 0; f < lay.interiors.size(); ++f) {
        int m = lay.interiors[f];
        std::uint64_t value = (std::uint64_t(1) << (m + 1)) + 1;
        for (std::uint32_t v = 0; v < reduced.residual.variables.size(); ++v) {
            const VariableId& var = reduced.residual.variables[v];
            if (var.kind == VarKind::FactorBit && var.factor == static_cast<int>(f) &&
                asg[v])
                value += std::uint64_t(1) << var.bit;
        }
        factors.push_back(value);
        product *= value;
    }
    if (product != lay.n)
        throw std::logic_error("decode_factors: product does not match target");
    return factors;
}

}  // namespace qf
