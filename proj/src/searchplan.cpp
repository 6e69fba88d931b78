#include "qf/searchplan.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qf {

double SearchPlan::predicted_success() const {
    // two-dimensional good/bad subspace dynamics of the idealized walk
    using C = std::complex<double>;
    const double sg = std::sin(phi), cb = std::cos(phi);
    C g(sg, 0), b(cb, 0);
    const C w = std::exp(C(0, mu));
    for (int it = 0; it < iterations; ++it) {
        g *= w;  // oracle: ground states pick up e^{+i mu}
        // diffusion: I + (e^{+i mu} - 1)|s><s|
        C overlap = sg * g + cb * b;
        C d = (w - 1.0) * overlap;
        g += sg * d;
        b += cb * d;
    }
    return std::norm(g);
}

SearchPlan plan_search(const ZHamiltonian& h, PlanMode mode,
                       std::optional<double> theta_override,
                       std::optional<double> baseline_override) {
    SearchPlan plan;
    plan.mode = mode;
    plan.n_qubits = h.n_qubits;

    std::map<Dyadic, int> classes = spectrum_classes(h);
    auto z = classes.find(Dyadic(0));
    if (z == classes.end())
        throw std::domain_error("plan_search: Hamiltonian has empty ground space");
    plan.m_targets = static_cast<std::uint64_t>(z->second);
    const std::uint64_t total = std::uint64_t(1) << h.n_qubits;
    if (plan.m_targets == total)
        throw std::domain_error("plan_search: every state is a ground state");

    // reference eigenvalue: highest multiplicity among nonzero, ties -> smaller
    const Dyadic* best = nullptr;
    int best_count = -1;
    for (const auto& [e, count] : classes) {
        if (e.is_zero()) continue;
        if (count > best_count) {
            best = &e;
            best_count = count;
        }
    }
    plan.e_b = baseline_override ? *baseline_override : best->to_double();

    plan.phi = std::asin(std::sqrt(static_cast<double>(plan.m_targets) /
                                   static_cast<double>(total)));
    if (mode == PlanMode::Exact) {
        const double jstar = M_PI / (4 * plan.phi) - 0.5;
        const double r = std::round(jstar);
        plan.iterations = (std::abs(jstar - r) < 1e-12)
                              ? static_cast<int>(r)
                              : static_cast<int>(std::floor(jstar)) + 1;
        if (plan.iterations < 1) plan.iterations = 1;
        plan.mu = 2 * std::asin(std::sin(M_PI / (4 * plan.iterations + 2)) /
                                std::sin(plan.phi));
    } else {
        plan.iterations = 1;
        double arg = std::sin(M_PI / 6) / std::sin(plan.phi);
        if (arg > 1) {
            arg = 1;
            plan.clamped = true;
        }
        plan.mu = 2 * std::asin(arg);
    }
    plan.theta = theta_override ? *theta_override : plan.mu / plan.e_b;
    return plan;
}

}  // namespace qf
