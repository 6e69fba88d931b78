#include "qf/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "qf/errors.hpp"
#include "qf/parser.hpp"

namespace qf {
namespace {

using nlohmann::ordered_json;

/// Build + reduce, walking layout candidates until one is feasible.
void prepare(const RunOptions& options, RunReport& report) {
    report.n = options.n;
    report.shots = options.shots;
    report.seed = options.seed;
    report.deterministic = options.deterministic;

    if (options.equations_text) {
        report.source = "dsl";
        report.system = parse_equations(*options.equations_text);
        report.reduced = reduce(report.system);
        return;
    }

    report.source = "generated";
    auto [odd, twos] = split_even(options.n);
    report.twos = twos;
    if (odd < 9)
        throw NoFactorizationError("odd part of N is too small to factorize");

    std::vector<std::pair<int, int>> candidates;
    if (options.bits)
        candidates.push_back(*options.bits);
    else
        candidates = layout_candidates(odd);
    if (candidates.empty())
        throw NoFactorizationError("no admissible bit layout for N");

    for (auto [m, nn] : candidates) {
        try {
            EquationSystem sys = generate_biprime_system(odd, m, nn);
            ReducedSystem red = reduce(sys);
            report.system = std::move(sys);
            report.reduced = std::move(red);
            return;
        } catch (const LayoutError&) {
        } catch (const InfeasibleError&) {
        }
    }
    throw NoFactorizationError("no layout yields a factorization (N may be prime)");
}

StateVector simulate(const ZHamiltonian& h, const SearchPlan& plan,
                     const Circuit& lowered) {
    StateVector sv = StateVector::zero(h.n_qubits);
    if (plan.mode == PlanMode::Paper) {
        sv.apply(lowered);
        return sv;
    }
    // exact mode: idealized oracle between compiled diffusion layers
    Circuit zero = compile_zero_phase(h.n_qubits, plan.mu);
    auto hadamards = [&] {
        for (int i = 1; i <= h.n_qubits; ++i) sv.apply({GateKind::H, {i}});
    };
    hadamards();
    for (int it = 0; it < plan.iterations; ++it) {
        sv.apply_ideal_oracle(h, plan.mu);
        hadamards();
        sv.apply(zero);
        hadamards();
    }
    return sv;
}

ordered_json histogram_json(const CountHistogram& counts, int n_qubits) {
    ordered_json j = ordered_json::object();
    for (const auto& [basis, count] : counts)
        j[to_bitstring(basis, n_qubits)] = count;
    return j;
}

}  // namespace

RunReport run_reduce(const RunOptions& options) {
    RunReport report;
    prepare(options, report);
    report.trivial = report.reduced.free_order.empty() ||
                     report.reduced.residual.equations.empty();
    return report;
}

RunReport run_factorize(const RunOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    prepare(options, report);
    report.plan.mode = options.mode;

    const bool has_layout = report.reduced.residual.layout.has_value();
    if (!has_layout)
        throw std::invalid_argument(
            "equation input needs a 'layout' statement to decode factors");

    if (report.reduced.free_order.empty() ||
        report.reduced.residual.equations.empty()) {
        // solution forced (or all residual assignments valid): no search needed
        report.trivial = true;
        report.factors = decode_factors(report.reduced, 0);
        report.success_probability = 1.0;
    } else {
        report.hamiltonian = build_hamiltonian(report.reduced);
        report.plan = plan_search(report.hamiltonian, options.mode,
                                  options.theta_override, options.baseline_override);
        report.circuit = assemble_search(report.hamiltonian, report.plan);
        Circuit lowered = lower(report.circuit);
        report.lowered_gate_count = lowered.gates.size();

        report.final_state = simulate(report.hamiltonian, report.plan, lowered);
        report.success_probability =
            report.final_state.success_probability(report.hamiltonian);
        report.histogram = sample(report.final_state, options.shots, options.seed);

        // decode from the most probable ground state
        std::vector<std::uint64_t> grounds = ground_states(report.hamiltonian);
        std::stable_sort(grounds.begin(), grounds.end(),
                         [&](std::uint64_t a, std::uint64_t b) {
                             return report.final_state.probability(a) >
                                    report.final_state.probability(b);
                         });
        report.factors = decode_factors(report.reduced, grounds.front());

        if (options.with_tomography) {
            DensityMatrix rho_t = theoretical_density(report.final_state);
            auto counts =
                measure_all_settings(report.final_state, options.shots, options.seed);
            DensityMatrix rho_e = reconstruct(
                stokes_from_counts(counts, report.final_state.n_qubits));
            report.tomography_fidelity = fidelity(rho_t, rho_e);
            report.rho_e = std::move(rho_e);
        }
    }

    // cross-check: the reported factors (with extracted twos) rebuild N
    std::uint64_t product = std::uint64_t(1) << report.twos;
    for (auto f : report.factors) product *= f;
    if (product != report.n)
        throw std::logic_error("report verification: factor product != N");

    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

std::string spectrum_csv(const ZHamiltonian& h) {
    std::vector<Dyadic> d = h.diagonal();
    const Dyadic base = d[0];  // |0...0> sets the phase reference
    std::ostringstream os;
    os << "bitstring,eigenvalue,phase_over_theta\n";
    for (std::uint64_t b = 0; b < d.size(); ++b)
        os << to_bitstring(b, h.n_qubits) << "," << d[b].str() << ","
           << (base - d[b]).str() << "\n";
    return os.str();
}

nlohmann::ordered_json RunReport::to_json() const {
    ordered_json j;
    j["schema_version"] = 1;
    j["n"] = n;
    j["mode"] = plan.mode == PlanMode::Paper ? "paper" : "exact";
    j["source"] = source;
    j["power_of_two"] = twos;
    if (system.layout) {
        j["layout"]["odd_part"] = system.layout->n;
        j["layout"]["interior_bits"] = system.layout->interiors;
    }
    j["trivial"] = trivial;

    ordered_json red;
    red["fixed"] = reduced.fixed.size();
    red["substituted"] = reduced.substitutions.size();
    red["free"] = reduced.free_order.size();
    ordered_json frees = ordered_json::array();
    for (auto v : reduced.free_order)
        frees.push_back(reduced.residual.variables[v].name);
    red["free_variables"] = frees;
    ordered_json residual = ordered_json::array();
    for (const auto& eq : reduced.residual.equations)
        residual.push_back(print_polynomial(eq, reduced.residual) + " = 0");
    red["residual"] = residual;
    j["reduction"] = red;

    if (!trivial) {
        ordered_json ham;
        ham["n_qubits"] = hamiltonian.n_qubits;
        ham["text"] = hamiltonian.str();
        ordered_json terms = ordered_json::array();
        for (const auto& [mask, coeff] : hamiltonian.terms) {
            ordered_json term;
            ordered_json qs = ordered_json::array();
            for (int i = 1; i <= hamiltonian.n_qubits; ++i)
                if ((mask >> (i - 1)) & 1) qs.push_back(i);
            term["z"] = qs;
            term["coeff"] = coeff.str();
            terms.push_back(term);
        }
        ham["terms"] = terms;
        j["hamiltonian"] = ham;

        ordered_json p;
        p["iterations"] = plan.iterations;
        p["phi"] = plan.phi;
        p["mu"] = plan.mu;
        p["baseline_eigenvalue"] = plan.e_b;
        p["theta"] = plan.theta;
        p["clamped"] = plan.clamped;
        p["predicted_success"] = plan.predicted_success();
        j["plan"] = p;

        j["circuit"]["gates"] = circuit.gates.size();
        j["circuit"]["lowered_gates"] = lowered_gate_count;

        ordered_json sim;
        sim["oracle"] = plan.mode == PlanMode::Paper ? "compiled" : "idealized";
        sim["success_probability"] = success_probability;
        ordered_json probs = ordered_json::object();
        ordered_json amps = ordered_json::array();
        for (std::uint64_t b = 0; b < final_state.amps.size(); ++b) {
            probs[to_bitstring(b, final_state.n_qubits)] = final_state.probability(b);
            amps.push_back({final_state.amps[b].real(), final_state.amps[b].imag()});
        }
        sim["probabilities"] = probs;
        sim["amplitudes"] = amps;
        j["simulation"] = sim;
        j["histogram"] = histogram_json(histogram, final_state.n_qubits);
    }

    ordered_json facs = ordered_json::array();
    for (int i = 0; i < twos; ++i) facs.push_back(2);
    for (auto f : factors) facs.push_back(f);
    j["factors"] = facs;
    j["shots"] = shots;
    j["seed"] = seed;

    if (tomography_fidelity) {
        ordered_json t;
        t["fidelity"] = *tomography_fidelity;
        ordered_json re = ordered_json::array(), im = ordered_json::array();
        for (std::uint64_t r = 0; r < rho_e->dim(); ++r) {
            ordered_json rr = ordered_json::array(), ri = ordered_json::array();
            for (std::uint64_t c = 0; c < rho_e->dim(); ++c) {
                rr.push_back(rho_e->at(r, c).real());
                ri.push_back(rho_e->at(r, c).imag());
            }
            re.push_back(rr);
            im.push_back(ri);
        }
        t["rho_real"] = re;
        t["rho_imag"] = im;
        j["tomography"] = t;
    }
    if (!deterministic) j["wall_time_ms"] = wall_time_ms;
    return j;
}

}  // namespace qf
