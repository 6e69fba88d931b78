#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "qf/compiler.hpp"
#include "qf/eqgen.hpp"
#include "qf/hamiltonian.hpp"
#include "qf/searchplan.hpp"
#include "qf/simplify.hpp"
#include "qf/simulator.hpp"
#include "qf/tomography.hpp"

#include "json.hpp"

namespace qf {

/// No layout admits a factorization (N prime, or every candidate infeasible).
struct NoFactorizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    std::uint64_t n = 0;
    PlanMode mode = PlanMode::Exact;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 1;
    std::optional<std::string> equations_text;     // DSL source instead of eqgen
    std::optional<std::pair<int, int>> bits;       // fixed (m, n) layout
    std::optional<double> theta_override;
    std::optional<double> baseline_override;
    bool with_tomography = false;
    bool deterministic = false;  // omit wall time from the report
};

struct RunReport {
    std::uint64_t n = 0;
    int twos = 0;  // extracted powers of two
    std::string source;  // "generated" or "dsl"
    EquationSystem system;
    ReducedSystem reduced;
    ZHamiltonian hamiltonian;
    SearchPlan plan;
    bool trivial = false;  // no free variables: factorization forced classically
    Circuit circuit;       // compiled, unlowered
    std::size_t lowered_gate_count = 0;
    StateVector final_state;
    double success_probability = 0;
    CountHistogram histogram;
    std::vector<std::uint64_t> factors;  // odd factors, descending probability order
    std::optional<double> tomography_fidelity;
    std::optional<DensityMatrix> rho_e;
    std::uint64_t shots = 0, seed = 0;
    double wall_time_ms = 0;
    bool deterministic = false;

    nlohmann::ordered_json to_json() const;
};

/// End-to-end pipeline. Exceptions map to CLI exit codes: ParseError /
/// std::invalid_argument -> 1, NoFactorizationError -> 2, std::logic_error
/// (verification) -> 3.
RunReport run_factorize(const RunOptions& options);

/// Reduction stage only (same layout search as run_factorize).
RunReport run_reduce(const RunOptions& options);

/// One row per basis state: bitstring, eigenvalue, phase relative to |0...0>
/// in units of theta.
std::string spectrum_csv(const ZHamiltonian& h);

}  // namespace qf
