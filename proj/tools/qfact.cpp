// qfact: factor small odd multi-prime integers through constraint reduction,
// a diagonal phase-oracle Hamiltonian and a simulated exact search.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qf/errors.hpp"
#include "qf/parser.hpp"
#include "qf/pipeline.hpp"

namespace {

using namespace qf;

struct CommonArgs {
    std::uint64_t n = 0;
    std::string mode = "exact";
    std::uint64_t shots = 8192;
    std::uint64_t seed = 1;
    std::string equations_file;
    std::string bits;
    double theta = 0;
    bool has_theta = false;
    double baseline = 0;
    bool has_baseline = false;
    std::string emit_qasm_file;
    std::string json_file;
    bool with_tomography = false;
    bool deterministic = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("N", args.n, "integer to factorize")->required();
    cmd->add_option("--mode", args.mode, "search schedule: exact or paper")
        ->check(CLI::IsMember({"exact", "paper"}));
    cmd->add_option("--shots", args.shots, "measurement shots (default 8192)");
    cmd->add_option("--seed", args.seed, "PRNG seed (default 1)");
    cmd->add_option("--equations", args.equations_file,
                    "equation-DSL file replacing the generated system");
    cmd->add_option("--bits", args.bits, "fixed interior bit split m,n");
    cmd->add_option("--theta", args.theta, "oracle angle override")
        ->each([&](const std::string&) { args.has_theta = true; });
    cmd->add_option("--baseline", args.baseline, "baseline eigenvalue override")
        ->each([&](const std::string&) { args.has_baseline = true; });
    cmd->add_option("--emit-qasm", args.emit_qasm_file, "write the lowered circuit");
    cmd->add_option("--json", args.json_file, "write the JSON run report");
    cmd->add_flag("--tomography", args.with_tomography,
                  "reconstruct the final state and report fidelity");
    cmd->add_flag("--deterministic", args.deterministic,
                  "omit wall time so identical runs give identical reports");
}

RunOptions to_options(const CommonArgs& args) {
    RunOptions opt;
    opt.n = args.n;
    opt.mode = args.mode == "paper" ? PlanMode::Paper : PlanMode::Exact;
    opt.shots = args.shots;
    opt.seed = args.seed;
    opt.with_tomography = args.with_tomography;
    opt.deterministic = args.deterministic;
    if (args.has_theta) opt.theta_override = args.theta;
    if (args.has_baseline) opt.baseline_override = args.baseline;
    if (!args.equations_file.empty()) {
        std::ifstream in(args.equations_file);
        if (!in) throw std::invalid_argument("cannot open " + args.equations_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        opt.equations_text = buf.str();
    }
    if (!args.bits.empty()) {
        int m = 0, nn = 0;
        if (std::sscanf(args.bits.c_str(), "%d,%d", &m, &nn) != 2)
            throw std::invalid_argument("--bits expects m,n");
        opt.bits = {m, nn};
    }
    return opt;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

void emit_artifacts(const CommonArgs& args, const RunReport& report) {
    if (!args.json_file.empty())
        write_file(args.json_file, report.to_json().dump(2) + "\n");
    if (!args.emit_qasm_file.empty()) {
        if (report.trivial)
            throw std::invalid_argument("trivial instance has no circuit to emit");
        write_file(args.emit_qasm_file, export_qasm(report.circuit));
    }
}

int cmd_factorize(const CommonArgs& args) {
    RunReport report = run_factorize(to_options(args));
    if (report.plan.clamped)
        std::fprintf(stderr,
                     "warning: marking-phase arcsin argument clamped to 1; "
                     "single-iteration schedule cannot reach certainty\n");
    std::printf("N = %llu\n", static_cast<unsigned long long>(report.n));
    std::printf("factors =");
    for (int i = 0; i < report.twos; ++i) std::printf(" 2");
    for (auto f : report.factors)
        std::printf(" %llu", static_cast<unsigned long long>(f));
    std::printf("\n");
    if (report.trivial) {
        std::printf("trivial layout: solution forced without search\n");
    } else {
        std::printf("qubits = %d, iterations = %d, theta = %.12g\n",
                    report.hamiltonian.n_qubits, report.plan.iterations,
                    report.plan.theta);
        std::printf("success probability = %.10f\n", report.success_probability);
        for (std::uint64_t b = 0; b < report.final_state.amps.size(); ++b) {
            double p = report.final_state.probability(b);
            if (p > 1e-9)
                std::printf("P(|%s>) = %.10f\n",
                            to_bitstring(b, report.final_state.n_qubits).c_str(), p);
        }
        if (report.tomography_fidelity)
            std::printf("tomography fidelity = %.6f\n", *report.tomography_fidelity);
    }
    emit_artifacts(args, report);
    return 0;
}

int cmd_reduce(const CommonArgs& args) {
    RunReport report = run_reduce(to_options(args));
    if (report.trivial && report.reduced.free_order.empty())
        std::printf("trivial layout\n");
    std::printf("fixed = %zu, substituted = %zu, free = %zu\n",
                report.reduced.fixed.size(), report.reduced.substitutions.size(),
                report.reduced.free_order.size());
    for (const auto& eq : report.reduced.residual.equations)
        std::printf("%s = 0\n",
                    print_polynomial(eq, report.reduced.residual).c_str());
    if (!args.json_file.empty())
        write_file(args.json_file, report.to_json().dump(2) + "\n");
    return 0;
}

int cmd_spectrum(const CommonArgs& args) {
    RunReport report = run_reduce(to_options(args));
    if (report.trivial)
        throw std::invalid_argument("trivial instance has no spectrum");
    ZHamiltonian h = build_hamiltonian(report.reduced);
    std::string csv = spectrum_csv(h);
    std::printf("%s", csv.c_str());
    if (!args.json_file.empty()) write_file(args.json_file, csv);
    return 0;
}

int cmd_emit_qasm(CommonArgs args) {
    if (args.emit_qasm_file.empty()) {
        RunReport report = run_factorize(to_options(args));
        if (report.trivial)
            throw std::invalid_argument("trivial instance has no circuit to emit");
        std::printf("%s", export_qasm(report.circuit).c_str());
        return 0;
    }
    RunReport report = run_factorize(to_options(args));
    emit_artifacts(args, report);
    return 0;
}

int cmd_tomography(CommonArgs args) {
    args.with_tomography = true;
    RunReport report = run_factorize(to_options(args));
    if (!report.tomography_fidelity)
        throw std::invalid_argument("trivial instance has no state to reconstruct");
    std::printf("fidelity = %.6f\n", *report.tomography_fidelity);
    std::printf("%s", report.rho_e->str().c_str());
    emit_artifacts(args, report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"factorization by reduced multiplication constraints and "
                 "simulated exact search"};
    app.require_subcommand(1);

    CommonArgs args;
    auto* factorize = app.add_subcommand("factorize", "run the full pipeline");
    add_common(factorize, args);
    auto* reduce_cmd = app.add_subcommand("reduce", "stop after constraint reduction");
    add_common(reduce_cmd, args);
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue/phase table CSV");
    add_common(spectrum, args);
    auto* emit = app.add_subcommand("emit-qasm", "compile and export the circuit");
    add_common(emit, args);
    auto* tomo = app.add_subcommand("tomography", "reconstruct the final state");
    add_common(tomo, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (factorize->parsed()) return cmd_factorize(args);
        if (reduce_cmd->parsed()) return cmd_reduce(args);
        if (spectrum->parsed()) return cmd_spectrum(args);
        if (emit->parsed()) return cmd_emit_qasm(args);
        if (tomo->parsed()) return cmd_tomography(args);
    } catch (const qf::NoFactorizationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const qf::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::logic_error& e) {
        std::fprintf(stderr, "internal verification failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 1;
}
