#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qf/poly.hpp"

namespace qf {

/// Assignment over a system's variable table, index-aligned with it.
using Assignment = std::vector<int>;

/// Result of constraint reduction: every original variable is either fixed,
/// substituted (body is a multilinear polynomial over free variables), or
/// free. The residual mentions only free variables and preserves the
/// original solution set under lifting.
struct ReducedSystem {
    EquationSystem residual;  // shares the original variable table
    std::map<std::uint32_t, int> fixed;
    std::map<std::uint32_t, BinaryPolynomial> substitutions;
    std::vector<std::uint32_t> free_order;  // natural name order; qubit i = free_order[i-1]

    bool is_free(std::uint32_t v) const;
    /// Resolve a variable's value given values for the free variables.
    int value_of(std::uint32_t v, const std::map<std::uint32_t, int>& free_values) const;
    /// Lift a residual solution to a full assignment over all variables.
    Assignment lift(const std::map<std::uint32_t, int>& free_values) const;
};

/// Reduce to fixed assignments, substitutions and a small residual system.
/// Auto-generated biprime systems are solved exactly over their interior
/// factor bits (carries complete deterministically) and re-emitted in the
/// canonical pairwise-XOR form; other systems go through the propagation
/// rule engine. Throws InfeasibleError when the system has no solution.
ReducedSystem reduce(const EquationSystem& system);

/// Exact solution set by plain exhaustive enumeration; at most 26 variables.
std::vector<Assignment> brute_force_solutions(const EquationSystem& system);

/// Exact solution set by backtracking with interval pruning; no variable cap.
/// Independent of reduce()'s deduction machinery.
std::vector<Assignment> solve_system(const EquationSystem& system);

/// True iff lifting the residual's solutions through the reduction yields
/// exactly the original system's solution set.
bool verify_equivalence(const EquationSystem& original, const ReducedSystem& reduced);

/// Solutions of the residual restricted to the free variables (each entry is
/// index-aligned with free_order). Unconstrained free variables enumerate
/// both values.
std::vector<std::vector<int>> residual_solutions(const ReducedSystem& reduced);

}  // namespace qf
