#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qf/poly.hpp"

namespace qf {

/// Column/carry constraint system for N = p*q with p = {1 p_m..p_1 1} and
/// q = {1 q_n..q_1 1}. One equation per output column:
///   sum_{i+j=k} p_i q_j + carries_in(k) - N_k - sum_l 2^l c_{k,k+l} = 0.
/// Throws LayoutError when no factor pair with this bit layout can reach N.
EquationSystem generate_biprime_system(std::uint64_t n, int m_bits, int n_bits);

/// All admissible (m, n) interior-bit splits for odd composite N, m <= n,
/// ordered by |m - n| ascending (equal-length split first), then by m.
std::vector<std::pair<int, int>> layout_candidates(std::uint64_t n);

/// Strip factors of two; returns {odd part, exponent of two}.
std::pair<std::uint64_t, int> split_even(std::uint64_t n);

}  // namespace qf
