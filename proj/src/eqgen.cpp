#include "qf/eqgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qf/errors.hpp"

namespace qf {
namespace {

int bit_length(std::uint64_t v) {
    int n = 0;
    while (v) {
        ++n;
        v >>= 1;
    }
    return n;
}

int ceil_log2(int v) {
    int n = 0;
    while ((1 << n) < v) ++n;
    return n;
}

bool layout_feasible(std::uint64_t n, int m, int nn) {
    // factor ranges: [2^(m+1)+1, 2^(m+2)-1] (odd, leading/trailing 1)
    auto lo = [](int b) { return (std::uint64_t(1) << (b + 1)) + 1; };
    auto hi = [](int b) { return (std::uint64_t(1) << (b + 2)) - 1; };
    return lo(m) * lo(nn) <= n && n <= hi(m) * hi(nn);
}

}  // namespace

std::pair<std::uint64_t, int> split_even(std::uint64_t n) {
    int twos = 0;
    while (n > 0 && (n & 1) == 0) {
        n >>= 1;
        ++twos;
    }
    return {n, twos};
}

EquationSystem generate_biprime_system(std::uint64_t n, int m_bits, int n_bits) {
    if (n < 9 || (n & 1) == 0)
        throw LayoutError("N must be odd and >= 9");
    if (m_bits > n_bits)
        throw LayoutError("require m <= n");
    if (!layout_feasible(n, m_bits, n_bits))
        throw LayoutError("layout (" + std::to_string(m_bits) + "," +
                          std::to_string(n_bits) + ") infeasible for N=" +
                          std::to_string(n));

    EquationSystem sys;
    sys.generated = true;
    sys.layout = FactorLayout{n, 0, {m_bits, n_bits}};

    auto var = [&](const std::string& name) { return sys.intern(classify_variable(name)); };

    // Interior bits first so the table order matches the natural order.
    for (int i = 1; i <= m_bits; ++i) var("p" + std::to_string(i));
    for (int j = 1; j <= n_bits; ++j) var("q" + std::to_string(j));

    // bit i of factor p as a polynomial (constant 1 at the ends)
    auto pbit = [&](int i) -> std::optional<BinaryPolynomial> {
        BinaryPolynomial poly;
        if (i == 0 || i == m_bits + 1) {
            poly.add_term({}, 1);
            return poly;
        }
        if (i >= 1 && i <= m_bits) {
            poly.add_term({var("p" + std::to_string(i))}, 1);
            return poly;
        }
        return std::nullopt;
    };
    auto qbit = [&](int j) -> std::optional<BinaryPolynomial> {
        BinaryPolynomial poly;
        if (j == 0 || j == n_bits + 1) {
            poly.add_term({}, 1);
            return poly;
        }
        if (j >= 1 && j <= n_bits) {
            poly.add_term({var("q" + std::to_string(j))}, 1);
            return poly;
        }
        return std::nullopt;
    };

    std::map<int, std::vector<std::uint32_t>> carries_in;  // column -> carry vars
    const int nbits = bit_length(n);
    for (int k = 1; k <= 4 * (m_bits + n_bits) + 64; ++k) {
        std::vector<BinaryPolynomial> products;
        for (int i = 0; i <= m_bits + 1; ++i) {
            int j = k - i;
            auto pb = pbit(i);
            auto qb = qbit(j);
            if (pb && qb) products.push_back(pb->multiply(*qb));
        }
        auto cin = carries_in.find(k);
        std::size_t n_cin = cin == carries_in.end() ? 0 : cin->second.size();
        if (products.empty() && n_cin == 0 && k >= nbits) break;

        BinaryPolynomial eq;
        for (const auto& p : products) eq.add(p);
        if (cin != carries_in.end())
            for (auto c : cin->second) eq.add_term({c}, 1);
        eq.add_term({}, -static_cast<std::int64_t>((n >> k) & 1));

        int max_sum = static_cast<int>(products.size() + n_cin);
        int n_carry = max_sum >= 2 ? ceil_log2(max_sum) : 0;
        for (int l = 1; l <= n_carry; ++l) {
            std::string cname = "c" + std::to_string(k) + "_" + std::to_string(k + l);
            std::uint32_t cv = var(cname);
            carries_in[k + l].push_back(cv);
            eq.add_term({cv}, -(std::int64_t(1) << l));
        }
        if (!eq.empty()) sys.equations.push_back(std::move(eq));
    }
    return sys;
}

std::vector<std::pair<int, int>> layout_candidates(std::uint64_t n) {
    std::vector<std::pair<int, int>> out;
    int bl = bit_length(n);
    for (int m = 0; m + 2 <= bl; ++m) {
        for (int nn = m; m + nn + 2 <= bl && nn + 2 <= bl; ++nn) {
            if (m + nn + 4 < bl) continue;
            if (layout_feasible(n, m, nn)) out.emplace_back(m, nn);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](auto a, auto b) {
        int da = a.second - a.first, db = b.second - b.first;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return out;
}

}  // namespace qf
