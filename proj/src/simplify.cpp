#include "qf/simplify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qf/errors.hpp"

namespace qf {
namespace {

std::vector<std::uint32_t> natural_order(const EquationSystem& sys,
                                         const std::vector<std::uint32_t>& vars) {
    std::vector<std::uint32_t> out = vars;
    std::sort(out.begin(), out.end(), [&](std::uint32_t a, std::uint32_t b) {
        return natural_less(sys.variables[a].name, sys.variables[b].name);
    });
    return out;
}

std::vector<std::uint32_t> all_var_indices(const EquationSystem& sys) {
    std::vector<std::uint32_t> vs(sys.variables.size());
    for (std::uint32_t i = 0; i < vs.size(); ++i) vs[i] = i;
    return vs;
}

BinaryPolynomial const_poly(std::int64_t c) {
    BinaryPolynomial p;
    p.add_term({}, c);
    return p;
}

BinaryPolynomial var_poly(std::uint32_t v) {
    BinaryPolynomial p;
    p.add_term({v}, 1);
    return p;
}

BinaryPolynomial complement_poly(std::uint32_t v) {
    BinaryPolynomial p;
    p.add_term({}, 1);
    p.add_term({v}, -1);
    return p;
}

/// Substitute fixed values and substitution bodies into a polynomial.
BinaryPolynomial apply_env(const BinaryPolynomial& poly,
                           const std::map<std::uint32_t, int>& fixed,
                           const std::map<std::uint32_t, BinaryPolynomial>& subs) {
    BinaryPolynomial out;
    for (const auto& [mono, coeff] : poly.terms()) {
        BinaryPolynomial term = const_poly(coeff);
        bool zero = false;
        for (auto v : mono) {
            if (auto it = fixed.find(v); it != fixed.end()) {
                if (it->second == 0) {
                    zero = true;
                    break;
                }
            } else if (auto is = subs.find(v); is != subs.end()) {
                term = term.multiply(is->second);
            } else {
                term = term.multiply(var_poly(v));
            }
        }
        if (!zero) out.add(term);
    }
    return out;
}

/// Scale-normalize an equation p == 0: divide by the coefficient gcd and make
/// the leading coefficient positive, so scalar multiples compare equal.
BinaryPolynomial normalize_equation(const BinaryPolynomial& p) {
    std::int64_t g = 0;
    for (const auto& [m, c] : p.terms()) g = std::gcd(g, c);
    if (g == 0) return p;
    if (p.terms().begin()->second < 0) g = -g;
    BinaryPolynomial out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, c / g);
    return out;
}

std::string poly_key(const BinaryPolynomial& p) {
    std::ostringstream os;
    for (const auto& [m, c] : p.terms()) {
        for (auto v : m) os << v << ",";
        os << ":" << c << ";";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Rule engine (DSL systems)
// ---------------------------------------------------------------------------

struct Deduction {
    enum Kind { Fix, Pair, ZeroMono } kind;
    std::uint32_t var = 0;
    int value = 0;
    std::uint32_t other = 0;
    bool complement = false;  // for Pair: x + y == 1 vs x == y
    Monomial mono;            // for ZeroMono
};

constexpr int kLocalEnumCap = 20;

/// Enumerate one equation's {0,1} solutions and extract forced values and
/// always-complementary / always-equal variable pairs.
std::vector<Deduction> local_enumerate(const BinaryPolynomial& p) {
    std::vector<std::uint32_t> vs = p.variables();
    std::vector<Deduction> ded;
    if (vs.size() > kLocalEnumCap) {
        // fall back: monomials that are pairwise variable-disjoint act as
        // independent units
        std::vector<Monomial> monos;
        std::size_t total = 0;
        for (const auto& [m, c] : p.terms())
            if (!m.empty()) {
                monos.push_back(m);
                total += m.size();
            }
        std::set<std::uint32_t> uniq(vs.begin(), vs.end());
        if (total != uniq.size() || monos.size() > kLocalEnumCap) return ded;
        std::int64_t c0 = p.constant();
        std::uint64_t andm = ~0ull, orm = 0;
        bool any = false;
        for (std::uint64_t bits = 0; bits < (1ull << monos.size()); ++bits) {
            std::int64_t t = c0;
            std::size_t i = 0;
            for (const auto& [m, c] : p.terms()) {
                if (m.empty()) continue;
                if ((bits >> i) & 1) t += c;
                ++i;
            }
            if (t == 0) {
                any = true;
                andm &= bits;
                orm |= bits;
            }
        }
        if (!any) throw InfeasibleError("equation has no {0,1} solution");
        for (std::size_t i = 0; i < monos.size(); ++i) {
            bool forced1 = (andm >> i) & 1;
            bool forced0 = !((orm >> i) & 1);
            if (forced1) {
                for (auto v : monos[i]) ded.push_back({Deduction::Fix, v, 1});
            } else if (forced0) {
                if (monos[i].size() == 1)
                    ded.push_back({Deduction::Fix, monos[i][0], 0});
                else
                    ded.push_back({Deduction::ZeroMono, 0, 0, 0, false, monos[i]});
            }
        }
        return ded;
    }

    std::vector<std::pair<std::uint64_t, std::int64_t>> masked;
    for (const auto& [m, c] : p.terms()) {
        if (m.empty()) continue;
        std::uint64_t mask = 0;
        for (auto v : m)
            mask |= 1ull << (std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        masked.emplace_back(mask, c);
    }
    std::int64_t c0 = p.constant();
    std::vector<std::uint64_t> sols;
    std::uint64_t andm = ~0ull, orm = 0;
    for (std::uint64_t bits = 0; bits < (1ull << vs.size()); ++bits) {
        std::int64_t t = c0;
        for (const auto& [mask, c] : masked)
            if ((bits & mask) == mask) t += c;
        if (t == 0) {
            sols.push_back(bits);
            andm &= bits;
            orm |= bits;
        }
    }
    if (sols.empty()) throw InfeasibleError("equation has no {0,1} solution");
    std::uint64_t fixed_mask = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if ((andm >> i) & 1) {
            ded.push_back({Deduction::Fix, vs[i], 1});
            fixed_mask |= 1ull << i;
        } else if (!((orm >> i) & 1)) {
            ded.push_back({Deduction::Fix, vs[i], 0});
            fixed_mask |= 1ull << i;
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if ((fixed_mask >> i) & 1) continue;
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if ((fixed_mask >> j) & 1) continue;
            bool all_comp = true, all_eq = true;
            for (auto s : sols) {
                int bi = (s >> i) & 1, bj = (s >> j) & 1;
                if (bi + bj != 1) all_comp = false;
                if (bi != bj) all_eq = false;
                if (!all_comp && !all_eq) break;
            }
            if (all_comp)
                ded.push_back({Deduction::Pair, vs[i], 0, vs[j], true});
            else if (all_eq)
                ded.push_back({Deduction::Pair, vs[i], 0, vs[j], false});
        }
    }
    return ded;
}

/// Pick which variable of a pair to eliminate: p-kind goes, q-kind stays;
/// otherwise the name-order-earlier one goes.
std::pair<std::uint32_t, std::uint32_t> pair_elimination(const EquationSystem& sys,
                                                         std::uint32_t x,
                                                         std::uint32_t y) {
    const std::string hx = name_head(sys.variables[x].name);
    const std::string hy = name_head(sys.variables[y].name);
    if (hx == "p" && hy != "p") return {x, y};
    if (hy == "p" && hx != "p") return {y, x};
    if (natural_less(sys.variables[x].name, sys.variables[y].name)) return {x, y};
    return {y, x};
}

class RuleEngine {
  public:
    explicit RuleEngine(const EquationSystem& sys) : sys_(sys) {}

    ReducedSystem run() {
        work_ = sys_.equations;
        const int kMaxPasses = 10000;
        int pass = 0;
        for (; pass < kMaxPasses; ++pass) {
            if (!step()) break;
        }
        if (pass == kMaxPasses)
            throw std::runtime_error("reduce: no fixpoint after 10000 passes");

        ReducedSystem red;
        red.residual.variables = sys_.variables;
        red.residual.layout = sys_.layout;
        red.fixed = fixed_;
        red.substitutions = subs_;
        for (auto& p : work_) {
            BinaryPolynomial q = apply_env(p, fixed_, subs_);
            if (q.empty()) continue;
            if (q.is_constant()) throw InfeasibleError("contradictory constant equation");
            q = normalize_equation(q);
            if (std::find(red.residual.equations.begin(), red.residual.equations.end(), q) ==
                red.residual.equations.end())
                red.residual.equations.push_back(q);
        }
        std::vector<std::uint32_t> frees;
        for (auto v : all_var_indices(sys_))
            if (!fixed_.count(v) && !subs_.count(v)) frees.push_back(v);
        red.free_order = natural_order(sys_, frees);
        return red;
    }

  private:
    bool step() {
        bool changed = false;
        std::vector<BinaryPolynomial> next;
        for (auto& p : work_) {
            BinaryPolynomial q = apply_env(p, fixed_, subs_);
            if (q.empty()) continue;
            if (q.is_constant()) throw InfeasibleError("contradictory constant equation");
            next.push_back(std::move(q));
        }
        work_ = std::move(next);

        std::vector<Deduction> all;
        std::vector<BinaryPolynomial> splits;
        for (auto& p : work_) {
            auto [lo, hi] = p.range();
            if (lo > 0 || hi < 0) throw InfeasibleError("equation range excludes zero");
            // single-variable equations solve directly
            if (p.terms().size() <= 2) {
                const Monomial* mono = nullptr;
                std::int64_t coeff = 0;
                for (const auto& [m, c] : p.terms())
                    if (!m.empty()) {
                        mono = &m;
                        coeff = c;
                    }
                if (mono && mono->size() == 1) {
                    std::int64_t c0 = p.constant();
                    if (c0 % coeff == 0 && (-c0 / coeff == 0 || -c0 / coeff == 1)) {
                        all.push_back({Deduction::Fix, (*mono)[0],
                                       static_cast<int>(-c0 / coeff)});
                        continue;
                    }
                    throw InfeasibleError("single-variable equation unsatisfiable");
                }
            }
            std::string key = poly_key(p);
            if (quiet_.count(key)) continue;
            bool actionable = false;
            for (auto& d : local_enumerate(p)) {
                if (!admissible(d)) continue;
                if (d.kind == Deduction::ZeroMono) {
                    BinaryPolynomial z;
                    z.add_term(d.mono, 1);
                    if (std::find(work_.begin(), work_.end(), z) == work_.end() &&
                        std::find(splits.begin(), splits.end(), z) == splits.end()) {
                        splits.push_back(std::move(z));
                        actionable = true;
                    }
                    continue;
                }
                all.push_back(d);
                actionable = true;
            }
            if (!actionable) quiet_.insert(key);
        }

        for (auto& d : all) {
            if (!admissible(d)) continue;
            if (d.kind == Deduction::Fix) {
                fixed_[d.var] = d.value;
                changed = true;
            } else if (d.kind == Deduction::Pair) {
                auto [gone, kept] = pair_elimination(sys_, d.var, d.other);
                subs_[gone] = d.complement ? complement_poly(kept) : var_poly(kept);
                changed = true;
            }
        }
        for (auto& s : splits) {
            work_.push_back(std::move(s));
            changed = true;
        }
        // keep substitution bodies expressed over surviving variables
        for (auto& [v, body] : subs_) {
            std::map<std::uint32_t, BinaryPolynomial> others;
            for (auto& [w, b] : subs_)
                if (w != v) others.emplace(w, b);
            BinaryPolynomial nb = apply_env(body, fixed_, others);
            if (!(nb == body)) {
                body = std::move(nb);
                changed = true;
            }
        }
        if (!changed) changed = linear_eliminate();
        return changed;
    }

    bool admissible(const Deduction& d) const {
        if (d.kind == Deduction::Fix)
            return !fixed_.count(d.var) && !subs_.count(d.var);
        if (d.kind == Deduction::Pair) {
            // relations within one variable family stay in the residual
            if (name_head(sys_.variables[d.var].name) ==
                name_head(sys_.variables[d.other].name))
                return false;
            return !fixed_.count(d.var) && !subs_.count(d.var) &&
                   !fixed_.count(d.other) && !subs_.count(d.other);
        }
        return true;
    }

    /// Affine elimination: a pure-linear equation with a unit-coefficient
    /// variable defines that variable; a range constraint keeps the body in
    /// {0,1}.
    bool linear_eliminate() {
        for (auto& p0 : work_) {
            BinaryPolynomial p = apply_env(p0, fixed_, subs_);
            int n_linear = 0;
            bool pure = true;
            for (const auto& [m, c] : p.terms()) {
                if (m.empty()) continue;
                if (m.size() != 1) {
                    pure = false;
                    break;
                }
                ++n_linear;
            }
            if (!pure || n_linear < 3) continue;
            std::uint32_t best = 0;
            std::int64_t best_coeff = 0;
            bool found = false;
            for (const auto& [m, c] : p.terms()) {
                if (m.empty() || (c != 1 && c != -1)) continue;
                if (!found || natural_less(sys_.variables[best].name,
                                           sys_.variables[m[0]].name)) {
                    best = m[0];
                    best_coeff = c;
                    found = true;
                }
            }
            if (!found) continue;
            BinaryPolynomial body;
            for (const auto& [m, c] : p.terms()) {
                if (!m.empty() && m[0] == best && m.size() == 1) continue;
                body.add_term(m, -best_coeff * c);
            }
            subs_[best] = body;
            BinaryPolynomial bm1 = body;
            bm1.add_term({}, -1);
            BinaryPolynomial rc = body.multiply(bm1);
            if (!rc.empty()) work_.push_back(std::move(rc));
            return true;
        }
        return false;
    }

    const EquationSystem& sys_;
    std::vector<BinaryPolynomial> work_;
    std::map<std::uint32_t, int> fixed_;
    std::map<std::uint32_t, BinaryPolynomial> subs_;
    std::set<std::string> quiet_;
};

// ---------------------------------------------------------------------------
// Generated biprime systems: exact interior-bit solving
// ---------------------------------------------------------------------------

/// All (p, q) factor pairs compatible with the layout, as full assignments
/// over the system's variables (carries completed column by column).
std::vector<Assignment> generated_solutions(const EquationSystem& sys) {
    const FactorLayout& lay = *sys.layout;
    const int m = lay.interiors[0], nn = lay.interiors[1];
    const std::uint64_t n = lay.n;
    if (m + nn > 26) throw std::invalid_argument("too many interior bits");

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t pv = 0; pv < (1ull << m); ++pv) {
        std::uint64_t p = (1ull << (m + 1)) + 1 + (pv << 1);
        if (n % p) continue;
        std::uint64_t q = n / p;
        if ((q & 1) == 0) continue;
        if (q < (1ull << (nn + 1)) + 1 || q > (1ull << (nn + 2)) - 1) continue;
        pairs.emplace_back(p, q);
    }

    // carry structure from variable names: column -> [(dest, var)]
    std::map<int, std::vector<std::pair<int, std::uint32_t>>> carry_out;
    for (std::uint32_t v = 0; v < sys.variables.size(); ++v) {
        const auto& var = sys.variables[v];
        if (var.kind != VarKind::Carry) continue;
        auto us = var.name.find('_');
        int src = std::atoi(var.name.c_str() + 1);
        int dst = std::atoi(var.name.c_str() + us + 1);
        carry_out[src].emplace_back(dst, v);
    }

    std::vector<Assignment> out;
    for (auto [p, q] : pairs) {
        Assignment asg(sys.variables.size(), 0);
        for (int i = 1; i <= m; ++i)
            asg[sys.find("p" + std::to_string(i))] = static_cast<int>((p >> i) & 1);
        for (int j = 1; j <= nn; ++j)
            asg[sys.find("q" + std::to_string(j))] = static_cast<int>((q >> j) & 1);
        // complete carries: column sums determine them uniquely
        std::map<int, std::int64_t> carry_in;
        int top = carry_out.empty() ? 0 : carry_out.rbegin()->first;
        for (int k = 1; k <= top + 64; ++k) {
            std::int64_t s = carry_in.count(k) ? carry_in[k] : 0;
            for (int i = 0; i <= m + 1; ++i) {
                int j = k - i;
                if (j < 0 || j > nn + 1) continue;
                s += static_cast<std::int64_t>((p >> i) & 1) * ((q >> j) & 1);
            }
            std::int64_t rem = (s - static_cast<std::int64_t>((n >> k) & 1)) / 2;
            auto it = carry_out.find(k);
            if (it == carry_out.end()) continue;
            auto slots = it->second;
            std::sort(slots.begin(), slots.end());
            for (std::size_t l = 0; l < slots.size(); ++l) {
                int bit = static_cast<int>((rem >> l) & 1);
                asg[slots[l].second] = bit;
                carry_in[slots[l].first] += bit;
            }
        }
        for (const auto& eq : sys.equations)
            if (eq.evaluate(asg) != 0)
                throw std::logic_error("carry completion inconsistent with system");
        out.push_back(std::move(asg));
    }
    return out;
}

/// XOR-of-two-variables polynomial: x + y - 2xy (- 1 when they must differ).
BinaryPolynomial xor_poly(std::uint32_t x, std::uint32_t y, int target) {
    BinaryPolynomial p;
    p.add_term({x}, 1);
    p.add_term({y}, 1);
    p.add_term({x, y}, -2);
    if (target) p.add_term({}, -1);
    return p;
}

ReducedSystem reduce_generated(const EquationSystem& sys) {
    std::vector<Assignment> sols = generated_solutions(sys);
    if (sols.empty())
        throw InfeasibleError("no factorization with this bit layout");

    ReducedSystem red;
    red.residual.variables = sys.variables;
    red.residual.layout = sys.layout;

    auto constant_value = [&](std::uint32_t v) -> int {
        int first = sols[0][v];
        for (const auto& s : sols)
            if (s[v] != first) return -1;
        return first;
    };

    std::vector<std::uint32_t> varying;
    for (auto v : all_var_indices(sys)) {
        int c = constant_value(v);
        if (c >= 0)
            red.fixed[v] = c;
        else
            varying.push_back(v);
    }

    // keep q-variables free; express everything else in terms of them
    std::vector<std::uint32_t> frees;
    std::vector<std::uint32_t> rest;
    for (auto v : varying) {
        if (name_head(sys.variables[v].name) == "q")
            frees.push_back(v);
        else
            rest.push_back(v);
    }
    frees = natural_order(sys, frees);

    for (auto v : rest) {
        // prefer the same-bit-index partner, then natural order
        std::vector<std::uint32_t> cand = frees;
        std::stable_sort(cand.begin(), cand.end(), [&](std::uint32_t a, std::uint32_t b) {
            bool ma = sys.variables[a].bit == sys.variables[v].bit;
            bool mb = sys.variables[b].bit == sys.variables[v].bit;
            return ma > mb;
        });
        bool done = false;
        for (auto w : cand) {
            bool all_comp = true, all_eq = true;
            for (const auto& s : sols) {
                if (s[v] + s[w] != 1) all_comp = false;
                if (s[v] != s[w]) all_eq = false;
            }
            if (all_comp) {
                red.substitutions[v] = complement_poly(w);
                done = true;
                break;
            }
            if (all_eq) {
                red.substitutions[v] = var_poly(w);
                done = true;
                break;
            }
        }
        if (done) continue;
        // multilinear interpolation over the free variables
        if (frees.size() > 16)
            throw std::runtime_error("reduction: interpolation over too many free bits");
        BinaryPolynomial body;
        for (const auto& s : sols) {
            if (s[v] == 0) continue;
            BinaryPolynomial term = const_poly(1);
            for (auto w : frees)
                term = term.multiply(s[w] ? var_poly(w) : complement_poly(w));
            body.add(term);
        }
        red.substitutions[v] = std::move(body);
    }
    red.free_order = frees;

    // residual: pairwise XOR equations where the solutions share a parity
    std::set<std::vector<int>> target;
    for (const auto& s : sols) {
        std::vector<int> t;
        for (auto w : frees) t.push_back(s[w]);
        target.insert(t);
    }
    std::vector<BinaryPolynomial> residual;
    for (std::size_t i = 0; i < frees.size(); ++i) {
        for (std::size_t j = i + 1; j < frees.size(); ++j) {
            int x = -1;
            bool uniform = true;
            for (const auto& t : target) {
                int cur = t[i] ^ t[j];
                if (x < 0)
                    x = cur;
                else if (x != cur)
                    uniform = false;
            }
            if (uniform && x >= 0) residual.push_back(xor_poly(frees[i], frees[j], x));
        }
    }
    // accept the XOR form only if it pins exactly the right solution set
    std::set<std::vector<int>> got;
    for (std::uint64_t bits = 0; bits < (1ull << frees.size()); ++bits) {
        Assignment asg(sys.variables.size(), 0);
        std::vector<int> t(frees.size());
        for (std::size_t i = 0; i < frees.size(); ++i) {
            t[i] = static_cast<int>((bits >> i) & 1);
            asg[frees[i]] = t[i];
        }
        bool ok = true;
        for (const auto& r : residual)
            if (r.evaluate(asg) != 0) {
                ok = false;
                break;
            }
        if (ok) got.insert(t);
    }
    if (got != target) {
        // fall back: indicator polynomial over the non-solutions
        residual.clear();
        BinaryPolynomial ind;
        for (std::uint64_t bits = 0; bits < (1ull << frees.size()); ++bits) {
            std::vector<int> t(frees.size());
            for (std::size_t i = 0; i < frees.size(); ++i)
                t[i] = static_cast<int>((bits >> i) & 1);
            if (target.count(t)) continue;
            BinaryPolynomial term = const_poly(1);
            for (std::size_t i = 0; i < frees.size(); ++i)
                term = term.multiply(t[i] ? var_poly(frees[i])
                                          : complement_poly(frees[i]));
            ind.add(term);
        }
        if (!ind.empty()) residual.push_back(std::move(ind));
    }
    red.residual.equations = std::move(residual);
    return red;
}

}  // namespace

bool ReducedSystem::is_free(std::uint32_t v) const {
    return !fixed.count(v) && !substitutions.count(v);
}

int ReducedSystem::value_of(std::uint32_t v,
                            const std::map<std::uint32_t, int>& free_values) const {
    if (auto it = free_values.find(v); it != free_values.end()) return it->second;
    if (auto it = fixed.find(v); it != fixed.end()) return it->second;
    auto it = substitutions.find(v);
    if (it == substitutions.end())
        throw std::logic_error("value_of: unbound variable");
    std::int64_t total = 0;
    for (const auto& [mono, coeff] : it->second.terms()) {
        std::int64_t prod = coeff;
        for (auto w : mono) {
            if (w == v) throw std::logic_error("value_of: self-referential substitution");
            if (value_of(w, free_values) == 0) {
                prod = 0;
                break;
            }
        }
        total += prod;
    }
    if (total != 0 && total != 1)
        throw std::logic_error("value_of: substitution body outside {0,1}");
    return static_cast<int>(total);
}

Assignment ReducedSystem::lift(const std::map<std::uint32_t, int>& free_values) const {
    Assignment asg(residual.variables.size(), 0);
    for (std::uint32_t v = 0; v < asg.size(); ++v) asg[v] = value_of(v, free_values);
    return asg;
}

ReducedSystem reduce(const EquationSystem& system) {
    if (system.generated && system.layout && system.layout->interiors.size() == 2)
        return reduce_generated(system);
    if (system.variables.size() > 64)
        throw std::invalid_argument("reduce: more than 64 variables");
    RuleEngine engine(system);
    return engine.run();
}

std::vector<Assignment> brute_force_solutions(const EquationSystem& system) {
    if (system.variables.size() > 26)
        throw std::invalid_argument("brute_force_solutions: more than 26 variables");
    std::vector<Assignment> out;
    const std::size_t nv = system.variables.size();
    for (std::uint64_t bits = 0; bits < (1ull << nv); ++bits) {
        Assignment asg(nv);
        for (std::size_t i = 0; i < nv; ++i) asg[i] = static_cast<int>((bits >> i) & 1);
        bool ok = true;
        for (const auto& eq : system.equations)
            if (eq.evaluate(asg) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(asg));
    }
    return out;
}

std::vector<Assignment> solve_system(const EquationSystem& system) {
    const std::size_t nv = system.variables.size();
    std::vector<Assignment> out;
    Assignment asg(nv, -1);

    // equations indexed by the variables they mention, for incremental checks
    std::vector<std::vector<std::size_t>> eqs_of_var(nv);
    for (std::size_t e = 0; e < system.equations.size(); ++e)
        for (auto v : system.equations[e].variables()) eqs_of_var[v].push_back(e);

    // interval pruning: equation satisfiable given the partial assignment?
    auto eq_feasible = [&](const BinaryPolynomial& eq) {
        std::int64_t lo = 0, hi = 0;
        for (const auto& [mono, coeff] : eq.terms()) {
            int state = 1;  // 1 known-one product, 0 known-zero, -1 undecided
            for (auto v : mono) {
                if (asg[v] == 0) {
                    state = 0;
                    break;
                }
                if (asg[v] == -1) state = -1;
            }
            if (state == 0) continue;
            if (state == 1) {
                lo += coeff;
                hi += coeff;
            } else {
                (coeff > 0 ? hi : lo) += coeff;
            }
        }
        return lo <= 0 && hi >= 0;
    };

    for (const auto& eq : system.equations)
        if (!eq_feasible(eq)) return out;

    // only equations touching the freshly assigned variable can newly fail
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == nv) {
            out.push_back(asg);
            return;
        }
        for (int b = 0; b <= 1; ++b) {
            asg[i] = b;
            bool ok = true;
            for (auto e : eqs_of_var[i])
                if (!eq_feasible(system.equations[e])) {
                    ok = false;
                    break;
                }
            if (ok) rec(i + 1);
        }
        asg[i] = -1;
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> residual_solutions(const ReducedSystem& reduced) {
    const auto& frees = reduced.free_order;
    if (frees.size() > 26)
        throw std::invalid_argument("residual_solutions: too many free variables");
    std::vector<std::vector<int>> out;
    Assignment asg(reduced.residual.variables.size(), 0);
    for (std::uint64_t bits = 0; bits < (1ull << frees.size()); ++bits) {
        std::vector<int> t(frees.size());
        for (std::size_t i = 0; i < frees.size(); ++i) {
            t[i] = static_cast<int>((bits >> i) & 1);
            asg[frees[i]] = t[i];
        }
        bool ok = true;
        for (const auto& eq : reduced.residual.equations)
            if (eq.evaluate(asg) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(t));
    }
    return out;
}

bool verify_equivalence(const EquationSystem& original, const ReducedSystem& reduced) {
    std::vector<Assignment> orig = original.variables.size() <= 26
                                       ? brute_force_solutions(original)
                                       : solve_system(original);
    std::set<Assignment> lifted;
    for (const auto& t : residual_solutions(reduced)) {
        std::map<std::uint32_t, int> fv;
        for (std::size_t i = 0; i < reduced.free_order.size(); ++i)
            fv[reduced.free_order[i]] = t[i];
        try {
            lifted.insert(reduced.lift(fv));
        } catch (const std::logic_error&) {
            return false;
        }
    }
    std::set<Assignment> os(orig.begin(), orig.end());
    return os == lifted;
}

}  // namespace qf
