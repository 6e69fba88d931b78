#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qf {

enum class VarKind { FactorBit, Carry };

/// A named {0,1} variable. Factor bits carry (factor index, bit index); carry
/// variables record source/destination columns in the name (c<k>_<l>).
struct VariableId {
    std::string name;
    VarKind kind = VarKind::FactorBit;
    int factor = -1;  // 0 = p, 1 = q, 2 = r, ... ; -1 for carries
    int bit = -1;     // bit index within the factor; -1 for carries

    friend bool operator==(const VariableId& a, const VariableId& b) {
        return a.name == b.name;
    }
};

/// Natural ordering for variable names: alphabetic head, then numeric runs
/// compared as integers ("q2" < "q10"). Determines qubit assignment order.
bool natural_less(const std::string& a, const std::string& b);

/// Leading alphabetic part of a variable name ("q3" -> "q").
std::string name_head(const std::string& name);

using Monomial = std::vector<std::uint32_t>;  // strictly sorted var indices

/// Multilinear polynomial over {0,1} variables, idempotence-normalized
/// (x^2 == x). Variables are indices into the owning system's table; the
/// empty monomial holds the constant.
class BinaryPolynomial {
  public:
    void add_term(Monomial vars, std::int64_t coeff);
    void add(const BinaryPolynomial& other);
    void scale(std::int64_t c);

    /// Product with idempotence folding.
    BinaryPolynomial multiply(const BinaryPolynomial& other) const;

    std::int64_t constant() const;
    bool empty() const { return terms_.empty(); }
    bool is_constant() const;

    std::int64_t evaluate(const std::vector<int>& assignment) const;

    /// Range of attainable values over {0,1} assignments.
    std::pair<std::int64_t, std::int64_t> range() const;

    /// All variable indices appearing in any term.
    std::vector<std::uint32_t> variables() const;

    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

    friend bool operator==(const BinaryPolynomial& a, const BinaryPolynomial& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<Monomial, std::int64_t> terms_;
};

/// Bit layout of the sought factors: every factor is {1 x_m ... x_1 1} with
/// `interior` free bits between the fixed leading/trailing ones.
struct FactorLayout {
    std::uint64_t n = 0;          // odd part being factorized
    int twos = 0;                 // extracted power of two from the original input
    std::vector<int> interiors;   // interior bit count per factor (m, n, ...)
};

/// A conjunction of polynomial equations, each read as "= 0", over a shared
/// variable table.
struct EquationSystem {
    std::vector<VariableId> variables;
    std::vector<BinaryPolynomial> equations;
    std::optional<FactorLayout> layout;
    bool generated = false;  // true when produced by generate_biprime_system

    std::uint32_t intern(const VariableId& v);
    int find(const std::string& name) const;  // -1 when absent
};

/// Classify a name like "p3"/"q12"/"c4_6" into a VariableId.
VariableId classify_variable(const std::string& name);

}  // namespace qf
