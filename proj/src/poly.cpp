#include "qf/poly.hpp"

#include <algorithm>
#include <cctype>

namespace qf {

std::string name_head(const std::string& name) {
    std::size_t i = 0;
    while (i < name.size() && !std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    return name.substr(0, i);
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            long long na = std::stoll(a.substr(i, i2 - i));
            long long nb = std::stoll(b.substr(j, j2 - j));
            if (na != nb) return na < nb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

void BinaryPolynomial::add_term(Monomial vars, std::int64_t coeff) {
    if (coeff == 0) return;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    auto it = terms_.find(vars);
    if (it == terms_.end()) {
        terms_.emplace(std::move(vars), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void BinaryPolynomial::add(const BinaryPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
}

void BinaryPolynomial::scale(std::int64_t c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, v] : terms_) v *= c;
}

BinaryPolynomial BinaryPolynomial::multiply(const BinaryPolynomial& other) const {
    BinaryPolynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(),
                           std::back_inserter(m));
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

std::int64_t BinaryPolynomial::constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? 0 : it->second;
}

bool BinaryPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::int64_t BinaryPolynomial::evaluate(const std::vector<int>& assignment) const {
    std::int64_t total = 0;
    for (const auto& [m, c] : terms_) {
        std::int64_t prod = c;
        for (auto v : m) {
            if (assignment[v] == 0) {
                prod = 0;
                break;
            }
        }
        total += prod;
    }
    return total;
}

std::pair<std::int64_t, std::int64_t> BinaryPolynomial::range() const {
    std::int64_t lo = constant(), hi = constant();
    for (const auto& [m, c] : terms_) {
        if (m.empty()) continue;
        (c > 0 ? hi : lo) += c;
    }
    return {lo, hi};
}

std::vector<std::uint32_t> BinaryPolynomial::variables() const {
    std::vector<std::uint32_t> vs;
    for (const auto& [m, c] : terms_) vs.insert(vs.end(), m.begin(), m.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::uint32_t EquationSystem::intern(const VariableId& v) {
    int idx = find(v.name);
    if (idx >= 0) return static_cast<std::uint32_t>(idx);
    variables.push_back(v);
    return static_cast<std::uint32_t>(variables.size() - 1);
}

int EquationSystem::find(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i].name == name) return static_cast<int>(i);
    return -1;
}

VariableId classify_variable(const std::string& name) {
    VariableId v;
    v.name = name;
    std::string head = name_head(name);
    if (head == "c" && name.find('_') != std::string::npos) {
        v.kind = VarKind::Carry;
        return v;
    }
    v.kind = VarKind::FactorBit;
    if (head.size() == 1 && head[0] >= 'p' && head[0] <= 'z' && name.size() > 1) {
        v.factor = head[0] - 'p';
        v.bit = std::atoi(name.c_str() + 1);
    }
    return v;
}

}  // namespace qf
