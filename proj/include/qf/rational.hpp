#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qf {

/// Exact dyadic rational: num / 2^log2_den, kept normalized (num odd or zero).
/// All Hamiltonian coefficients have power-of-two denominators, so this is a
/// closed arithmetic domain for the expansion.
struct Dyadic {
    std::int64_t num = 0;
    int log2_den = 0;

    Dyadic() = default;
    Dyadic(std::int64_t n) : num(n), log2_den(0) {}
    Dyadic(std::int64_t n, int l2d) : num(n), log2_den(l2d) { normalize(); }

    void normalize() {
        if (num == 0) {
            log2_den = 0;
            return;
        }
        while (log2_den > 0 && (num & 1) == 0) {
            num >>= 1;
            --log2_den;
        }
        if (log2_den < 0) {
            num <<= -log2_den;
            log2_den = 0;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return log2_den == 0; }

    friend Dyadic operator+(Dyadic a, Dyadic b) {
        int l = a.log2_den > b.log2_den ? a.log2_den : b.log2_den;
        std::int64_t an = a.num << (l - a.log2_den);
        std::int64_t bn = b.num << (l - b.log2_den);
        return Dyadic(an + bn, l);
    }
    friend Dyadic operator-(Dyadic a) { return Dyadic(-a.num, a.log2_den); }
    friend Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }
    friend Dyadic operator*(Dyadic a, Dyadic b) {
        return Dyadic(a.num * b.num, a.log2_den + b.log2_den);
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.log2_den == b.log2_den;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        int l = a.log2_den > b.log2_den ? a.log2_den : b.log2_den;
        return (a.num << (l - a.log2_den)) < (b.num << (l - b.log2_den));
    }

    Dyadic& operator+=(Dyadic o) { return *this = *this + o; }

    /// Halve: divide by 2 exactly.
    Dyadic half() const { return Dyadic(num, log2_den + 1); }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(std::int64_t(1) << log2_den);
    }

    std::int64_t to_integer() const {
        if (log2_den != 0) throw std::logic_error("Dyadic::to_integer: not an integer");
        return num;
    }

    std::string str() const {
        if (log2_den == 0) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(std::int64_t(1) << log2_den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
        return os << d.str();
    }
};

}  // namespace qf
