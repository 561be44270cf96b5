#ifndef CLOSURES_RATIONAL_HPP
#define CLOSURES_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "closures/errors.hpp"

namespace closures {

// Exact rational, always kept in lowest terms with positive denominator.
// Frequency comparisons must never touch floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Sign of (a - b) by cross multiplication.
inline int compare(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

// Compares count against lambda * total by cross multiplication.
// Returns sign of (count - lambda * total).
inline int compare_scaled(std::int64_t count, const Rational& lambda, std::int64_t total) {
    __int128 lhs = static_cast<__int128>(count) * lambda.den;
    __int128 rhs = static_cast<__int128>(lambda.num) * total;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

}  // namespace closures

#endif  // CLOSURES_RATIONAL_HPP
