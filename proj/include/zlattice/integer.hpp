#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <concepts>
#include <numeric>
#include <stdexcept>
#include <string>

namespace Eigen {

// mpz_class as an Eigen scalar: exact arbitrary-precision integers.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpz_class;
    using Nested = mpz_class;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100,
    };
};

}  // namespace Eigen

namespace zlattice {

using Int = mpz_class;

// Quotient rounded toward negative infinity.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

template <std::signed_integral T>
constexpr T floor_div(T a, T b) {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Representative of a modulo b in [0, |b|); b != 0.
inline Int pos_mod(const Int& a, const Int& b) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

template <std::signed_integral T>
constexpr T pos_mod(T a, T b) {
    T r = a % b;
    if (r < 0) r += (b < 0 ? -b : b);
    return r;
}

// gcd normalized to be nonnegative; gcd(0, 0) = 0.
inline Int gcd_nonneg(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

template <std::signed_integral T>
constexpr T gcd_nonneg(T a, T b) {
    return static_cast<T>(std::gcd(a, b));
}

template <typename Scalar>
struct ExtendedGcd {
    Scalar g;  // gcd(a, b) >= 0
    Scalar x;  // a*x + b*y = g
    Scalar y;
};

inline ExtendedGcd<Int> extended_gcd(const Int& a, const Int& b) {
    ExtendedGcd<Int> r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

template <std::signed_integral T>
constexpr ExtendedGcd<T> extended_gcd(T a, T b) {
    T old_r = a, r = b;
    T old_x = 1, x = 0;
    T old_y = 0, y = 1;
    while (r != 0) {
        T q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
        old_y -= q * y;
        std::swap(old_y, y);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 1; result in [0, m).
template <typename Scalar>
Scalar mod_inverse(const Scalar& a, const Scalar& m) {
    if (m == 1) return Scalar(0);
    auto e = extended_gcd(a, m);
    if (e.g != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return pos_mod(e.x, m);
}

inline std::string to_decimal(const Int& a) { return a.get_str(); }

// Strict decimal integer parse (optional leading '-', digits only).
inline Int int_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("bare sign is not an integer literal");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed integer literal: '" + text + "'");
    return Int(text, 10);
}

}  // namespace zlattice
