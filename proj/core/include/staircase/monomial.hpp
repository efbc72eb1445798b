#ifndef STAIRCASE_MONOMIAL_HPP
#define STAIRCASE_MONOMIAL_HPP

#include <cstdint>
#include <stdexcept>

namespace staircase {

using Exponent = std::uint64_t;

/// A monomial x^a y^b in two variables, stored as its exponent pair.
/// Coefficients never appear anywhere in this library; every statement
/// about ideals reduces to arithmetic on exponent pairs.
struct Monomial {
    Exponent xexp = 0;
    Exponent yexp = 0;

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// u | v in the divisibility order: both exponents of u are <= those of v.
constexpr bool divides(Monomial u, Monomial v) noexcept {
    return u.xexp <= v.xexp && u.yexp <= v.yexp;
}

namespace detail {
constexpr Exponent checked_add(Exponent a, Exponent b) {
    Exponent s = a + b;
    if (s < a)
        throw std::overflow_error("staircase: exponent addition overflows 64 bits");
    return s;
}
} // namespace detail

/// Componentwise exponent sum. Overflow past 64 bits is a checked error,
/// never a silent wraparound.
constexpr Monomial product(Monomial u, Monomial v) {
    return {detail::checked_add(u.xexp, v.xexp), detail::checked_add(u.yexp, v.yexp)};
}

/// Total degree a + b.
constexpr Exponent total_degree(Monomial u) {
    return detail::checked_add(u.xexp, u.yexp);
}

/// Canonical generator order: strictly decreasing xexp, ties broken by
/// increasing yexp. An antichain sorted this way has strictly increasing yexp.
constexpr bool canonical_less(Monomial u, Monomial v) noexcept {
    if (u.xexp != v.xexp)
        return u.xexp > v.xexp;
    return u.yexp < v.yexp;
}

} // namespace staircase

#endif
