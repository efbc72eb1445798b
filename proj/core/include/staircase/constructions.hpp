#ifndef STAIRCASE_CONSTRUCTIONS_HPP
#define STAIRCASE_CONSTRUCTIONS_HPP

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

/// The m-generator family whose square has only nine minimal generators:
/// xexp sequence (5m, 4m, 4m-1, ..., 3m+4, m, 0) with the middle run
/// holding m-4 terms, yexp the reverse sequence. Requires m >= 5.
StaircaseIdeal tiny_square_ideal(std::size_t m);

/// Result of checking the five divisibility conditions that force
/// mu(I^2) = 9. The conditions are evaluated literally; `verified` is
/// computed independently from the actual square, so the implication
/// itself stays testable.
struct ConditionReport {
    std::size_t m = 0;
    /// conditions[k] is condition (k+1):
    ///   (1) u1*um   | u2*u(m-1)
    ///   (2) u1*u(m-1) | u2*u3 and u(m-2)^2
    ///   (3) u2^2    | u1*u3 and u1*u(m-2)
    ///   (4) u2*um   | u3*u(m-1) and u(m-2)*u(m-1)
    ///   (5) u(m-1)^2 | u3*um and u(m-2)*um
    std::array<bool, 5> conditions{};
    /// The nine predicted generators of I^2, in the fixed order
    /// u1^2, u1*u2, u2^2, u1*u(m-1), u1*um, u2*um, u(m-1)^2, u(m-1)*um, um^2.
    /// Duplicates are kept as-is; they falsify verification.
    std::vector<Monomial> predicted_generators;
    /// mu of the actual square, for the report.
    std::size_t mu_square = 0;
    /// All five conditions hold, mu(I^2) == 9, and G(I^2) equals the
    /// predicted set.
    bool verified = false;
};

/// Evaluates the five conditions on an ideal with mu(I) >= 5.
ConditionReport check_conditions(const StaircaseIdeal& ideal);

/// The subideal generated by the two extreme generators at each end,
/// (u_1, u_2, u_{m-1}, u_m). Requires mu(I) >= 4.
StaircaseIdeal corner_subideal(const StaircaseIdeal& ideal);

/// (k, mu(I^k)) for k = 1..kmax.
std::vector<std::pair<unsigned, std::size_t>> power_mu_profile(const StaircaseIdeal& ideal,
                                                               unsigned kmax);

/// Total degrees of the generators, aggregated as (degree, count) and
/// sorted by degree.
std::vector<std::pair<Exponent, std::size_t>> degree_profile(const StaircaseIdeal& ideal);

} // namespace staircase

#endif
