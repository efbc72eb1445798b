#ifndef STAIRCASE_IDEAL_HPP
#define STAIRCASE_IDEAL_HPP

#include <cstddef>
#include <vector>

#include "staircase/monomial.hpp"

namespace staircase {

/// Index pair (i, j) with 1 <= i <= j <= m, addressing the unordered
/// generator product u_i * u_j of an ideal with m minimal generators.
struct PairIndex {
    std::size_t i = 1;
    std::size_t j = 1;

    friend constexpr bool operator==(const PairIndex&, const PairIndex&) = default;
};

/// Product order on index pairs: (i,j) <= (k,l) iff i <= k and j <= l.
constexpr bool pair_le(PairIndex v, PairIndex w) noexcept {
    return v.i <= w.i && v.j <= w.j;
}

/// Lexicographic order, first component dominant.
constexpr bool pair_lex_less(PairIndex v, PairIndex w) noexcept {
    if (v.i != w.i)
        return v.i < w.i;
    return v.j < w.j;
}

/// A monomial ideal in two variables, held as its unique minimal monomial
/// generating set in canonical order: xexp strictly decreasing, yexp
/// strictly increasing. Construction always minimalizes, so a value of
/// this type cannot hold a redundant generating list.
///
/// Values are immutable; all operations are pure functions of their inputs
/// and safe to share across threads.
class StaircaseIdeal {
public:
    /// Minimalizes `generators` (deduplicates and drops every monomial
    /// divisible by another), then stores the result in canonical order.
    /// Throws std::invalid_argument on an empty generating set.
    explicit StaircaseIdeal(std::vector<Monomial> generators);

    const std::vector<Monomial>& gens() const noexcept { return gens_; }

    /// Number of minimal generators, mu(I).
    std::size_t mu() const noexcept { return gens_.size(); }

    /// 1-based access matching the u_1, ..., u_m indexing convention.
    /// Throws std::out_of_range.
    Monomial generator(std::size_t index) const;

    friend bool operator==(const StaircaseIdeal&, const StaircaseIdeal&) = default;

private:
    std::vector<Monomial> gens_;
};

/// The minimal-generator subset of `generators` as an ideal.
/// Same contract as the StaircaseIdeal constructor.
StaircaseIdeal minimalize(std::vector<Monomial> generators);

/// mu(I): the size of the minimal generating set.
std::size_t mu(const StaircaseIdeal& ideal);

/// Membership test for monomials: v lies in I iff some generator divides v.
bool contains(const StaircaseIdeal& ideal, Monomial v);

/// Product ideal, minimally generated.
StaircaseIdeal ideal_product(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs);

/// k-th power via repeated products; requires k >= 1.
StaircaseIdeal ideal_power(const StaircaseIdeal& ideal, unsigned k);

/// Divides out the common monomial factor: subtracts the componentwise
/// exponent minimum, leaving the last xexp and first yexp at zero.
/// Idempotent and mu-preserving.
StaircaseIdeal normalize(const StaircaseIdeal& ideal);

/// u_i * u_j for a pair valid for this ideal. Throws std::out_of_range.
Monomial pair_product(const StaircaseIdeal& ideal, PairIndex p);

/// All of V = {(i,j) : 1 <= i <= j <= m} in lexicographic order.
std::vector<PairIndex> all_pairs(std::size_t m);

} // namespace staircase

#endif
