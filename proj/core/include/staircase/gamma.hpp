#ifndef STAIRCASE_GAMMA_HPP
#define STAIRCASE_GAMMA_HPP

#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

/// True iff neither v <= w nor w <= v in the product order on index pairs.
/// Equivalently, one pair nests strictly inside the interval of the other:
/// min v < min w <= max w < max v, or the same with v and w swapped.
constexpr bool noncomparable(PairIndex v, PairIndex w) noexcept {
    return !pair_le(v, w) && !pair_le(w, v);
}

/// The set of generator products dividing a given one. Every member other
/// than the target is noncomparable to it in V.
struct DivSet {
    PairIndex target;
    std::vector<PairIndex> members; // lexicographically sorted, includes target
};

/// gamma applied to one product: the minimal generator of I^2 dividing it
/// whose pair representative is lexicographically least.
struct GammaValue {
    PairIndex source;
    PairIndex image;
    Monomial image_monomial;

    friend bool operator==(const GammaValue&, const GammaValue&) = default;
};

/// Precomputed square structure of an ideal: the minimal generators of I^2
/// and the canonical pair representative of each. A monomial of G(I^2) may
/// be the product of several index pairs; its canonical representative is
/// the lexicographically least (k, l) with k <= l among them.
class SquareTable {
public:
    explicit SquareTable(const StaircaseIdeal& ideal);

    const StaircaseIdeal& base() const noexcept { return base_; }
    const StaircaseIdeal& square() const noexcept { return square_; }

    /// Canonical representatives of G(I^2), one per minimal generator,
    /// aligned with square().gens().
    const std::vector<PairIndex>& representatives() const noexcept { return reps_; }

    GammaValue gamma(PairIndex p) const;

private:
    StaircaseIdeal base_;
    StaircaseIdeal square_;
    std::vector<PairIndex> reps_;
};

/// All (r,s) in V whose product divides the product at p.
DivSet div_set(const StaircaseIdeal& ideal, PairIndex p);

/// The map gamma of the square structure, computed from scratch. When many
/// pairs of the same ideal are queried, build a SquareTable once instead.
GammaValue gamma_map(const StaircaseIdeal& ideal, PairIndex p);

/// Canonical pair representative of each element of G(I^2), sorted
/// lexicographically; the length equals mu(I^2).
std::vector<PairIndex> square_generator_pairs(const StaircaseIdeal& ideal);

} // namespace staircase

#endif
