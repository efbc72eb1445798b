#include "staircase/gamma.hpp"

#include <algorithm>
#include <stdexcept>

namespace staircase {

namespace {

void require_valid(const StaircaseIdeal& ideal, PairIndex p) {
    if (p.i < 1 || p.i > p.j || p.j > ideal.mu())
        throw std::out_of_range("staircase: pair index out of range");
}

} // namespace

SquareTable::SquareTable(const StaircaseIdeal& ideal)
    : base_(ideal), square_(ideal_product(ideal, ideal)) {
    const auto& square_gens = square_.gens();
    reps_.resize(square_gens.size(), PairIndex{0, 0});
    // Scan V in lex order; the first pair producing a generator is its
    // canonical representative.
    const std::size_t m = base_.mu();
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = i; j <= m; ++j) {
            const Monomial prod = pair_product(base_, {i, j});
            for (std::size_t g = 0; g < square_gens.size(); ++g) {
                if (reps_[g].i == 0 && square_gens[g] == prod) {
                    reps_[g] = {i, j};
                    break;
                }
            }
        }
    }
}

GammaValue SquareTable::gamma(PairIndex p) const {
    require_valid(base_, p);
    const Monomial target = pair_product(base_, p);
    const auto& square_gens = square_.gens();
    // Among the minimal generators of I^2 dividing u_i u_j, pick the one
    // whose canonical representative is lexicographically least. At least
    // one divisor exists since G(I^2) generates I^2.
    std::size_t best = square_gens.size();
    for (std::size_t g = 0; g < square_gens.size(); ++g) {
        if (!divides(square_gens[g], target))
            continue;
        if (best == square_gens.size() || pair_lex_less(reps_[g], reps_[best]))
            best = g;
    }
    return {p, reps_[best], square_gens[best]};
}

DivSet div_set(const StaircaseIdeal& ideal, PairIndex p) {
    require_valid(ideal, p);
    const Monomial target = pair_product(ideal, p);
    DivSet result{p, {}};
    const std::size_t m = ideal.mu();
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i; j <= m; ++j)
            if (divides(pair_product(ideal, {i, j}), target))
                result.members.push_back({i, j});
    return result;
}

GammaValue gamma_map(const StaircaseIdeal& ideal, PairIndex p) {
    return SquareTable(ideal).gamma(p);
}

std::vector<PairIndex> square_generator_pairs(const StaircaseIdeal& ideal) {
    SquareTable table(ideal);
    std::vector<PairIndex> reps = table.representatives();
    std::sort(reps.begin(), reps.end(), pair_lex_less);
    return reps;
}

} // namespace staircase
