#include "staircase/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace staircase {

namespace {

// Minimal elements under divisibility, in canonical order.
// Sorted by (xexp asc, yexp asc), a monomial is minimal iff its yexp is
// strictly below every earlier yexp; duplicates fall out of the same test.
// The O(n^2) pairwise filter is kept as the independent oracle in the tests.
std::vector<Monomial> minimal_elements(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](Monomial a, Monomial b) {
        if (a.xexp != b.xexp)
            return a.xexp < b.xexp;
        return a.yexp < b.yexp;
    });
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    Exponent min_y = 0;
    for (Monomial g : gens) {
        if (kept.empty() || g.yexp < min_y) {
            kept.push_back(g);
            min_y = g.yexp;
        }
    }
    std::reverse(kept.begin(), kept.end());
    return kept;
}

} // namespace

StaircaseIdeal::StaircaseIdeal(std::vector<Monomial> generators) {
    if (generators.empty())
        throw std::invalid_argument("staircase: empty generating set");
    gens_ = minimal_elements(std::move(generators));
}

Monomial StaircaseIdeal::generator(std::size_t index) const {
    if (index < 1 || index > gens_.size())
        throw std::out_of_range("staircase: generator index out of range");
    return gens_[index - 1];
}

StaircaseIdeal minimalize(std::vector<Monomial> generators) {
    return StaircaseIdeal(std::move(generators));
}

std::size_t mu(const StaircaseIdeal& ideal) {
    return ideal.mu();
}

bool contains(const StaircaseIdeal& ideal, Monomial v) {
    const auto& gens = ideal.gens();
    return std::any_of(gens.begin(), gens.end(), [v](Monomial g) { return divides(g, v); });
}

StaircaseIdeal ideal_product(const StaircaseIdeal& lhs, const StaircaseIdeal& rhs) {
    std::vector<Monomial> products;
    products.reserve(lhs.mu() * rhs.mu());
    for (Monomial u : lhs.gens())
        for (Monomial v : rhs.gens())
            products.push_back(product(u, v));
    return StaircaseIdeal(std::move(products));
}

StaircaseIdeal ideal_power(const StaircaseIdeal& ideal, unsigned k) {
    if (k < 1)
        throw std::invalid_argument("staircase: ideal_power requires k >= 1");
    StaircaseIdeal result = ideal;
    for (unsigned step = 2; step <= k; ++step)
        result = ideal_product(result, ideal);
    return result;
}

StaircaseIdeal normalize(const StaircaseIdeal& ideal) {
    const auto& gens = ideal.gens();
    // Canonical order: xexp decreases, yexp increases.
    const Exponent min_x = gens.back().xexp;
    const Exponent min_y = gens.front().yexp;
    std::vector<Monomial> shifted;
    shifted.reserve(gens.size());
    for (Monomial g : gens)
        shifted.push_back({g.xexp - min_x, g.yexp - min_y});
    return StaircaseIdeal(std::move(shifted));
}

Monomial pair_product(const StaircaseIdeal& ideal, PairIndex p) {
    if (p.i < 1 || p.i > p.j || p.j > ideal.mu())
        throw std::out_of_range("staircase: pair index out of range");
    return product(ideal.gens()[p.i - 1], ideal.gens()[p.j - 1]);
}

std::vector<PairIndex> all_pairs(std::size_t m) {
    std::vector<PairIndex> pairs;
    pairs.reserve(m * (m + 1) / 2);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i; j <= m; ++j)
            pairs.push_back({i, j});
    return pairs;
}

} // namespace staircase
