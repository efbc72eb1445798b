#ifndef STAIRCASE_TESTS_SUPPORT_HPP
#define STAIRCASE_TESTS_SUPPORT_HPP

// Shared test plumbing: quadratic reference implementations that the fast
// paths are checked against, random and exhaustive staircase generators,
// and environment-configurable sweep caps.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "staircase/ideal.hpp"

namespace testsupport {

using staircase::Exponent;
using staircase::Monomial;
using staircase::StaircaseIdeal;

// O(n^2) reference minimalization: keep the first occurrence of every
// monomial that no other value divides, then sort into canonical order.
inline std::vector<Monomial> minimal_elements_oracle(const std::vector<Monomial>& gens) {
    std::vector<Monomial> kept;
    for (std::size_t p = 0; p < gens.size(); ++p) {
        bool repeat = false;
        for (std::size_t q = 0; q < p && !repeat; ++q)
            repeat = gens[q] == gens[p];
        if (repeat)
            continue;
        bool minimal = true;
        for (std::size_t q = 0; q < gens.size() && minimal; ++q) {
            if (gens[q] == gens[p])
                continue;
            minimal = !(gens[q].xexp <= gens[p].xexp && gens[q].yexp <= gens[p].yexp);
        }
        if (minimal)
            kept.push_back(gens[p]);
    }
    std::sort(kept.begin(), kept.end(),
              [](const Monomial& a, const Monomial& b) { return a.xexp > b.xexp; });
    return kept;
}

// Reference product: all pairwise exponent sums, then the oracle filter.
inline std::vector<Monomial> product_oracle(const StaircaseIdeal& lhs,
                                            const StaircaseIdeal& rhs) {
    std::vector<Monomial> prods;
    prods.reserve(lhs.mu() * rhs.mu());
    for (const Monomial& u : lhs.gens())
        for (const Monomial& v : rhs.gens())
            prods.push_back({u.xexp + v.xexp, u.yexp + v.yexp});
    return minimal_elements_oracle(prods);
}

// Reference cube: all triple products, independent of ideal_product.
inline std::vector<Monomial> cube_oracle(const StaircaseIdeal& ideal) {
    const auto& gens = ideal.gens();
    std::vector<Monomial> prods;
    for (const Monomial& u : gens)
        for (const Monomial& v : gens)
            for (const Monomial& w : gens)
                prods.push_back({u.xexp + v.xexp + w.xexp, u.yexp + v.yexp + w.yexp});
    return minimal_elements_oracle(prods);
}

// Random staircase with 1..max_m generators and exponents in [0, max_exp]:
// distinct xexps sorted decreasing paired with distinct yexps sorted
// increasing, which is exactly the antichain shape. Requires max_m <=
// max_exp + 1.
inline StaircaseIdeal random_staircase(std::mt19937_64& rng, std::size_t max_m,
                                       Exponent max_exp) {
    std::uniform_int_distribution<std::size_t> m_dist(1, max_m);
    const std::size_t m = m_dist(rng);
    const auto distinct = [&](std::size_t count) {
        std::set<Exponent> values;
        std::uniform_int_distribution<Exponent> dist(0, max_exp);
        while (values.size() < count)
            values.insert(dist(rng));
        return std::vector<Exponent>(values.begin(), values.end());
    };
    const std::vector<Exponent> xs = distinct(m);
    const std::vector<Exponent> ys = distinct(m);
    std::vector<Monomial> gens(m);
    for (std::size_t t = 0; t < m; ++t)
        gens[t] = {xs[m - 1 - t], ys[t]};
    return StaircaseIdeal(std::move(gens));
}

// Calls fn with every staircase that has 1..max_m generators and exponents
// in [0, max_exp].
template <class Fn>
void for_each_staircase(std::size_t max_m, Exponent max_exp, Fn&& fn) {
    const std::size_t universe = static_cast<std::size_t>(max_exp) + 1;
    for (std::size_t m = 1; m <= max_m && m <= universe; ++m) {
        std::vector<std::size_t> xsel(m), ysel(m);
        const auto first = [&](std::vector<std::size_t>& sel) {
            for (std::size_t t = 0; t < m; ++t)
                sel[t] = t;
        };
        const auto next = [&](std::vector<std::size_t>& sel) {
            std::size_t t = m;
            while (t > 0) {
                --t;
                if (sel[t] < universe - (m - t)) {
                    ++sel[t];
                    for (std::size_t s = t + 1; s < m; ++s)
                        sel[s] = sel[s - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        first(xsel);
        do {
            first(ysel);
            do {
                std::vector<Monomial> gens(m);
                for (std::size_t t = 0; t < m; ++t)
                    gens[t] = {static_cast<Exponent>(xsel[m - 1 - t]),
                               static_cast<Exponent>(ysel[t])};
                fn(StaircaseIdeal(std::move(gens)));
            } while (next(ysel));
        } while (next(xsel));
    }
}

// Sweep caps; overridable so slow boxes can dial the suites down without
// touching code.
inline std::size_t env_cap(const char* name, std::size_t fallback) {
    const char* text = std::getenv(name);
    if (text == nullptr || *text == '\0')
        return fallback;
    return static_cast<std::size_t>(std::strtoull(text, nullptr, 10));
}

} // namespace testsupport

#endif
