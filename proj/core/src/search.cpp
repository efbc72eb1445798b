#include "staircase/search.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "staircase/ideal_io.hpp"

namespace staircase {

namespace {

constexpr std::size_t kNoMu = std::numeric_limits<std::size_t>::max();

// C(n, k) with overflow detection; 0 when k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("staircase: binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

// Strictly increasing k-subsets of [1, cap] in lexicographic order.
bool first_combo(std::vector<Exponent>& combo, std::size_t k, Exponent cap) {
    if (cap < k)
        return false;
    combo.resize(k);
    for (std::size_t t = 0; t < k; ++t)
        combo[t] = static_cast<Exponent>(t + 1);
    return true;
}

bool next_combo(std::vector<Exponent>& combo, Exponent cap) {
    const std::size_t k = combo.size();
    std::size_t t = k;
    while (t > 0) {
        --t;
        if (combo[t] < cap - (k - 1 - t)) {
            ++combo[t];
            for (std::size_t s = t + 1; s < k; ++s)
                combo[s] = combo[s - 1] + 1;
            return true;
        }
    }
    return false;
}

// Lexicographic unranking of a k-subset of [1, cap].
std::vector<Exponent> unrank_combo(std::uint64_t rank, std::size_t k, Exponent cap) {
    std::vector<Exponent> combo(k);
    Exponent v = 1;
    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            const std::uint64_t block = binomial(cap - v, k - 1 - t);
            if (rank < block)
                break;
            rank -= block;
            ++v;
        }
        combo[t] = v;
        ++v;
    }
    return combo;
}

using Product = std::pair<Exponent, Exponent>;

void fill_products(const std::vector<Exponent>& a, const std::vector<Exponent>& b,
                   std::vector<Product>& prods) {
    const std::size_t m = a.size();
    prods.clear();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            prods.emplace_back(a[i] + a[j], b[i] + b[j]);
}

// mu(I^2) for the staircase with exponent vectors a (desc) and b (asc):
// count of divisibility-minimal values among the pairwise products.
// Sorted by (x asc, y asc), a product is minimal iff its y is strictly
// below every earlier y.
std::size_t mu_square_fast(const std::vector<Exponent>& a, const std::vector<Exponent>& b,
                           std::vector<Product>& prods) {
    fill_products(a, b, prods);
    std::sort(prods.begin(), prods.end());
    std::size_t kept = 0;
    Exponent min_y = 0;
    for (const Product& p : prods) {
        if (kept == 0 || p.second < min_y) {
            ++kept;
            min_y = p.second;
        }
    }
    return kept;
}

// Independent O(n^2) route used for in-flight spot checks: a product value
// counts iff this is its first occurrence and no other value divides it.
std::size_t mu_square_pairwise(const std::vector<Exponent>& a, const std::vector<Exponent>& b,
                               std::vector<Product>& prods) {
    fill_products(a, b, prods);
    std::size_t count = 0;
    for (std::size_t p = 0; p < prods.size(); ++p) {
        bool first = true;
        for (std::size_t q = 0; q < p; ++q) {
            if (prods[q] == prods[p]) {
                first = false;
                break;
            }
        }
        if (!first)
            continue;
        bool minimal = true;
        for (std::size_t q = 0; q < prods.size(); ++q) {
            if (prods[q] == prods[p])
                continue;
            if (prods[q].first <= prods[p].first && prods[q].second <= prods[p].second) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            ++count;
    }
    return count;
}

struct FoldState {
    std::size_t best_mu = kNoMu;
    std::vector<Exponent> best_vec; // concatenated (a_1..a_m, b_1..b_m)
    std::uint64_t examined = 0;
};

void offer(FoldState& state, std::size_t mu2, const std::vector<Exponent>& vec) {
    if (mu2 > state.best_mu)
        return;
    if (mu2 < state.best_mu) {
        state.best_mu = mu2;
        state.best_vec = vec;
        return;
    }
    if (std::lexicographical_compare(vec.begin(), vec.end(), state.best_vec.begin(),
                                     state.best_vec.end()))
        state.best_vec = vec;
}

// Fold over the a-combination ranks [a_lo, a_hi). The merge of per-range
// results is associative and order-fixed, so the outcome is independent of
// how the ranges are scheduled.
template <class Filter>
FoldState fold_a_range(std::size_t m, Exponent bound, std::uint64_t a_lo, std::uint64_t a_hi,
                       const SearchOptions& opt, const Filter& filter) {
    const std::size_t k = m - 1;
    FoldState state;
    std::vector<Exponent> a(m), b(m);
    std::vector<Exponent> a_combo = unrank_combo(a_lo, k, bound);
    std::vector<Exponent> b_combo;
    std::vector<Product> prods, oracle_prods;
    std::vector<Exponent> vec(2 * m), mirror_vec(2 * m);

    for (std::uint64_t a_rank = a_lo; a_rank < a_hi; ++a_rank) {
        for (std::size_t t = 0; t < k; ++t)
            a[t] = a_combo[k - 1 - t];
        a[m - 1] = 0;
        const Exponent a1 = a[0];
        const Exponent b_cap = opt.symmetry_pruning ? std::min(bound, a1) : bound;

        if (first_combo(b_combo, k, b_cap)) {
            std::uint64_t b_rank = 0;
            do {
                b[0] = 0;
                for (std::size_t t = 0; t < k; ++t)
                    b[t + 1] = b_combo[t];
                const std::uint64_t weight =
                    (opt.symmetry_pruning && a1 > b[m - 1]) ? 2 : 1;
                state.examined += weight;

                if (filter(a, b)) {
                    const std::size_t mu2 = mu_square_fast(a, b, prods);
                    if (opt.oracle_stride != 0 && (a_rank + b_rank) % opt.oracle_stride == 0) {
                        const std::size_t check = mu_square_pairwise(a, b, oracle_prods);
                        if (check != mu2)
                            throw std::logic_error(
                                "staircase: fast minimalize disagrees with pairwise oracle");
                    }
                    std::copy(a.begin(), a.end(), vec.begin());
                    std::copy(b.begin(), b.end(), vec.begin() + static_cast<std::ptrdiff_t>(m));
                    offer(state, mu2, vec);
                    if (weight == 2) {
                        // The x<->y mirror: reverse b as the new a, reverse a
                        // as the new b. Same mu(I^2), possibly smaller vector.
                        for (std::size_t t = 0; t < m; ++t) {
                            mirror_vec[t] = b[m - 1 - t];
                            mirror_vec[m + t] = a[m - 1 - t];
                        }
                        offer(state, mu2, mirror_vec);
                    }
                }
                ++b_rank;
            } while (next_combo(b_combo, b_cap));
        }

        if (a_rank + 1 < a_hi)
            next_combo(a_combo, bound);
    }
    return state;
}

template <class Filter>
FoldState fold_space(std::size_t m, Exponent bound, const SearchOptions& opt,
                     const Filter& filter) {
    const std::uint64_t a_total = binomial(bound, m - 1);
    if (a_total == 0)
        throw std::invalid_argument("staircase: bound too small for m");
    if (a_total > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("staircase: search space too large");

    unsigned workers = opt.workers != 0 ? opt.workers : std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 1;
    if (static_cast<std::uint64_t>(workers) > a_total)
        workers = static_cast<unsigned>(a_total);

    if (workers == 1)
        return fold_a_range(m, bound, 0, a_total, opt, filter);

    std::vector<FoldState> partials(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = a_total / workers;
    const std::uint64_t remainder = a_total % workers;
    std::uint64_t lo = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t hi = lo + chunk + (w < remainder ? 1 : 0);
        threads.emplace_back([&, w, lo, hi] {
            try {
                partials[w] = fold_a_range(m, bound, lo, hi, opt, filter);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    FoldState merged;
    for (const FoldState& part : partials) {
        merged.examined += part.examined;
        if (part.best_mu != kNoMu)
            offer(merged, part.best_mu, part.best_vec);
    }
    return merged;
}

StaircaseIdeal ideal_from_vec(std::size_t m, const std::vector<Exponent>& vec) {
    std::vector<Monomial> gens;
    gens.reserve(m);
    for (std::size_t t = 0; t < m; ++t)
        gens.push_back({vec[t], vec[m + t]});
    return StaircaseIdeal(std::move(gens));
}

constexpr auto accept_all = [](const std::vector<Exponent>&, const std::vector<Exponent>&) {
    return true;
};

} // namespace

SearchOutcome min_mu_square(std::size_t m, Exponent bound, const SearchOptions& options) {
    if (m < 1)
        throw std::invalid_argument("staircase: m must be at least 1");
    if (bound < static_cast<Exponent>(m - 1))
        throw std::invalid_argument("staircase: bound too small for m");

    const FoldState state = fold_space(m, bound, options, accept_all);

    StaircaseIdeal witness = ideal_from_vec(m, state.best_vec);
    // Cross-check the kernel against the library path once per run.
    if (mu(ideal_product(witness, witness)) != state.best_mu)
        throw std::logic_error("staircase: search kernel disagrees with ideal_product");
    return {m, bound, state.best_mu, std::move(witness), state.examined};
}

GeNineReport verify_ge_nine(Exponent bound, const SearchOptions& options) {
    if (bound < 5)
        throw std::invalid_argument("staircase: ge-nine verification requires bound >= 5");
    SearchOutcome outcome = min_mu_square(6, bound, options);
    const bool passed = outcome.minimum_mu_square >= 9;
    return {std::move(outcome), passed};
}

bool single_degree_bound_check(std::size_t m, Exponent degree, std::uint64_t trials,
                               std::uint64_t seed) {
    if (m < 2)
        throw std::invalid_argument("staircase: single-degree check requires m >= 2");
    if (degree < static_cast<Exponent>(m - 1))
        throw std::invalid_argument(
            "staircase: no single-degree staircase with m generators of this degree");

    const std::size_t middles = m - 2;
    const std::size_t required = 2 * m - 1;
    std::vector<Exponent> a(m), b(m);
    std::vector<Product> prods;

    const auto passes = [&](const std::vector<Exponent>& middle_desc) {
        a[0] = degree;
        for (std::size_t t = 0; t < middles; ++t)
            a[t + 1] = middle_desc[t];
        a[m - 1] = 0;
        for (std::size_t t = 0; t < m; ++t)
            b[t] = degree - a[t];
        return mu_square_fast(a, b, prods) >= required;
    };

    std::vector<Exponent> middle_desc(middles);
    if (trials == 0) {
        std::vector<Exponent> combo;
        if (!first_combo(combo, middles, degree - 1))
            throw std::invalid_argument("staircase: single-degree space is empty");
        do {
            for (std::size_t t = 0; t < middles; ++t)
                middle_desc[t] = combo[middles - 1 - t];
            if (!passes(middle_desc))
                return false;
        } while (next_combo(combo, degree - 1));
        return true;
    }

    std::mt19937_64 rng(seed);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        // Floyd's sampling: m-2 distinct middle exponents from [1, degree-1].
        std::set<Exponent> chosen;
        for (Exponent j = degree - 1 - static_cast<Exponent>(middles) + 1; j <= degree - 1; ++j) {
            std::uniform_int_distribution<Exponent> dist(1, j);
            const Exponent t = dist(rng);
            if (!chosen.insert(t).second)
                chosen.insert(j);
        }
        std::copy(chosen.rbegin(), chosen.rend(), middle_desc.begin());
        if (!passes(middle_desc))
            return false;
    }
    return true;
}

std::vector<TwoDegreeRow> two_degree_scan(Exponent gap, std::size_t m_lo, std::size_t m_hi,
                                          Exponent bound, const SearchOptions& options) {
    if (gap < 1)
        throw std::invalid_argument(
            "staircase: gap must be at least 1; gap 0 is the single-degree case");
    if (m_lo < 1 || m_lo > m_hi)
        throw std::invalid_argument("staircase: invalid m range");

    const auto two_degree_filter = [gap](const std::vector<Exponent>& a,
                                         const std::vector<Exponent>& b) {
        const std::size_t m = a.size();
        Exponent lo = a[0] + b[0], hi = lo;
        for (std::size_t t = 1; t < m; ++t) {
            const Exponent d = a[t] + b[t];
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        if (hi - lo != gap)
            return false;
        for (std::size_t t = 0; t < m; ++t) {
            const Exponent d = a[t] + b[t];
            if (d != lo && d != hi)
                return false;
        }
        return true;
    };

    std::vector<TwoDegreeRow> rows;
    rows.reserve(m_hi - m_lo + 1);
    for (std::size_t m = m_lo; m <= m_hi; ++m) {
        if (bound < static_cast<Exponent>(m - 1))
            throw std::invalid_argument("staircase: bound too small for m");
        const FoldState state = fold_space(m, bound, options, two_degree_filter);
        TwoDegreeRow row;
        row.m = m;
        row.gap = gap;
        row.bound = bound;
        row.candidates_examined = state.examined;
        if (state.best_mu != kNoMu) {
            StaircaseIdeal witness = ideal_from_vec(m, state.best_vec);
            if (mu(ideal_product(witness, witness)) != state.best_mu)
                throw std::logic_error("staircase: search kernel disagrees with ideal_product");
            row.min_mu_square = state.best_mu;
            row.witness = std::move(witness);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<TwoDegreeRow>& rows) {
    out << "m,gap,bound,min_mu_square,witness\n";
    for (const TwoDegreeRow& row : rows) {
        out << row.m << ',' << row.gap << ',' << row.bound << ',';
        if (row.min_mu_square)
            out << *row.min_mu_square;
        else
            out << "none";
        out << ',';
        if (row.witness)
            out << '"' << format_ideal(*row.witness) << '"';
        out << '\n';
    }
}

} // namespace staircase
