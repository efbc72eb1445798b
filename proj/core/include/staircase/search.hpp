#ifndef STAIRCASE_SEARCH_HPP
#define STAIRCASE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "staircase/ideal.hpp"

namespace staircase {

/// Tuning knobs for the exhaustive searches. Defaults give a deterministic,
/// pruned, self-checking run; results never depend on `workers`.
struct SearchOptions {
    /// 0 = one worker per available hardware thread.
    unsigned workers = 0;
    /// Enumerate only representatives of the x<->y mirror symmetry and
    /// account for the rest; halves the work. Outcome-neutral.
    bool symmetry_pruning = true;
    /// Re-derive mu(I^2) of every oracle_stride-th candidate with the
    /// O(n^2) pairwise-divisibility oracle and fail loudly on mismatch.
    /// 0 disables the cross-check.
    std::uint64_t oracle_stride = 100;
};

/// Result of an exhaustive scan of a bounded staircase space. The space for
/// (m, bound) holds every normalized staircase a_1 > ... > a_m = 0,
/// 0 = b_1 < ... < b_m with a_1, b_m <= bound; its size is C(bound, m-1)^2.
struct SearchOutcome {
    std::size_t m = 0;
    Exponent bound = 0;
    std::size_t minimum_mu_square = 0;
    /// Lexicographically least minimizer by concatenated exponent vector
    /// (a_1..a_m, b_1..b_m).
    StaircaseIdeal witness;
    std::uint64_t candidates_examined = 0;
};

/// Minimum of mu(I^2) over the (m, bound) space, with canonical witness.
/// Deterministic regardless of worker count. Throws std::invalid_argument
/// when the space is empty (bound < m-1).
SearchOutcome min_mu_square(std::size_t m, Exponent bound, const SearchOptions& options = {});

/// Bounded verification that mu(I) = 6 forces mu(I^2) >= 9.
struct GeNineReport {
    SearchOutcome outcome;
    /// True iff the minimum over the full bounded space is >= 9. Evidence
    /// within the exponent bound, not a proof.
    bool passed = false;
};

/// min_mu_square at m = 6 plus the >= 9 verdict. Requires bound >= 5.
GeNineReport verify_ge_nine(Exponent bound, const SearchOptions& options = {});

/// Checks mu(I^2) >= 2m-1 over normalized single-degree staircases with m
/// generators of the given total degree (generators x^degree and y^degree
/// fixed, middle exponents chosen from [1, degree-1]). trials = 0 exhausts
/// the space; trials > 0 draws that many samples with replacement from the
/// seeded generator. Returns true iff every inspected ideal satisfies the
/// bound. Throws std::invalid_argument for infeasible parameters.
bool single_degree_bound_check(std::size_t m, Exponent degree, std::uint64_t trials,
                               std::uint64_t seed = 0x5741495243415345ull);

/// One row of a two-degree scan: the minimum of mu(I^2) over ideals of the
/// (m, bound) space whose generator degrees take exactly two values with
/// the given gap. Empty optionals mean no such ideal exists in the space.
struct TwoDegreeRow {
    std::size_t m = 0;
    Exponent gap = 0;
    Exponent bound = 0;
    std::optional<std::size_t> min_mu_square;
    std::optional<StaircaseIdeal> witness;
    std::uint64_t candidates_examined = 0;
};

/// Scan rows for each m in [m_lo, m_hi]. Data only; draws no conclusion
/// about growth in m. gap = 0 is rejected (that is the single-degree case).
std::vector<TwoDegreeRow> two_degree_scan(Exponent gap, std::size_t m_lo, std::size_t m_hi,
                                          Exponent bound, const SearchOptions& options = {});

/// CSV with header m,gap,bound,min_mu_square,witness; the witness is the
/// JSON ideal document in one quoted field, empty when no ideal qualifies.
void write_scan_csv(std::ostream& out, const std::vector<TwoDegreeRow>& rows);

} // namespace staircase

#endif
