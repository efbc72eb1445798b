#include "staircase/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace staircase {

StaircaseIdeal tiny_square_ideal(std::size_t m) {
    if (m < 5)
        throw std::invalid_argument("staircase: construction requires m >= 5");
    const Exponent em = static_cast<Exponent>(m);
    std::vector<Exponent> a;
    a.reserve(m);
    a.push_back(5 * em);
    a.push_back(4 * em);
    for (Exponent v = 4 * em - 1; v >= 3 * em + 4; --v)
        a.push_back(v); // m - 4 values
    a.push_back(em);
    a.push_back(0);
    std::vector<Monomial> gens;
    gens.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        gens.push_back({a[i], a[m - 1 - i]});
    return StaircaseIdeal(std::move(gens));
}

ConditionReport check_conditions(const StaircaseIdeal& ideal) {
    const std::size_t m = ideal.mu();
    if (m < 5)
        throw std::invalid_argument("staircase: condition check requires mu(I) >= 5");

    const auto u = [&](std::size_t i) { return ideal.generator(i); };
    const auto uu = [&](std::size_t i, std::size_t j) { return product(u(i), u(j)); };

    ConditionReport report;
    report.m = m;
    report.conditions[0] = divides(uu(1, m), uu(2, m - 1));
    report.conditions[1] = divides(uu(1, m - 1), uu(2, 3)) && divides(uu(1, m - 1), uu(m - 2, m - 2));
    report.conditions[2] = divides(uu(2, 2), uu(1, 3)) && divides(uu(2, 2), uu(1, m - 2));
    report.conditions[3] = divides(uu(2, m), uu(3, m - 1)) && divides(uu(2, m), uu(m - 2, m - 1));
    report.conditions[4] = divides(uu(m - 1, m - 1), uu(3, m)) && divides(uu(m - 1, m - 1), uu(m - 2, m));

    report.predicted_generators = {uu(1, 1),     uu(1, 2),     uu(2, 2),
                                   uu(1, m - 1), uu(1, m),     uu(2, m),
                                   uu(m - 1, m - 1), uu(m - 1, m), uu(m, m)};

    const StaircaseIdeal square = ideal_product(ideal, ideal);
    report.mu_square = square.mu();

    std::vector<Monomial> predicted = report.predicted_generators;
    std::sort(predicted.begin(), predicted.end(), canonical_less);
    predicted.erase(std::unique(predicted.begin(), predicted.end()), predicted.end());

    const bool all_conditions =
        std::all_of(report.conditions.begin(), report.conditions.end(), [](bool b) { return b; });
    report.verified = all_conditions && report.mu_square == 9 && predicted == square.gens();
    return report;
}

StaircaseIdeal corner_subideal(const StaircaseIdeal& ideal) {
    const std::size_t m = ideal.mu();
    if (m < 4)
        throw std::invalid_argument("staircase: corner subideal requires mu(I) >= 4");
    return StaircaseIdeal({ideal.generator(1), ideal.generator(2), ideal.generator(m - 1),
                           ideal.generator(m)});
}

std::vector<std::pair<unsigned, std::size_t>> power_mu_profile(const StaircaseIdeal& ideal,
                                                               unsigned kmax) {
    if (kmax < 1)
        throw std::invalid_argument("staircase: power profile requires kmax >= 1");
    std::vector<std::pair<unsigned, std::size_t>> profile;
    profile.reserve(kmax);
    StaircaseIdeal power = ideal;
    profile.emplace_back(1, power.mu());
    for (unsigned k = 2; k <= kmax; ++k) {
        power = ideal_product(power, ideal);
        profile.emplace_back(k, power.mu());
    }
    return profile;
}

std::vector<std::pair<Exponent, std::size_t>> degree_profile(const StaircaseIdeal& ideal) {
    std::map<Exponent, std::size_t> counts;
    for (Monomial g : ideal.gens())
        ++counts[total_degree(g)];
    return {counts.begin(), counts.end()};
}

} // namespace staircase
