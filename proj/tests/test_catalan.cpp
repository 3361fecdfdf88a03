#include <doctest.h>

#include <map>

#include "catalan.hpp"
#include "oracle.hpp"
#include "prefs.hpp"

using namespace park;

TEST_SUITE_BEGIN("catalan");

TEST_CASE("catalan numbers and triangle") {
    const std::int64_t small[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (std::int64_t n = 0; n <= 10; ++n) CHECK(catalan(n) == small[n]);
    CHECK(catalan(37) == BigInt("45950804324621742364"));  // beyond 64-bit

    CatalanTable table(40);
    for (std::int64_t n = 0; n <= 40; ++n) CHECK(table.cat(n) == catalan(n));

    for (std::int64_t n = 1; n <= 25; ++n) {
        CHECK(catalan_triangle(n, 0) == 1);
        CHECK(catalan_triangle(n, n) == catalan(n));
        for (std::int64_t k = 1; k < n; ++k)
            CHECK(catalan_triangle(n, k) == catalan_triangle(n, k - 1) + catalan_triangle(n - 1, k));
    }
}

TEST_CASE("count_wipf_entry: frozen values") {
    CHECK(count_wipf_entry(3, 3, 2) == 2);  // (1,1,2) and (1,2,2)
    CHECK(count_wipf_entry(3, 2, 2) == 2);  // (1,2,2) and (1,2,3)
    CHECK(count_wipf_entry(2, 1, 1) == 2);  // both WIPFs of length 2
    CHECK_THROWS_AS(count_wipf_entry(3, 2, 3), std::domain_error);
}

TEST_CASE("count_wipf_entry matches enumeration for every (i, j)") {
    for (std::int64_t n = 1; n <= 8; ++n) {
        // counts[i][j]
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> tally;
        oracle::for_each_wipf_direct(n, [&](const std::vector<std::int64_t>& v) {
            for (std::int64_t i = 1; i <= n; ++i) ++tally[{i, v[static_cast<std::size_t>(i - 1)]}];
        });
        for (std::int64_t i = 1; i <= n; ++i)
            for (std::int64_t j = 1; j <= i; ++j)
                CHECK(count_wipf_entry(n, i, j) == tally[{i, j}]);
    }
}

TEST_CASE("count_wipf_entry: integrality and column sums at larger n") {
    for (std::int64_t n : {20, 30, 50}) {
        for (std::int64_t i = 1; i <= n; ++i) {
            BigInt sum = 0;
            for (std::int64_t j = 1; j <= i; ++j) sum += count_wipf_entry(n, i, j);  // throws if non-integral
            if (n <= 30) CHECK(sum == catalan(n));
        }
    }
}

TEST_CASE("last entry distribution: recurrence, enumeration, and the direct count") {
    for (std::int64_t n = 1; n <= 9; ++n) {
        const auto d = last_entry_distribution(n);
        std::vector<std::int64_t> tally(static_cast<std::size_t>(n), 0);
        oracle::for_each_wipf_direct(n, [&](const std::vector<std::int64_t>& v) {
            ++tally[static_cast<std::size_t>(v.back() - 1)];
        });
        for (std::int64_t j = 1; j <= n; ++j)
            CHECK(d.counts[static_cast<std::size_t>(j - 1)] == tally[static_cast<std::size_t>(j - 1)]);
        CHECK(d.total == catalan(n));
    }
    const auto d3 = last_entry_distribution(3);
    CHECK(d3.counts == std::vector<BigInt>{1, 2, 2});
}

TEST_CASE("last entry distribution: structure up to n = 30") {
    for (std::int64_t n = 2; n <= 30; ++n) {
        const auto d = last_entry_distribution(n);
        CHECK(d.counts.front() == 1);
        CHECK(d.counts[static_cast<std::size_t>(n - 1)] == d.counts[static_cast<std::size_t>(n - 2)]);
        for (std::int64_t j = 2; j <= n; ++j)
            CHECK(d.counts[static_cast<std::size_t>(j - 1)] >= d.counts[static_cast<std::size_t>(j - 2)]);
        // the two independent routes to f_n(j)
        for (std::int64_t j = 1; j <= n; ++j)
            CHECK(d.counts[static_cast<std::size_t>(j - 1)] == count_wipf_entry(n, n, j));
    }
}

TEST_CASE("expected last entry") {
    CHECK(expected_last_entry(1) == BigRat(1));
    CHECK(expected_last_entry(2) == BigRat(3, 2));
    CHECK(expected_last_entry(3) == BigRat(11, 5));
    for (std::int64_t n = 1; n <= 50; ++n)
        CHECK(expected_last_entry(n) == BigRat(n * n + 2, n + 2));
    // the quoted closed form sits exactly one below the mean
    for (std::int64_t n = 2; n <= 12; ++n) {
        BigInt weighted = 0, total = 0;
        oracle::for_each_wipf_direct(n, [&](const std::vector<std::int64_t>& v) {
            weighted += v.back();
            total += 1;
        });
        CHECK(BigRat(weighted, total) == expected_last_entry_alt(n) + 1);
    }
}

TEST_CASE("lucky set probability: frozen values") {
    CHECK(lucky_set_probability(3, {2, 3}) == BigRat(0));
    CHECK(lucky_set_probability(3, {1}) == BigRat(2, 5));
    CHECK(lucky_set_probability(3, {1, 2, 3}) == BigRat(1, 5));
    CHECK(lucky_set_probability(5, {1, 3}) == BigRat(2, 42));
}

TEST_CASE("lucky set probabilities match enumeration and sum to 1") {
    for (std::int64_t n = 1; n <= 9; ++n) {
        std::map<std::vector<std::int64_t>, std::int64_t> tally;
        std::int64_t total = 0;
        oracle::for_each_wipf_direct(n, [&](const std::vector<std::int64_t>& v) {
            ++tally[oracle::ref_park(v).lucky];
            ++total;
        });
        BigRat mass(0);
        // iterate subsets of [n] containing 1
        for (std::int64_t bits = 0; bits < (std::int64_t{1} << (n - 1)); ++bits) {
            std::vector<Car> L{1};
            for (std::int64_t t = 0; t < n - 1; ++t)
                if ((bits >> t) & 1) L.push_back(t + 2);
            const BigRat p = lucky_set_probability(n, L);
            mass += p;
            std::vector<std::int64_t> key(L.begin(), L.end());
            CHECK(p == BigRat(tally.count(key) ? tally[key] : 0, total));
        }
        CHECK(mass == BigRat(1));
    }
    // exact total mass also at n = 12 without enumeration
    BigRat mass12(0);
    for (std::int64_t bits = 0; bits < (1 << 11); ++bits) {
        std::vector<Car> L{1};
        for (std::int64_t t = 0; t < 11; ++t)
            if ((bits >> t) & 1) L.push_back(t + 2);
        mass12 += lucky_set_probability(12, L);
    }
    CHECK(mass12 == BigRat(1));
}

TEST_CASE("lucky count distribution") {
    const auto m3 = lucky_count_distribution(3);
    CHECK(m3 == std::vector<BigRat>{BigRat(2, 5), BigRat(2, 5), BigRat(1, 5)});
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto m = lucky_count_distribution(n);
        BigRat sum(0);
        for (const auto& x : m) sum += x;
        CHECK(sum == BigRat(1));
        CHECK(m.back() == BigRat(1, catalan(n)));  // only the identity is all-lucky
    }
    for (std::int64_t n = 1; n <= 8; ++n) {
        std::vector<std::int64_t> tally(static_cast<std::size_t>(n) + 1, 0);
        std::int64_t total = 0;
        oracle::for_each_wipf_direct(n, [&](const std::vector<std::int64_t>& v) {
            ++tally[oracle::ref_park(v).lucky.size()];
            ++total;
        });
        const auto m = lucky_count_distribution(n);
        for (std::int64_t k = 1; k <= n; ++k)
            CHECK(m[static_cast<std::size_t>(k - 1)] ==
                  BigRat(tally[static_cast<std::size_t>(k)], total));
    }
}

TEST_CASE("the reciprocal-factor variant over-counts") {
    const auto alt = lucky_count_distribution_alt(3);
    BigRat sum(0);
    for (const auto& x : alt) sum += x;
    CHECK(sum > BigRat(1));
    CHECK(sum == BigRat(47, 10));
}

TEST_CASE("expected lucky cars: 3n/(n+2) exactly") {
    CHECK(expected_lucky(1) == BigRat(1));
    CHECK(expected_lucky(3) == BigRat(9, 5));
    CHECK(expected_lucky(10) == BigRat(5, 2));
    for (std::int64_t n = 1; n <= 50; ++n) CHECK(expected_lucky(n) == BigRat(3 * n, n + 2));
}

TEST_CASE("asymptotic evaluators") {
    // direct plug-in at n = 10
    const double pi = std::acos(-1.0);
    const auto w10 = asymptotic_estimate(AsymptoticFormula::wipf_fraction, 10, 0);
    CHECK(w10.value ==
          doctest::Approx(1.0 / (std::exp(1.0) * std::sqrt(pi * 10)) * std::pow(0.4, 10)));
    CHECK(asymptotic_exact_ratio(AsymptoticFormula::wipf_fraction, 3, 0) == BigRat(5, 16));
    CHECK(asymptotic_estimate(AsymptoticFormula::last_entry_near_top, 12, 1).value == 0.0);
    // Poisson-form evaluator equals a direct evaluation when it fits in doubles
    const auto le = asymptotic_estimate(AsymptoticFormula::last_entry_fixed, 12, 3);
    const double lam = 12 + 3 - 2;
    CHECK(le.value == doctest::Approx(std::sqrt(pi * 12) * (12 - 3 + 1) * lam * lam /
                                      (2.0 * std::pow(4.0, 12))));
    // exact ratio of the near-top formula reads f_n(n - j)
    CHECK(asymptotic_exact_ratio(AsymptoticFormula::last_entry_near_top, 5, 1) ==
          BigRat(count_wipf_entry(5, 5, 4), catalan(5)));
}

TEST_CASE("binomial identity sweep") {
    const auto rep = identity_checks(200);
    CHECK(rep.all_passed);
    CHECK(rep.failures.empty());
    // n = 3 by hand: 0 + 3 + 12 = 15 = (2*3/4) binom(5,2)
    BigInt s1 = 0;
    for (std::int64_t j = 0; j <= 2; ++j) s1 += BigInt(j) * binomial(j + 2, j);
    CHECK(s1 == 15);
}

TEST_CASE("conditional monotonicity over WIPFs") {
    CHECK(conditional_monotonicity_check(4, 2, {1, 3}));
    CHECK(conditional_monotonicity_check(4, 3, {3}));
    CHECK(conditional_monotonicity_check(5, 3, {2, 4, 5}));
    CHECK(conditional_monotonicity_check(6, 4, {1, 2, 3, 6}));
    CHECK_THROWS_AS(conditional_monotonicity_check(4, 2, {3, 1}), std::domain_error);
}

TEST_SUITE_END();
