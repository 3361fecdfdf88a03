#include <doctest.h>

#include <cmath>

#include "gambler.hpp"
#include "oracle.hpp"

using namespace park;

namespace {
StepProbability exact_p(std::int64_t a, std::int64_t b) { return StepProbability(BigRat(a, b)); }
PreferenceList pl(std::vector<Spot> v) { return PreferenceList(std::move(v)); }
}  // namespace

TEST_SUITE_BEGIN("gambler");

TEST_CASE("probability parsing picks the mode") {
    CHECK(StepProbability::parse("1/2").is_exact());
    CHECK(StepProbability::parse("1/2").rational() == BigRat(1, 2));
    CHECK_FALSE(StepProbability::parse("0.5").is_exact());
    CHECK(StepProbability::parse("1").is_exact());
    CHECK_THROWS(StepProbability::parse("3/2"));
    CHECK_THROWS(StepProbability::parse("-0.25"));
}

TEST_CASE("open_prob_single: frozen values") {
    CHECK(open_prob_single(4, 2, exact_p(1, 2)).rational() == BigRat(1, 2));
    CHECK(open_prob_single(7, 7, StepProbability(0.123)).value() == 1.0);
    // a single-step geometry must give exactly p
    CHECK(open_prob_single(2, 1, exact_p(2, 3)).rational() == BigRat(2, 3));
    CHECK(open_prob_single(2, 1, StepProbability(0.37)).value() == doctest::Approx(0.37));
    CHECK_THROWS_AS(open_prob_single(3, 4, exact_p(1, 2)), std::domain_error);
    CHECK_THROWS_AS(open_prob_single(3, 0, exact_p(1, 2)), std::domain_error);
}

TEST_CASE("open_prob_single: monotone in s and p, continuous at 1/2") {
    for (std::int64_t i : {2, 5, 9}) {
        for (double p : {0.2, 0.45, 0.5, 0.65, 0.95}) {
            double prev = -1.0;
            for (std::int64_t s = 1; s <= i; ++s) {
                const double w = open_prob_single(i, s, StepProbability(p)).value();
                CHECK(w >= prev);
                prev = w;
            }
        }
        for (std::int64_t s = 1; s < i; ++s) {
            double prev = -1.0;
            for (double p : {0.0, 0.2, 0.4, 0.5, 0.6, 0.8, 1.0}) {
                const double w = open_prob_single(i, s, StepProbability(p)).value();
                CHECK(w >= prev - 1e-15);
                prev = w;
            }
            const double at_half = open_prob_single(i, s, StepProbability(0.5)).value();
            for (double eps : {1e-6, -1e-6}) {
                const double near = open_prob_single(i, s, StepProbability(0.5 + eps)).value();
                CHECK(std::fabs(near - at_half) < 1e-5);
            }
            // inside the crossover the p = 1/2 branch is used verbatim
            CHECK(open_prob_single(i, s, StepProbability(0.5 + 1e-10)).value() ==
                  doctest::Approx(double(s) / double(i)).epsilon(1e-12));
        }
    }
}

TEST_CASE("open_prob_all: product formula") {
    CHECK(open_prob_all(pl({1, 2, 3, 4}), exact_p(1, 3)).rational() == BigRat(1));
    CHECK(open_prob_all(pl({1, 1}), exact_p(1, 2)).rational() == BigRat(1, 2));
    CHECK(open_prob_all(pl({1, 1, 1}), exact_p(1, 2)).rational() == BigRat(1, 6));
    // at p = 1/2 the product is (prod alpha_k)/n!
    CHECK(open_prob_all(pl({1, 2, 2, 3}), exact_p(1, 2)).rational() ==
          BigRat(1 * 2 * 2 * 3, 24));
    CHECK_THROWS_AS(open_prob_all(pl({2, 1}), exact_p(1, 2)), std::domain_error);
}

TEST_CASE("open_expected_time_single: frozen values") {
    CHECK(open_expected_time_single(2, 1, exact_p(1, 2)).rational() == BigRat(1));
    CHECK(open_expected_time_single(5, 5, exact_p(9, 10)).rational() == BigRat(0));
    // single-step geometry again pins the value to 1 on the p != 1/2 branch
    CHECK(open_expected_time_single(2, 1, exact_p(2, 3)).rational() == BigRat(1));
    CHECK(open_expected_time_single(2, 1, StepProbability(0.77)).value() == doctest::Approx(1.0));
    CHECK(open_expected_time_single(3, 1, exact_p(1, 2)).rational() == BigRat(8, 3));
}

TEST_CASE("open_expected_time_all: sum of singles equals the closed form at 1/2") {
    CHECK(open_expected_time_all(pl({1, 2, 3}), exact_p(1, 2)).rational() == BigRat(0));
    CHECK(open_expected_time_all(pl({1, 1}), exact_p(1, 2)).rational() == BigRat(1));
    CHECK(open_expected_time_all_closed_half(pl({1, 1})).rational() == BigRat(1));
    CHECK(open_expected_time_all(pl({1, 1, 1}), exact_p(1, 2)).rational() == BigRat(11, 3));
    // the two routes agree exactly for a sweep of inputs
    for (const auto& alpha :
         {std::vector<Spot>{1, 1, 2, 2}, {1, 2, 2, 4, 4}, {1, 1, 1, 1, 1, 6}, {1, 2, 3, 3, 5, 5, 7}}) {
        CHECK(open_expected_time_all(pl(alpha), exact_p(1, 2)).rational() ==
              open_expected_time_all_closed_half(pl(alpha)).rational());
    }
}

TEST_CASE("ruin path counts: recurrence vs closed form") {
    CHECK(ruin_path_count(3, 1) == 1);
    CHECK(ruin_path_count(0, 0) == 1);
    CHECK(ruin_path_count(4, 4) == 1);
    CHECK(ruin_path_count(5, 0) == 0);
    for (std::int64_t d = 1; d <= 8; ++d)
        for (std::int64_t l = 0; l <= 12; ++l)
            CHECK(ruin_path_count(d + 2 * l, d) == catalan_convolution(d, l));
    CHECK_THROWS_AS(ruin_path_count(-1, 0), std::domain_error);
}

TEST_CASE("catalan convolution degenerates to Catalan numbers at d = 1") {
    // C_l = binom(2l, l)/(l+1)
    for (std::int64_t l = 0; l <= 12; ++l)
        CHECK(catalan_convolution(1, l) == exact_div(binomial(2 * l, l), BigInt(l + 1)));
    for (std::int64_t d = 1; d <= 6; ++d) CHECK(catalan_convolution(d, 0) == 1);
    CHECK_THROWS_AS(catalan_convolution(0, 3), std::domain_error);
}

TEST_CASE("unbounded series vs closed form below 1/2") {
    for (double p : {0.1, 0.25, 0.4}) {
        for (std::int64_t d = 1; d <= 6; ++d) {
            const auto res = unbounded_prob_series(d, p, 1e-12);
            REQUIRE(res.converged);
            CHECK(res.tail_bound <= 1e-12);
            const double closed = std::pow(p / (1.0 - p), double(d));
            CHECK(std::fabs(res.value - closed) < 1e-10);
        }
    }
}

TEST_CASE("unbounded probability: frozen values") {
    CHECK(unbounded_prob_single(1, exact_p(1, 3)).closed.rational() == BigRat(1, 2));
    CHECK(unbounded_prob_single(3, StepProbability(0.6)).closed.value() == 1.0);
    CHECK(unbounded_prob_single(2, exact_p(1, 4)).closed.rational() == BigRat(1, 9));
    CHECK(unbounded_prob_single(0, StepProbability(0.1)).closed.value() == 1.0);
    // p = 1/2: closed form 1, series flagged as skipped
    const auto at_half = unbounded_prob_single(4, exact_p(1, 2));
    CHECK(at_half.closed.rational() == BigRat(1));
    CHECK(at_half.series.skipped);
}

TEST_CASE("unbounded: all-cars closed forms") {
    CHECK(unbounded_prob_all(pl({1, 1}), exact_p(1, 3)).rational() == BigRat(1, 2));
    CHECK(unbounded_prob_all(pl({1, 1, 2}), StepProbability(0.7)).value() == 1.0);
    CHECK(unbounded_prob_all(pl({1, 2, 3}), StepProbability(0.1)).value() == 1.0);
}

TEST_CASE("unbounded time and variance") {
    CHECK(unbounded_expected_time(2, exact_p(3, 4)).rational() == BigRat(4));
    CHECK(unbounded_time_variance(1, exact_p(3, 4)).rational() == BigRat(6));
    CHECK(unbounded_expected_time(0, exact_p(3, 4)).rational() == BigRat(0));
    CHECK(unbounded_time_variance(0, exact_p(3, 4)).rational() == BigRat(0));
    CHECK_THROWS_AS(unbounded_expected_time(2, exact_p(1, 2)), std::domain_error);
    CHECK_THROWS_AS(unbounded_time_variance(2, exact_p(1, 4)), std::domain_error);
    CHECK(unbounded_expected_time_all(pl({1, 1, 1}), exact_p(3, 4)).rational() == BigRat(6));
    CHECK(unbounded_time_variance_all(pl({1, 1, 1}), exact_p(3, 4)).rational() == BigRat(18));
}

TEST_CASE("bounded path counts: frozen values and brute force") {
    CHECK(bounded_path_count(3, 0, 2) == 1);
    CHECK(bounded_path_count(3, 1, 2) == 1);
    for (std::int64_t i : {2, 3, 4, 5, 6, 9}) CHECK(bounded_path_count(i, 0, i - 1) == 1);
    // frozen from enumeration
    CHECK(bounded_path_count(4, 2, 3) == 4);
    CHECK(bounded_path_count(5, 3, 4) == 21);
    for (std::int64_t i = 2; i <= 6; ++i)
        for (std::int64_t j = 0; j <= 4; ++j) {
            const std::int64_t steps = (i - 1) + 2 * j;
            CHECK(bounded_path_count(i, j, i - 1) ==
                  oracle::strip_walks_brute(1, i - 1, 1, i, steps));
        }
    CHECK_THROWS_AS(bounded_path_count(1, 0, 0), std::domain_error);
}

TEST_CASE("strip path counts match brute force from both pinned starts") {
    for (std::int64_t i = 2; i <= 6; ++i)
        for (std::int64_t j = 0; j <= 4; ++j) {
            CHECK(strip_path_count(1, i - 1, 1, i, j) ==
                  oracle::strip_walks_brute(1, i - 1, 1, i, (i - 1) + 2 * j));
            CHECK(strip_path_count(1, i - 1, i - 1, i, j) ==
                  oracle::strip_walks_brute(1, i - 1, i - 1, i, 1 + 2 * j));
        }
}

TEST_CASE("expected time via paths agrees with the closed form") {
    for (std::int64_t i : {2, 3, 5, 8}) {
        for (double p : {0.3, 0.5, 0.7}) {
            for (std::int64_t s : {std::int64_t{1}, i - 1}) {
                const auto series = expected_time_via_paths(i, s, p, 1e-12);
                REQUIRE(series.converged);
                const double closed = open_expected_time_single(i, s, StepProbability(p)).value();
                CHECK(std::fabs(series.value - closed) < 1e-8);
            }
        }
    }
    CHECK(expected_time_via_paths(2, 1, 0.5).value == doctest::Approx(1.0));
    CHECK(expected_time_via_paths(3, 1, 0.5).value == doctest::Approx(8.0 / 3.0).epsilon(1e-10));
    CHECK(expected_time_via_paths(3, 2, 0.6).value ==
          doctest::Approx(open_expected_time_single(3, 2, StepProbability(0.6)).value())
              .epsilon(1e-10));
    CHECK_THROWS_AS(expected_time_via_paths(5, 2, 0.5), std::domain_error);
}

TEST_CASE("linear-system residuals") {
    for (std::int64_t i : {2, 3, 4, 5, 6}) {
        for (auto pq : {std::pair<std::int64_t, std::int64_t>{1, 3}, {1, 2}, {3, 4}}) {
            const auto rep = verify_open_time_solution(i, exact_p(pq.first, pq.second));
            CHECK(rep.exact_mode);
            CHECK(rep.exact_zero);
            CHECK(rep.max_residual == 0.0);
            CHECK(rep.equations == i - 1);
        }
    }
    CHECK(verify_open_time_solution(5, StepProbability(0.5)).max_residual < 1e-12);
    CHECK(verify_open_time_solution(10, StepProbability(0.9)).max_residual < 1e-10);
}

TEST_CASE("mirror symmetry of the product formula under the involution") {
    // relabel the mirrored list back through the coordinate flip and swap
    // p <-> q: the product formula must reproduce the original value
    for (const auto& entries : {std::vector<Spot>{1, 1, 2}, {1, 2, 2, 3}, {1, 1, 1, 4, 5}}) {
        const PreferenceList alpha = pl(entries);
        const PreferenceList beta = mirror(alpha);
        const std::int64_t n = alpha.size();
        for (auto pr : {BigRat(1, 3), BigRat(1, 2), BigRat(7, 10)}) {
            const Scalar direct = open_prob_all(alpha, StepProbability(pr));
            // reversed protocol on beta: car i targets spot n-i+1 walking
            // left-first; flipping x -> n+1-x maps it onto the standard walk
            BigRat prod(1);
            for (Car i = 1; i <= n; ++i) {
                const std::int64_t target = i;  // n-i+1 flipped
                const std::int64_t start = n + 1 - beta.pref(i);
                prod *= open_prob_single(target, start, StepProbability(pr)).rational();
            }
            CHECK(direct.rational() == prod);
        }
    }
}

TEST_SUITE_END();
