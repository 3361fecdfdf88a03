#include <doctest.h>

#include <map>

#include "catalan.hpp"
#include "oracle.hpp"
#include "samplers.hpp"

using namespace park;

TEST_SUITE_BEGIN("samplers");

TEST_CASE("every draw satisfies its family predicate") {
    for (std::int64_t n : {1, 2, 3, 5, 8, 13, 20}) {
        for (Family f : {Family::parking_function, Family::weakly_increasing,
                         Family::identity_outcome}) {
            const SamplerSpec spec{f, n, 91};
            for (std::uint64_t t = 0; t < 10000 / static_cast<std::uint64_t>(n) + 50; ++t) {
                const auto alpha = sample(spec, t);
                REQUIRE(alpha.size() == n);
                const auto c = classify(alpha);
                switch (f) {
                    case Family::parking_function: CHECK(c.is_parking_function); break;
                    case Family::weakly_increasing: CHECK(c.is_weakly_increasing); break;
                    case Family::identity_outcome: CHECK(c.is_identity_outcome); break;
                }
            }
        }
    }
}

TEST_CASE("draws are pure functions of (spec, draw_index)") {
    const SamplerSpec spec{Family::parking_function, 9, 5};
    for (std::uint64_t t = 0; t < 64; ++t) CHECK(sample(spec, t) == sample(spec, t));
    const SamplerSpec other{Family::parking_function, 9, 6};
    std::int64_t diff = 0;
    for (std::uint64_t t = 0; t < 64; ++t) diff += !(sample(spec, t) == sample(other, t));
    CHECK(diff > 0);
}

TEST_CASE("degenerate sizes") {
    CHECK(sample({Family::identity_outcome, 1, 0}, 0).entries() == std::vector<Spot>{1});
    CHECK(sample({Family::weakly_increasing, 1, 0}, 3).entries() == std::vector<Spot>{1});
    CHECK(sample({Family::parking_function, 1, 0}, 7).entries() == std::vector<Spot>{1});
}

TEST_CASE("chi-square goodness of fit on the full support, n <= 5") {
    const std::uint64_t draws = 100000;
    for (std::int64_t n = 2; n <= 5; ++n) {
        // enumerate supports
        std::map<std::vector<std::int64_t>, std::int64_t> support;  // -> index
        for (Family f : {Family::parking_function, Family::weakly_increasing,
                         Family::identity_outcome}) {
            support.clear();
            oracle::for_each_list(n, [&](const std::vector<std::int64_t>& v) {
                const auto ref = oracle::ref_park(v);
                bool in = false;
                switch (f) {
                    case Family::parking_function: in = ref.failed.empty(); break;
                    case Family::weakly_increasing: {
                        bool mono = true, id = true;
                        for (std::int64_t i = 1; i <= n; ++i) {
                            if (v[static_cast<std::size_t>(i - 1)] > i) id = false;
                            if (i > 1 && v[static_cast<std::size_t>(i - 1)] <
                                             v[static_cast<std::size_t>(i - 2)])
                                mono = false;
                        }
                        in = mono && id;
                        break;
                    }
                    case Family::identity_outcome: {
                        in = true;
                        for (std::int64_t i = 1; i <= n; ++i)
                            if (v[static_cast<std::size_t>(i - 1)] > i) in = false;
                        break;
                    }
                }
                if (in) support.emplace(v, static_cast<std::int64_t>(support.size()));
            });

            std::vector<std::int64_t> counts(support.size(), 0);
            const SamplerSpec spec{f, n, 777};
            for (std::uint64_t t = 0; t < draws; ++t) {
                const auto alpha = sample(spec, t);
                std::vector<std::int64_t> key(alpha.entries().begin(), alpha.entries().end());
                auto it = support.find(key);
                REQUIRE(it != support.end());
                ++counts[static_cast<std::size_t>(it->second)];
            }
            const double expected = double(draws) / double(support.size());
            double chi2 = 0.0;
            for (std::int64_t c : counts) {
                const double d = double(c) - expected;
                chi2 += d * d / expected;
            }
            // significance 1e-3
            CHECK(chi2 < oracle::chisq_quantile(double(support.size() - 1)));
        }
    }
}

TEST_CASE("empirical WIPF statistics line up with the exact layer") {
    const auto rep = empirical_wipf_checks(3, 40000, 4242);
    CHECK(rep.within_ci);
    CHECK(rep.mean_lucky_exact == doctest::Approx(1.8));      // 9/5
    CHECK(rep.mean_last_exact == doctest::Approx(2.2));       // 11/5
    CHECK(rep.last_entry_exact[0] == doctest::Approx(0.2));   // f_3(1)/C_3
    CHECK(std::fabs(rep.mean_lucky - 1.8) < 0.05);
    const auto rep2 = empirical_wipf_checks(2, 30000, 1);
    CHECK(rep2.within_ci);
    CHECK(rep2.mean_last_exact == doctest::Approx(1.5));
}

TEST_SUITE_END();
