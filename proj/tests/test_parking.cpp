#include <doctest.h>

#include <map>
#include <set>

#include "catalan.hpp"
#include "dyck.hpp"
#include "prefs.hpp"
#include "oracle.hpp"

using namespace park;

namespace {
PreferenceList pl(std::vector<Spot> v) { return PreferenceList(std::move(v)); }
}  // namespace

TEST_SUITE_BEGIN("parking");

TEST_CASE("classify basics") {
    auto c = classify(pl({1, 2, 1}));
    CHECK(c.is_parking_function);
    CHECK(c.is_identity_outcome);
    CHECK_FALSE(c.is_weakly_increasing);

    c = classify(pl({2, 1, 3}));
    CHECK(c.is_parking_function);
    CHECK_FALSE(c.is_identity_outcome);
    CHECK_FALSE(c.is_weakly_increasing);

    c = classify(pl({3, 3, 3}));
    CHECK_FALSE(c.is_parking_function);
    CHECK_FALSE(c.is_identity_outcome);

    c = classify(pl({1, 1, 2}));
    CHECK(c.is_weakly_increasing);
    CHECK(c.is_identity_outcome);
    CHECK(c.is_parking_function);

    CHECK_THROWS_AS(pl({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(pl({1, 3}), std::invalid_argument);
}

TEST_CASE("classical protocol examples") {
    auto r = classical_park(pl({1, 1, 1}));
    CHECK(r.slots == std::vector<Car>{1, 2, 3});
    CHECK(r.lucky == std::vector<Car>{1});
    CHECK(r.failed.empty());
    CHECK(r.total_displacement == 3);

    r = classical_park(pl({3, 1, 2}));  // a permutation: everyone lucky
    CHECK(r.lucky == std::vector<Car>{1, 2, 3});

    r = classical_park(pl({1, 2, 2}));
    CHECK(r.lucky == std::vector<Car>{1, 2});
    CHECK(r.slots[2] == 3);

    r = classical_park(pl({2, 2, 2}));
    CHECK(r.failed == std::vector<Car>{3});
    CHECK(r.slots == std::vector<Car>{0, 1, 2});
}

TEST_CASE("classify agrees with protocol, and family counts are recovered") {
    // |PF_n| = (n+1)^(n-1), |PF_n(id)| = n!, |WIPF_n| = C_n
    const std::int64_t expected_pf[] = {0, 1, 3, 16, 125, 1296, 16807};
    const std::int64_t expected_id[] = {0, 1, 2, 6, 24, 120, 720};
    const std::int64_t expected_wi[] = {0, 1, 2, 5, 14, 42, 132};
    for (std::int64_t n = 1; n <= 6; ++n) {
        std::int64_t pf = 0, id = 0, wi = 0;
        oracle::for_each_list(n, [&](const std::vector<std::int64_t>& v) {
            const auto c = classify(pl(v));
            const auto ref = oracle::ref_park(v);
            CHECK(c.is_parking_function == ref.failed.empty());
            pf += c.is_parking_function;
            id += c.is_identity_outcome;
            wi += c.is_weakly_increasing;
            if (c.is_identity_outcome) {
                // identity outcome means car i parks in spot i
                for (std::int64_t s = 1; s <= n; ++s)
                    CHECK(ref.slots[static_cast<std::size_t>(s - 1)] == s);
            }
        });
        CHECK(pf == expected_pf[n]);
        CHECK(id == expected_id[n]);
        CHECK(wi == expected_wi[n]);
    }
}

TEST_CASE("classical protocol matches the reference oracle exhaustively") {
    for (std::int64_t n = 1; n <= 6; ++n) {
        oracle::for_each_list(n, [&](const std::vector<std::int64_t>& v) {
            const auto got = classical_park(pl(v));
            const auto ref = oracle::ref_park(v);
            CHECK(got.slots == ref.slots);
            CHECK(got.lucky == ref.lucky);
            CHECK(got.failed == ref.failed);
            CHECK(got.total_displacement == ref.displacement);
        });
    }
}

TEST_CASE("displacement") {
    CHECK(displacement(pl({1, 2, 3})) == std::vector<std::int64_t>{0, 0, 0});
    CHECK(displacement(pl({1, 1, 1})) == std::vector<std::int64_t>{0, 1, 2});
    CHECK(displacement(pl({1, 1, 2, 3, 3, 3, 3, 7})) ==
          std::vector<std::int64_t>{0, 1, 1, 1, 2, 3, 4, 1});
    CHECK_THROWS_AS(displacement(pl({2, 1, 3})), std::domain_error);
}

TEST_CASE("mirror involution") {
    CHECK(mirror(pl({1, 1, 1})).entries() == std::vector<Spot>{3, 3, 3});
    CHECK(mirror(pl({1, 2, 3})).entries() == std::vector<Spot>{3, 2, 1});
    for (std::int64_t n = 1; n <= 5; ++n)
        oracle::for_each_list(n, [&](const std::vector<std::int64_t>& v) {
            CHECK(mirror(mirror(pl(v))) == pl(v));
        });
}

TEST_CASE("mirror maps identity-outcome lists onto reverse-outcome lists") {
    for (std::int64_t n = 1; n <= 7; ++n) {
        std::set<std::vector<Spot>> image;
        std::int64_t id_count = 0;
        oracle::for_each_list(n, [&](const std::vector<std::int64_t>& v) {
            if (!classify(pl(v)).is_identity_outcome) return;
            ++id_count;
            const auto m = mirror(pl(v));
            for (Car i = 1; i <= n; ++i) CHECK(m.pref(i) >= n - i + 1);
            image.insert(m.entries());
        });
        CHECK(static_cast<std::int64_t>(image.size()) == id_count);  // bijection
    }
}

TEST_CASE("dyck bijection on the worked example") {
    const auto path = DyckPath::parse("UUDUDUUUUDDDDUDD");
    CHECK(dyck_to_wipf(path).entries() == std::vector<Spot>{1, 1, 2, 3, 3, 3, 3, 7});
    CHECK(wipf_to_dyck(pl({1, 1, 2, 3, 3, 3, 3, 7})) == path);
}

TEST_CASE("dyck bijection degenerate shapes") {
    // UD repeated -> identity preferences; staircase -> all ones
    std::string ud, stairs;
    for (int k = 0; k < 5; ++k) ud += "UD";
    stairs = std::string(5, 'U') + std::string(5, 'D');
    CHECK(dyck_to_wipf(DyckPath::parse(ud)).entries() == std::vector<Spot>{1, 2, 3, 4, 5});
    CHECK(dyck_to_wipf(DyckPath::parse(stairs)).entries() == std::vector<Spot>{1, 1, 1, 1, 1});
}

TEST_CASE("dyck validation") {
    CHECK_THROWS(DyckPath::parse("DU"));
    CHECK_THROWS(DyckPath::parse("UUD"));
    CHECK_THROWS(DyckPath::parse("UXDD"));
    CHECK_THROWS_AS(DyckPath(std::vector<bool>{}), std::domain_error);
}

TEST_CASE("returns: frozen examples") {
    CHECK(dyck_returns(DyckPath::parse("UDUDUD")) == 3);
    CHECK(dyck_returns(DyckPath::parse("UUUDDD")) == 1);
    // the worked bijection example has a single return, matching its one
    // lucky car
    CHECK(dyck_returns(DyckPath::parse("UUDUDUUUUDDDDUDD")) == 1);
    CHECK(classical_park(pl({1, 1, 2, 3, 3, 3, 3, 7})).lucky.size() == 1);
}

TEST_CASE("bijection inverse + returns equal lucky count, all WIPFs") {
    for (std::int64_t n = 1; n <= 10; ++n) {
        std::int64_t seen = 0;
        for_each_dyck_path(n, [&](const DyckPath& path) {
            ++seen;
            const auto alpha = dyck_to_wipf(path);
            CHECK(wipf_to_dyck(alpha) == path);
            CHECK(dyck_returns(path) ==
                  static_cast<std::int64_t>(classical_park(alpha).lucky.size()));
        });
        CHECK(BigInt(seen) == catalan(n));
    }
}

TEST_CASE("library WIPF enumeration matches the direct recursive oracle") {
    for (std::int64_t n = 1; n <= 8; ++n) {
        std::set<std::vector<std::int64_t>> direct;
        oracle::for_each_wipf_direct(n, [&](const std::vector<std::int64_t>& v) { direct.insert(v); });
        std::set<std::vector<std::int64_t>> via_dyck;
        for_each_wipf(n, [&](const PreferenceList& alpha) {
            std::vector<std::int64_t> v(alpha.entries().begin(), alpha.entries().end());
            CHECK(classify(alpha).is_weakly_increasing);
            via_dyck.insert(std::move(v));
        });
        CHECK(direct == via_dyck);
    }
}

TEST_SUITE_END();
