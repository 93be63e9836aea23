#include <doctest.h>

#include "brute.hpp"
#include "twistcond/errors.hpp"
#include "twistcond/localfield.hpp"

using namespace twistcond;

TEST_CASE("make_field computes q and validates p and f") {
    CHECK(make_field(5, 1).q == 5);
    CHECK(make_field(3, 2).q == 9);
    CHECK_THROWS_WITH_AS(make_field(4, 1), doctest::Contains("p not an odd prime"), ValidationError);
    CHECK_THROWS_AS(make_field(2, 1), ValidationError);
    CHECK_THROWS_AS(make_field(9, 1), ValidationError);
    CHECK_THROWS_AS(make_field(5, 0), ValidationError);
}

TEST_CASE("unit quotient group structure") {
    const auto q5 = make_field(5, 1);

    SUBCASE("level 0 is trivial") {
        const auto g = unit_quotient_group(q5, 0);
        CHECK(g.invariant_factors().empty());
        CHECK(g.order() == 1);
        CHECK(g.filtration_subgroup(0).order() == 1);
    }

    SUBCASE("Q_5 level 2 has order 20 and U(1)/U(2) of order 5") {
        const auto g = unit_quotient_group(q5, 2);
        CHECK(g.order() == 20);
        // Exhaustive subgroup count with the test model.
        u64 members = 0;
        const auto bg = brute::group(5, 1, 2);
        brute::for_each_element(bg.orders(), [&](const brute::Vec& x) {
            members += brute::in_filtration(bg, x, 1) ? 1 : 0;
        });
        CHECK(members == 5);
        CHECK(g.filtration_subgroup(1).order() == 5);
        CHECK(g.filtration_subgroup(2).order() == 1);
        CHECK(g.filtration_subgroup(0).order() == 20);
    }

    SUBCASE("q = 9, level 3") {
        const auto g = unit_quotient_group(make_field(3, 2), 3);
        const std::vector<u64> expected{8, 9, 9};
        CHECK(std::vector<u64>(g.invariant_factors().begin(), g.invariant_factors().end()) == expected);
        CHECK(g.order() == 648);
        CHECK(g.order() == 9 * 9 * 8);
    }

    SUBCASE("filtration index beyond the level is rejected") {
        CHECK_THROWS_AS(unit_quotient_group(q5, 2).filtration_subgroup(3), ValidationError);
    }
}

TEST_CASE("filtration properties over several fields") {
    for (auto [p, f] : {std::pair<u64, u64>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
        const auto field = make_field(p, f);
        for (u64 m = 1; m <= 4; ++m) {
            const auto g = unit_quotient_group(field, m);
            u64 product = 1;
            for (u64 n : g.invariant_factors()) product *= n;
            CHECK(product == brute::ipow(field.q, m - 1) * (field.q - 1));
            CHECK(product == g.order());
            for (u64 l = 1; l <= m; ++l)
                CHECK(g.filtration_subgroup(l).order() == brute::ipow(field.q, m - l));
            // decreasing: every generator step at l+1 is a multiple of the step at l
            for (u64 l = 0; l < m; ++l) {
                const auto a = g.filtration_subgroup(l);
                const auto b = g.filtration_subgroup(l + 1);
                for (std::size_t i = 0; i < a.steps.size(); ++i) CHECK(b.steps[i] % a.steps[i] == 0);
            }
            // U(l)/U(k) has order q^(k-l) for k >= l >= k/2 >= 1
            for (u64 k = 2; k <= m; ++k)
                for (u64 l = (k + 1) / 2; l <= k; ++l)
                    CHECK(g.filtration_subgroup(l).order() / g.filtration_subgroup(k).order() ==
                          brute::ipow(field.q, k - l));
        }
    }
}

TEST_CASE("membership in filtration subgroups agrees with the test model") {
    const auto field = make_field(3, 2);
    const auto g = unit_quotient_group(field, 3);
    const auto bg = brute::group(3, 2, 3);
    for (u64 l = 0; l <= 3; ++l) {
        const auto sub = g.filtration_subgroup(l);
        u64 agree = 0, total = 0;
        brute::for_each_element(bg.orders(), [&](const brute::Vec& x) {
            ++total;
            agree += sub.contains(x) == brute::in_filtration(bg, x, l) ? 1 : 0;
        });
        CHECK(agree == total);
    }
}

TEST_CASE("nrd_image_level is the ceiling of m/n") {
    CHECK(nrd_image_level(5, 2) == 3);
    CHECK(nrd_image_level(6, 3) == 2);
    for (u64 n = 1; n <= 7; ++n) CHECK(nrd_image_level(0, n) == 0);
    for (u64 m = 1; m <= 40; ++m)
        for (u64 n = 1; n <= 7; ++n) {
            const u64 c = nrd_image_level(m, n);
            CHECK(n * (c - 1) < m);
            CHECK(m <= n * c);
        }
    CHECK_THROWS_AS(nrd_image_level(3, 0), ValidationError);
}
