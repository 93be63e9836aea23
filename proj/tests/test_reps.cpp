#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "twistcond/errors.hpp"
#include "twistcond/reps.hpp"

using namespace twistcond;

namespace {

const LocalFieldParams q5 = make_field(5, 1);

CharacterX cyc(std::int64_t e, u64 level = 2) { return from_cyclic_exponent(q5, level, e); }

QuasiSquareIntegrable atom(u64 n, u64 a_min, CharacterX mu, std::string label = "A") {
    return QuasiSquareIntegrable::make(n, std::move(label), a_min, std::move(mu));
}

Representation single(QuasiSquareIntegrable a) { return Representation({std::move(a)}); }

std::vector<QuasiSquareIntegrable> small_corpus() {
    std::vector<QuasiSquareIntegrable> out;
    const auto mus = enumerate_X(q5, 2);
    for (u64 n = 1; n <= 3; ++n)
        for (u64 a_min = n - 1; a_min <= (n == 1 ? 0 : 4); ++a_min)
            for (const auto& mu : mus) out.push_back(atom(n, a_min, mu, "L" + std::to_string(a_min)));
    return out;
}

} // namespace

TEST_CASE("atom validation") {
    CHECK_THROWS_AS(atom(2, 0, trivial_character(q5)), ValidationError);
    CHECK_THROWS_AS(atom(3, 1, trivial_character(q5)), ValidationError);
    CHECK_THROWS_AS(atom(0, 0, trivial_character(q5)), ValidationError);
    CHECK_THROWS_AS(atom(1, 1, trivial_character(q5)), ValidationError);
    CHECK_THROWS_AS(QuasiSquareIntegrable::make(2, "A", 1, trivial_character(q5), cyc(1)),
                    ValidationError); // 2 * a(omega) = 4 > 1
    CHECK_THROWS_AS(QuasiSquareIntegrable::make(2, "", 1, trivial_character(q5)), ValidationError);
    CHECK_THROWS_AS(
        QuasiSquareIntegrable::make(2, "A", 1, trivial_character(q5), trivial_character(make_field(7, 1))),
        FieldMismatch);

    const auto gl1 = atom(1, 0, cyc(1), "anything");
    CHECK(gl1.minimal_label() == kTrivialLabel);
    CHECK(gl1.conductor() == 2);
    CHECK(QuasiSquareIntegrable::character(cyc(1)) == gl1);

    const auto st = atom(2, 1, trivial_character(q5));
    CHECK(st.conductor() == 1);
    CHECK(st.is_twist_minimal());
    const auto twisted = atom(2, 1, cyc(4));
    CHECK(twisted.conductor() == 4);
    CHECK_FALSE(twisted.is_twist_minimal());
}

TEST_CASE("representations are multisets") {
    const auto a = atom(2, 1, cyc(4));
    const auto b = atom(1, 0, cyc(5));
    CHECK(Representation({a, b}) == Representation({b, a}));
    CHECK_FALSE(Representation({a, b}) == Representation({a, a}));
    CHECK(Representation({a, b}).rank() == 3);
    CHECK(Representation({a, b}).conductor() == 4 + 1);
    CHECK_THROWS_AS(Representation({}), ValidationError);
    CHECK_THROWS_AS(Representation({a, atom(1, 0, from_cyclic_exponent(make_field(7, 1), 1, 1))}),
                    FieldMismatch);
}

TEST_CASE("twisted_qsi_conductor") {
    const auto steinberg = atom(2, 1, trivial_character(q5));
    for (const auto& chi : enumerate_Xprime(q5, 3)) CHECK(twisted_qsi_conductor(steinberg, chi) == 6);

    const auto twisted = atom(2, 1, cyc(4));
    CHECK(twisted_qsi_conductor(twisted, inverse(twisted.mu())) == 1);

    // a(chi) = 2 and a(chi mu) = 1 with chi = 1, mu = 4 on Z/20.
    CHECK(brute::cyclic_conductor(5, 2, 1) == 2);
    CHECK(brute::cyclic_conductor(5, 2, 5) == 1);
    CHECK(twisted_qsi_conductor(twisted, cyc(1)) == 2);

    CHECK_THROWS_AS(twisted_qsi_conductor(twisted, from_cyclic_exponent(make_field(7, 1), 1, 1)),
                    FieldMismatch);
}

TEST_CASE("twisted_conductor") {
    for (const auto& a : small_corpus()) CHECK(twisted_conductor(single(a), trivial_character(q5)) == a.conductor());

    // Two GL(1) atoms with a(mu) = 1, twisted by chi with a(chi) = 2.
    const auto gl1 = atom(1, 0, cyc(5));
    CHECK(brute::cyclic_conductor(5, 2, (1 + 5) % 20) == 2);
    CHECK(twisted_conductor(Representation({gl1, gl1}), cyc(1)) == 4);

    for (const auto& a : small_corpus()) {
        if (!a.is_twist_minimal()) continue;
        for (const auto& chi : enumerate_X(q5, 3)) {
            if (a.rank() * chi.conductor() == a.conductor()) continue;
            CHECK(twisted_conductor(single(a), chi) ==
                  std::max(a.conductor(), a.rank() * chi.conductor()));
        }
    }
}

TEST_CASE("delta_terms examples") {
    const auto minimal = atom(2, 3, trivial_character(q5));
    const auto unramified = delta_terms(single(minimal), trivial_character(q5));
    CHECK(unramified.dominant == 0);
    CHECK(unramified.interference == 0);

    for (const auto& chi : enumerate_Xprime(q5, 3)) {
        const auto b = delta_terms(single(atom(2, 1, trivial_character(q5))), chi);
        CHECK(b.dominant == 2 * 3 - 1);
        CHECK(b.interference == 0);
        CHECK(b.twisted_conductor == 6);
    }

    const auto b = delta_terms(single(atom(2, 1, cyc(4))), cyc(1));
    CHECK(b.dominant == 0);
    CHECK(b.interference == 2);
    CHECK(b.twisted_conductor == 2);
    CHECK(b.conductor == 4);
    CHECK(b.omega.empty());
    CHECK(twisted_qsi_conductor(atom(2, 1, cyc(4)), cyc(1)) == 2);
}

TEST_CASE("conductor identity and non-negativity over the Q_5 corpus") {
    const auto corpus = small_corpus();
    const auto chars = enumerate_X(q5, 3);
    for (const auto& a : corpus) {
        const auto pi = single(a);
        CHECK((a.conductor() % a.rank() == 0 || a.is_twist_minimal()));
        CHECK(twisted_qsi_conductor(a, inverse(a.mu())) == a.minimal_conductor());
        for (const auto& chi : chars) {
            const auto b = delta_terms(pi, chi); // throws on identity failure
            CHECK(b.twisted_conductor == twisted_conductor(pi, chi));
            CHECK(b.components[0].interference <= a.conductor());
            CHECK(b.components[0].in_omega == (a.conductor() > a.rank() * chi.conductor()));
            if (chi.conductor() > a.conductor()) CHECK(b.twisted_conductor == a.rank() * chi.conductor());
            const auto bounds = conductor_bounds(pi, chi.conductor());
            CHECK(bounds.lower <= b.twisted_conductor);
            CHECK(b.twisted_conductor <= bounds.upper);
            CHECK(b.twisted_conductor <= bh_bound(pi.conductor(), chi.conductor(), pi.rank()));
        }
    }
}

TEST_CASE("additivity over Langlands sums (random pairs)") {
    const auto corpus = small_corpus();
    const auto chars = enumerate_X(q5, 3);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_chi(0, chars.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = single(corpus[pick(rng)]);
        const auto b = single(corpus[pick(rng)]);
        const auto& chi = chars[pick_chi(rng)];
        const auto s = delta_terms(boxplus(a, b), chi);
        const auto da = delta_terms(a, chi);
        const auto db = delta_terms(b, chi);
        CHECK(s.conductor == da.conductor + db.conductor);
        CHECK(s.dominant == da.dominant + db.dominant);
        CHECK(s.interference == da.interference + db.interference);
        CHECK(s.twisted_conductor == da.twisted_conductor + db.twisted_conductor);
        for (std::int64_t n_psi : {-1, 0, 1})
            CHECK(epsilon_exponent(boxplus(a, b), n_psi) == epsilon_exponent(a, n_psi) + epsilon_exponent(b, n_psi));
    }
}

TEST_CASE("twist-minimal atoms with a non-trivial mu still satisfy the identity") {
    // n a(mu) <= a_min: pi = mu pi_min is itself twist minimal.
    const auto a = atom(2, 4, cyc(1));
    CHECK(a.is_twist_minimal());
    CHECK(a.conductor() == 4);
    for (const auto& chi : enumerate_X(q5, 3)) CHECK_NOTHROW(delta_terms(single(a), chi));
}

TEST_CASE("total_minimal") {
    const auto m = atom(2, 3, trivial_character(q5));
    CHECK(total_minimal(single(m)) == single(m));
    const Representation pi({atom(2, 1, cyc(4)), atom(1, 0, cyc(5))});
    CHECK(total_minimal(pi).conductor() == 1);
    CHECK(total_minimal(total_minimal(pi)) == total_minimal(pi));
}

TEST_CASE("conductor bounds and the BH bound") {
    const Representation pi({atom(2, 1, cyc(4)), atom(1, 0, cyc(5)), atom(3, 2, trivial_character(q5))});
    const auto b0 = conductor_bounds(pi, 0);
    CHECK(b0.lower == 1 + 0 + 2);
    CHECK(b0.upper == pi.conductor());

    const auto st = single(atom(2, 1, trivial_character(q5)));
    const auto b3 = conductor_bounds(st, 3);
    CHECK(b3.lower == 1);
    CHECK(b3.upper == 7);
    CHECK(twisted_conductor(st, enumerate_Xprime(q5, 3).front()) == 6);

    CHECK(bh_bound(1, 3, 2) == 6);
    CHECK(bh_bound(4, 0, 3) == 4);
}

TEST_CASE("level bookkeeping") {
    CHECK(level_from_conductor(1, 2) == 0);
    CHECK_THROWS_AS(level_from_conductor(0, 2), ValidationError);
    for (u64 n = 1; n <= 6; ++n)
        for (u64 l = 0; l <= 10; ++l) CHECK(level_from_conductor(conductor_from_level(l, n), n) == l);

    CHECK(norm_pullback_level(2, 3) == 4);
    for (u64 n = 1; n <= 6; ++n) {
        CHECK(norm_pullback_level(1, n) == 1);
        CHECK(norm_pullback_level(0, n) == 0);
        // least m with Nrd(U_D(m)) inside U_F(a)
        for (u64 a = 0; a <= 5; ++a) {
            u64 m = 0;
            while (nrd_image_level(m, n) < a) ++m;
            CHECK(norm_pullback_level(a, n) == m);
        }
    }

    CHECK(twisted_level(0, 5, false).value == 5);
    CHECK(twisted_level(0, 5, false).is_exact);
    CHECK(twisted_level(4, 4, true).value == 4);
    CHECK(twisted_level(4, 4, true).is_exact);
    CHECK(twisted_level(4, 4, false).value == 4);
    CHECK_FALSE(twisted_level(4, 4, false).is_exact);
}

TEST_CASE("epsilon exponent") {
    const auto pi = single(QuasiSquareIntegrable::make(2, "B", 4, trivial_character(q5)));
    CHECK(epsilon_exponent(pi, 0) == 4);
    CHECK(epsilon_exponent(pi, 1) == 2);
    CHECK(epsilon_exponent(pi, -1) == 6);
}

TEST_CASE("central character") {
    const auto mu = cyc(1);
    const auto gl1 = single(QuasiSquareIntegrable::make(1, kTrivialLabel, 0, mu, trivial_character(q5)));
    CHECK(central_character(gl1) == mu);

    const auto omega = cyc(5, 1);
    const auto minimal = single(QuasiSquareIntegrable::make(2, "C", 2, trivial_character(q5), omega));
    CHECK(central_character(minimal) == omega);

    const auto twisted = single(QuasiSquareIntegrable::make(2, "C", 2, cyc(3), omega));
    CHECK(central_character(twisted) == multiply(power(cyc(3), 2), omega));
    CHECK(2 * central_character(twisted).conductor() <= twisted.conductor());

    CHECK_THROWS_AS(central_character(single(atom(2, 1, mu))), ValidationError);
}
