#include <doctest.h>

#include "oatk/bounds.hpp"
#include "oatk/character.hpp"
#include "oatk/constructions.hpp"
#include "oatk/strength.hpp"
#include "test_helpers.hpp"

using namespace oatk;

TEST_CASE("rao bound landmarks") {
    CHECK(rao_bound(5, 2, 4) == 16);
    for (int k = 2; k <= 64; ++k)
        CHECK(rao_bound(k, 2, 2) == static_cast<unsigned long long>(k) + 1);
    CHECK(rao_bound(11, 2, 4) == 67);
    CHECK(2 * rao_bound(11, 2, 4) == 11ULL * 11 + 11 + 2);
    for (int k = 4; k <= 64; ++k) {
        unsigned long long kk = static_cast<unsigned long long>(k);
        CHECK(rao_bound(k, 2, 4) == (kk * kk + kk + 2) / 2);
    }
    // ternary even strength
    CHECK(rao_bound(4, 3, 2) == 1 + 4 * 2);
    CHECK(rao_bound(4, 3, 4) == 1 + 8 + 6 * 4);
}

TEST_CASE("rao bound at odd strength uses the binary doubling identity") {
    for (int k = 2; k <= 20; ++k)
        for (int u = 0; 2 * u + 1 <= k; ++u)
            CHECK(rao_bound(k, 2, 2 * u + 1) == 2 * rao_bound(k - 1, 2, 2 * u));
    CHECK_THROWS_AS(rao_bound(5, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(rao_bound(3, 2, 4), std::invalid_argument);
}

TEST_CASE("friedman-bierbrauer is an exact rational") {
    CHECK(friedman_bierbrauer(4, 2, 3) == Rational(8));
    CHECK(friedman_bierbrauer(2, 2, 1) == Rational(2));
    CHECK(friedman_bierbrauer(5, 2, 4) == Rational(16));
    // can go nonpositive and is reported as-is
    CHECK(friedman_bierbrauer(10, 2, 1) == Rational(1024) * (Rational(1) - make_rational(10, 4)));
    CHECK(friedman_bierbrauer(10, 2, 1) < 0);
    CHECK(friedman_bierbrauer(3, 3, 2) == Rational(27) * (Rational(1) - make_rational(6, 9)));
}

TEST_CASE("khalyavin criterion") {
    auto r1 = khalyavin_criterion(7, 4, 64);
    CHECK(r1.applicable);
    CHECK(r1.simplicity_forced_at_equality);
    CHECK(r1.threshold == 64);

    auto r2 = khalyavin_criterion(7, 2, 8);
    CHECK_FALSE(r2.applicable);

    auto r3 = khalyavin_criterion(4, 2, 8);
    CHECK(r3.applicable);  // 2 == (2*4-2)/3
    CHECK(r3.simplicity_forced_at_equality);

    auto r4 = khalyavin_criterion(7, 4, 65);
    CHECK(r4.applicable);
    CHECK_FALSE(r4.simplicity_forced_at_equality);
}

TEST_CASE("theorem-1 verdicts by parameter region") {
    auto v1 = theorem1_verdict(128, 11, 2, 2);
    CHECK(v1.kind == Theorem1Case::forced_simple);  // M = 67, 128 < 134
    CHECK(v1.rho_max_bound == 1);

    auto v2 = theorem1_verdict(32, 5, 2, 2);
    CHECK(v2.kind == Theorem1Case::boundary_doubled_case);
    CHECK(v2.rho_max_bound == 2);

    auto v3 = theorem1_verdict(48, 5, 2, 2);
    CHECK(v3.kind == Theorem1Case::no_conclusion);  // 48 == 3M exactly
    CHECK(v3.rho_max_bound == 3);

    auto v4 = theorem1_verdict(40, 5, 2, 2);
    CHECK(v4.kind == Theorem1Case::multiplicity_at_most_2);

    // N = 2M without the (s=2, u=2, k>=5) shape stays in the at-most-2 case
    auto v5 = theorem1_verdict(2 * rao_bound(6, 2, 2), 6, 2, 1);
    CHECK(v5.kind == Theorem1Case::multiplicity_at_most_2);

    CHECK_THROWS_AS(theorem1_verdict(16, 3, 2, 2), std::invalid_argument);
}

TEST_CASE("analyze_array on the boundary doubled case") {
    SymbolArray e = even_weight_oa(5);
    ArrayAnalysis an = analyze_array(juxtapose(e, e), 2);
    CHECK(an.verdict.kind == Theorem1Case::boundary_doubled_case);
    CHECK(an.census.max_multiplicity == 2);
    CHECK(an.census_within_bound);
    REQUIRE(an.doubled_even_weight_confirmed.has_value());
    CHECK(*an.doubled_even_weight_confirmed);

    // a translated double is still a doubled translate of the code
    SymbolArray tr = translate(juxtapose(e, e), {1, 0, 1, 0, 0});
    ArrayAnalysis an_tr = analyze_array(tr, 2);
    REQUIRE(an_tr.doubled_even_weight_confirmed.has_value());
    CHECK(*an_tr.doubled_even_weight_confirmed);
}

TEST_CASE("analyze_array landmarks") {
    SymbolArray e = even_weight_oa(5);
    ArrayAnalysis an_e = analyze_array(e, 2);
    CHECK(an_e.census.is_simple);
    CHECK(an_e.rao == 16);
    CHECK(an_e.rao_tight);
    CHECK(an_e.verdict.kind == Theorem1Case::forced_simple);

    SymbolArray nr = nordstrom_robinson();
    ArrayAnalysis an_nr = analyze_array(nr, 2);
    CHECK(an_nr.census.is_simple);
    CHECK(an_nr.rao == 137);  // 1 + 16 + 120
    CHECK(an_nr.verdict.rho_max_bound == 1);
    CHECK(an_nr.census_within_bound);

    // strength precondition is enforced
    CHECK_THROWS_AS(analyze_array(parse_oa("2 4 2\n0000\n0001\n"), 1), VerificationError);
}

TEST_CASE("census law holds for random orthogonal pieces") {
    // every verified-strength array must respect rho_max <= floor(N/M)
    std::mt19937 rng(1234);
    std::vector<SymbolArray> arrays;
    arrays.push_back(even_weight_oa(4));
    arrays.push_back(even_weight_oa(6));
    arrays.push_back(sylvester_oa(3));
    arrays.push_back(juxtapose(sylvester_oa(3), sylvester_oa(3)));
    for (int i = 0; i < 10; ++i) arrays.push_back(test::random_array(rng, 32, 6));
    for (const auto& a : arrays) {
        for (int u = 1; 2 * u <= static_cast<int>(a.cols()); ++u) {
            if (!character_sum_check(a, 2 * u).holds) continue;
            auto an = analyze_array(a, u);
            CHECK(an.census_within_bound);
        }
    }
}

TEST_CASE("corollary 1 certifies monotone parameter sets") {
    for (int k = 2; k <= 40; ++k) CHECK(corollary1_applies(k, 2, 2, 2 * k));
    CHECK(corollary1_applies(15, 2, 4, 128));  // 128 < 242
    CHECK_FALSE(corollary1_applies(5, 2, 4, 32));  // 32 = 2M exactly: strict inequality fails
    CHECK_THROWS_AS(corollary1_applies(5, 2, 3, 16), std::invalid_argument);
}

TEST_CASE("kerdock interval membership") {
    auto r12 = kerdock_interval_contains(12);
    CHECK(r12.contained);
    CHECK(r12.m == 4);

    auto r15 = kerdock_interval_contains(15);
    CHECK(r15.contained);
    CHECK(r15.m == 4);

    CHECK_FALSE(kerdock_interval_contains(16).contained);
    CHECK_FALSE(kerdock_interval_contains(11).contained);  // 11^2 = 121 < 128
    CHECK_FALSE(kerdock_interval_contains(1).contained);

    auto r46 = kerdock_interval_contains(46);  // 46^2 = 2116 >= 2^11 = 2048, 46 <= 63
    CHECK(r46.contained);
    CHECK(r46.m == 6);
    CHECK_FALSE(kerdock_interval_contains(45).contained);  // 45^2 = 2025 < 2048
}

TEST_CASE("ell weights") {
    auto l5 = ell_weights(5);
    REQUIRE(l5.has_value());
    CHECK(*l5 == std::make_pair(4LL, 2LL));

    auto l10 = ell_weights(10);
    REQUIRE(l10.has_value());
    CHECK(*l10 == std::make_pair(7LL, 4LL));

    CHECK_FALSE(ell_weights(6).has_value());
    CHECK_FALSE(ell_weights(3).has_value());

    // consistency: l1 + l2 = k+1 and l1*l2 = (k^2+k+2)/4 whenever defined
    for (long long k = 2; k <= 145; ++k) {
        auto l = ell_weights(k);
        if (!l) continue;
        CHECK(l->first + l->second == k + 1);
        CHECK(l->first * l->second * 4 == k * k + k + 2);
    }
}

TEST_CASE("bound report aggregation") {
    BoundReport r = bound_report(5, 2, 4, false);
    REQUIRE(r.rao.has_value());
    CHECK(*r.rao == 16);
    CHECK(r.friedman_bierbrauer == Rational(16));
    CHECK(r.best_lower == 16);

    // (4,2,2): rao 5, integrality lifts to 8
    BoundReport r2 = bound_report(4, 2, 2, true);
    CHECK(*r2.rao == 5);
    CHECK(r2.khalyavin.applicable);
    CHECK(r2.best_lower == 8);

    BoundReport r3 = bound_report(5, 3, 3, false);
    CHECK_FALSE(r3.rao.has_value());  // odd t, s=3
    CHECK(r3.best_lower >= 27);
}
