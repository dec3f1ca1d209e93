#include <doctest.h>

#include "oatk/constructions.hpp"
#include "oatk/strength.hpp"
#include "test_helpers.hpp"

using namespace oatk;

namespace {

// independent replay of a witness: count the tuple over the named columns
std::size_t replay(const SymbolArray& a, const StrengthWitness& w) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool match = true;
        for (std::size_t p = 0; p < w.columns.size(); ++p)
            match = match && a.at(i, w.columns[p]) == w.tuple[p];
        if (match) ++count;
    }
    return count;
}

SymbolArray full_factorial(int k) {
    std::vector<Symbol> cells;
    for (std::size_t x = 0; x < (std::size_t{1} << k); ++x)
        for (int c = 0; c < k; ++c) cells.push_back(static_cast<Symbol>((x >> (k - 1 - c)) & 1));
    return SymbolArray(static_cast<std::size_t>(k), 2, std::move(cells));
}

}  // namespace

TEST_CASE("even-weight length-5 array has strength 4 with lambda 1") {
    SymbolArray e = even_weight_oa(5);
    auto rep = verify_strength(e, 4);
    CHECK(rep.holds);
    CHECK(rep.lambda == Rational(1));
    CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("strength 5 fails on the even-weight array with a replayable witness") {
    SymbolArray e = even_weight_oa(5);
    auto rep = verify_strength(e, 5);
    CHECK_FALSE(rep.holds);
    CHECK(rep.lambda == make_rational(1, 2));
    REQUIRE(rep.witness.has_value());
    const auto& w = *rep.witness;
    CHECK(w.columns == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(replay(e, w) == w.observed);
    CHECK(Rational(static_cast<unsigned long>(w.observed)) != w.expected);
    // no odd-weight tuple occurs at all; 10000 is one such absent tuple
    StrengthWitness absent{{0, 1, 2, 3, 4}, {1, 0, 0, 0, 0}, 0, rep.lambda};
    CHECK(replay(e, absent) == 0);
}

TEST_CASE("full factorial has strength k") {
    for (int k = 1; k <= 6; ++k) {
        SymbolArray a = full_factorial(k);
        auto rep = verify_strength(a, k);
        CHECK(rep.holds);
        CHECK(rep.lambda == Rational(1));
        CHECK(max_strength(a) == k);
    }
}

TEST_CASE("t0 always holds and range errors throw") {
    SymbolArray a = parse_oa("1 2 2\n01\n");
    CHECK(verify_strength(a, 0).holds);
    CHECK_THROWS_AS(verify_strength(a, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_strength(a, -1), std::invalid_argument);
}

TEST_CASE("constant column fails strength 1 with the first witness") {
    SymbolArray a = parse_oa("2 2 2\n00\n01\n");
    auto rep = verify_strength(a, 1);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.witness.has_value());
    // subset {column 0} is scanned first; tuple 0 occurs twice, expected once
    CHECK(rep.witness->columns == std::vector<std::size_t>{0});
    CHECK(rep.witness->tuple == SymbolRow{0});
    CHECK(rep.witness->observed == 2);
    CHECK(rep.witness->expected == Rational(1));
}

TEST_CASE("max strength landmarks") {
    CHECK(max_strength(even_weight_oa(5)) == 4);
    CHECK(max_strength(parse_oa("1 3 2\n000\n")) == 0);
    CHECK(max_strength(sylvester_oa(3)) == 2);
}

TEST_CASE("deleting a column of the even-weight array leaves the full factorial") {
    SymbolArray d = delete_column(even_weight_oa(5), 1);
    CHECK(verify_strength(d, 4).holds);  // (even 5-vectors minus first bit) = all 4-bit tuples
    // row order differs (deletion keeps input order), the multiset does not
    CHECK(multiplicity_census(d).counts == multiplicity_census(full_factorial(4)).counts);
}

TEST_CASE("strength is monotone downward") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        SymbolArray a = test::random_array(rng, 24, 5);
        int prev_ok = -1;
        for (int t = 0; t <= static_cast<int>(a.cols()); ++t) {
            bool h = verify_strength(a, t).holds;
            if (h) CHECK(prev_ok == t - 1);  // no gaps: holds(t) implies holds(t-1)
            if (h) prev_ok = t;
        }
        CHECK(max_strength(a) == prev_ok);
    }
}

TEST_CASE("transforms preserve strength as specified") {
    SymbolArray e = even_weight_oa(5);

    // deletion preserves strength t (often more)
    SymbolArray d = delete_column(e, 3);
    CHECK(verify_strength(d, 4).holds);

    // juxtaposition of two strength-t arrays keeps strength >= t
    CHECK(verify_strength(juxtapose(e, e), 4).holds);

    // translation preserves max strength exactly and the census shape
    SymbolArray tr = translate(e, {1, 1, 1, 1, 1});
    CHECK(max_strength(tr) == 4);
    CHECK(multiplicity_census(tr).is_simple);
    CHECK(tr.rows() == 16);
}

TEST_CASE("every witness replays on random failures") {
    std::mt19937 rng(31337);
    int failures_seen = 0;
    for (int i = 0; i < 60; ++i) {
        SymbolArray a = test::random_array(rng, 16, 4);
        for (int t = 1; t <= static_cast<int>(a.cols()); ++t) {
            auto rep = verify_strength(a, t);
            if (rep.holds) continue;
            ++failures_seen;
            REQUIRE(rep.witness.has_value());
            CHECK(replay(a, *rep.witness) == rep.witness->observed);
            CHECK(Rational(static_cast<unsigned long>(rep.witness->observed)) !=
                  rep.witness->expected);
        }
    }
    CHECK(failures_seen > 0);
}
