// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// nonzero exit when anything fails. Each criterion also carries a wall-clock
// limit and fails when it is exceeded.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oatk/boolfun.hpp"
#include "oatk/bounds.hpp"
#include "oatk/character.hpp"
#include "oatk/constructions.hpp"
#include "oatk/lp.hpp"
#include "oatk/search.hpp"
#include "oatk/strength.hpp"
#include "oatk/symbol_array.hpp"

using namespace oatk;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

// every array any criterion touches, with its verified strength; criterion 5
// sweeps this registry
struct RegisteredArray {
    SymbolArray array;
    int verified_strength;
    std::string label;
};
std::vector<RegisteredArray> g_registry;

void register_array(const SymbolArray& a, int verified_strength, const std::string& label) {
    g_registry.push_back({a, verified_strength, label});
}

int g_failures = 0;

void criterion(int id, const std::string& name, double limit_s,
               const std::function<void(Checker&)>& body) {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > limit_s) {
        std::ostringstream os;
        os << "runtime " << elapsed << "s exceeds limit " << limit_s << "s";
        c.failures.push_back(os.str());
    }
    if (c.failures.empty()) {
        std::printf("[PASS] criterion %2d: %s (%.2fs)\n", id, name.c_str(), elapsed);
    } else {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s (%.2fs)\n", id, name.c_str(), elapsed);
        for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
    }
    std::fflush(stdout);
}

SymbolArray delete_trailing_to(SymbolArray a, std::size_t k) {
    while (a.cols() > k) a = delete_column(a, a.cols());
    return a;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");

    criterion(1, "Rao bound exactness", 1.0, [](Checker& c) {
        c.expect(rao_bound(5, 2, 4) == 16, "rao(5,2,4) != 16");
        for (int k = 2; k <= 64; ++k)
            c.expect(rao_bound(k, 2, 2) == static_cast<unsigned long long>(k) + 1,
                     "rao(k,2,2) != k+1 at k=" + std::to_string(k));
        for (int k = 4; k <= 64; ++k) {
            unsigned long long kk = k;
            c.expect(rao_bound(k, 2, 4) == (kk * kk + kk + 2) / 2,
                     "rao(k,2,4) != (k^2+k+2)/2 at k=" + std::to_string(k));
        }
    });

    criterion(2, "counting and character-sum verifiers agree", 30.0, [](Checker& c) {
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<std::size_t> pick_n(1, 32);
        std::uniform_int_distribution<std::size_t> pick_k(1, 7);
        std::uniform_int_distribution<int> pick_s(2, 3);
        long long disagreements = 0;
        for (int i = 0; i < 500; ++i) {
            std::size_t n = pick_n(rng), k = pick_k(rng);
            int s = pick_s(rng);
            std::uniform_int_distribution<int> sym(0, s - 1);
            std::vector<Symbol> cells(n * k);
            for (auto& x : cells) x = static_cast<Symbol>(sym(rng));
            SymbolArray a(k, s, std::move(cells));
            int verified = -1;
            for (int t = 0; t <= static_cast<int>(k); ++t) {
                bool by_count = verify_strength(a, t).holds;
                bool by_chars = character_sum_check(a, t).holds;
                if (by_count != by_chars) ++disagreements;
                if (by_count && t == verified + 1) verified = t;
            }
            register_array(a, verified < 0 ? 0 : verified, "random array");
        }
        std::vector<std::pair<SymbolArray, std::string>> constructed;
        constructed.emplace_back(even_weight_oa(3), "even-weight 3");
        constructed.emplace_back(even_weight_oa(5), "even-weight 5");
        constructed.emplace_back(sylvester_oa(2), "sylvester 2");
        constructed.emplace_back(sylvester_oa(3), "sylvester 3");
        constructed.emplace_back(double_strength(even_weight_oa(5), 2), "doubled even-weight 5");
        constructed.emplace_back(nordstrom_robinson(), "nordstrom-robinson");
        constructed.emplace_back(zero_shorten(nordstrom_robinson()), "shortened NR");
        constructed.emplace_back(dual_code_oa(linear_13_3_7_code()), "dual [13,3,7]");
        for (const auto& [a, label] : constructed) {
            int verified = 0;
            for (int t = 0; t <= static_cast<int>(a.cols()); ++t) {
                bool by_count = verify_strength(a, t).holds;
                bool by_chars = character_sum_check(a, t).holds;
                if (by_count != by_chars) ++disagreements;
                if (by_count) verified = t;
            }
            register_array(a, verified, label);
        }
        c.expect(disagreements == 0,
                 std::to_string(disagreements) + " verifier disagreements (expected zero)");
    });

    criterion(3, "even-weight construction is Rao-tight at k=5", 1.0, [](Checker& c) {
        SymbolArray e = even_weight_oa(5);
        c.expect(e.rows() == 16, "N != 16");
        c.expect(max_strength(e) == 4, "max strength != 4");
        c.expect(multiplicity_census(e).is_simple, "not simple");
        c.expect(e.rows() == rao_bound(5, 2, 4), "N != M(5,2,4)");
        register_array(e, 4, "even-weight 5");
    });

    criterion(4, "theorem-1 boundary case at N = 2M", 1.0, [](Checker& c) {
        SymbolArray e = even_weight_oa(5);
        SymbolArray dd = juxtapose(e, e);
        c.expect(dd.rows() == 2 * rao_bound(5, 2, 4), "N != 2M");
        c.expect(verify_strength(dd, 4).holds, "strength 4 fails");
        auto census = multiplicity_census(dd);
        bool all_two = census.distinct_count == 16;
        for (const auto& [row, cnt] : census.counts) all_two = all_two && cnt == 2;
        c.expect(all_two, "multiplicities are not uniformly 2");
        ArrayAnalysis an = analyze_array(dd, 2);
        c.expect(an.verdict.kind == Theorem1Case::boundary_doubled_case,
                 "verdict is not the boundary doubled case");
        c.expect(an.doubled_even_weight_confirmed.value_or(false),
                 "doubled even-weight decomposition not confirmed");
        c.expect(an.census_within_bound, "census exceeds floor(N/M)");
        register_array(dd, 4, "doubled even-weight 5");
    });

    criterion(6, "nordstrom-robinson chain down to 11 columns", 10.0, [](Checker& c) {
        SymbolArray nr = nordstrom_robinson();
        c.expect(nr.rows() == 256 && nr.cols() == 16, "shape is not 256 x 16");
        c.expect(multiplicity_census(nr).is_simple, "not simple");
        c.expect(verify_strength(nr, 5).holds, "strength 5 fails");
        c.expect(!verify_strength(nr, 6).holds, "strength 6 unexpectedly holds");
        register_array(nr, 5, "nordstrom-robinson");

        // pairwise minimum distance 6, recomputed here
        int mind = 16;
        for (std::size_t i = 0; i < nr.rows(); ++i)
            for (std::size_t j = i + 1; j < nr.rows(); ++j) {
                int d = 0;
                for (std::size_t col = 0; col < 16; ++col)
                    d += nr.at(i, col) != nr.at(j, col);
                if (d < mind) mind = d;
            }
        c.expect(mind == 6, "minimum distance != 6");

        SymbolArray sh = zero_shorten(nr);
        c.expect(sh.rows() == 128 && sh.cols() == 15, "shortening is not 128 x 15");
        c.expect(multiplicity_census(sh).is_simple, "shortened array not simple");
        c.expect(verify_strength(sh, 4).holds, "shortened strength 4 fails");
        c.expect(!verify_strength(sh, 5).holds, "shortened strength 5 unexpectedly holds");
        register_array(sh, 4, "shortened NR");

        for (int k = 11; k <= 15; ++k) {
            SymbolArray a = delete_trailing_to(sh, static_cast<std::size_t>(k));
            bool simple = multiplicity_census(a).is_simple;
            bool strength4 = verify_strength(a, 4).holds;
            c.expect(simple && strength4,
                     "deletion to k=" + std::to_string(k) + " lost simplicity or strength");
            c.expect(corollary1_applies(k, 2, 4, 128),
                     "corollary 1 fails at k=" + std::to_string(k));
            c.expect(128 < static_cast<unsigned long long>(k) * k + k + 2,
                     "128 !< k^2+k+2 at k=" + std::to_string(k));
            register_array(a, 4, "NR chain k=" + std::to_string(k));
        }
    });

    criterion(7, "doubling identity lifts the NR chain to strength 5", 20.0, [](Checker& c) {
        SymbolArray sh = zero_shorten(nordstrom_robinson());
        for (int k = 11; k <= 15; ++k) {
            SymbolArray base = delete_trailing_to(sh, static_cast<std::size_t>(k));
            SymbolArray doubled = double_strength(base, 2);
            c.expect(doubled.rows() == 256, "doubled N != 256 at k=" + std::to_string(k));
            c.expect(doubled.cols() == static_cast<std::size_t>(k) + 1,
                     "doubled k mismatch at k=" + std::to_string(k));
            c.expect(verify_strength(doubled, 5).holds,
                     "doubled strength 5 fails at k=" + std::to_string(k));
            c.expect(multiplicity_census(doubled).is_simple,
                     "doubled array not simple at k=" + std::to_string(k));
            register_array(doubled, 5, "doubled NR chain k+1=" + std::to_string(k + 1));
        }
    });

    criterion(8, "dual of the [13,3,7] code is a simple OA(1024,13,2,6)", 10.0, [](Checker& c) {
        SymbolArray dual = dual_code_oa(linear_13_3_7_code());
        c.expect(dual.rows() == 1024 && dual.cols() == 13, "shape is not 1024 x 13");
        c.expect(multiplicity_census(dual).is_simple, "not simple");
        c.expect(verify_strength(dual, 6).holds, "strength 6 fails");
        c.expect(!verify_strength(dual, 7).holds, "strength 7 unexpectedly holds");
        register_array(dual, 6, "dual [13,3,7]");
    });

    criterion(9, "Delsarte LP pins", 30.0, [](Checker& c) {
        struct Pin {
            int k, t;
            long expected;
        };
        for (Pin pin : {Pin{12, 6, 768}, Pin{13, 6, 1024}, Pin{8, 4, 64}, Pin{9, 5, 128}}) {
            LPCertificate cert = lp_bound(pin.k, pin.t);
            c.expect(cert.optimum == Rational(pin.expected),
                     "lp(" + std::to_string(pin.k) + "," + std::to_string(pin.t) +
                         ") != " + std::to_string(pin.expected) + " (got " +
                         to_string(cert.optimum) + ")");
            c.expect(cert.optimum.get_den() == 1, "optimum has a nontrivial denominator");
            auto check = verify_certificate(cert);
            c.expect(check.ok, "certificate replay failed: " + check.violation);
        }
    });

    criterion(10, "search reproduces the minimal-rows table entries", 300.0, [](Checker& c) {
        struct Entry {
            int k, t;
            unsigned long long expected;
            unsigned long long limit;
        };
        for (Entry e : {Entry{2, 1, 2, 8}, Entry{3, 2, 4, 16}, Entry{4, 2, 8, 16},
                        Entry{4, 3, 8, 16}, Entry{5, 3, 16, 32}, Entry{5, 4, 16, 32}}) {
            MinRowsResult r = min_rows(e.k, 2, e.t, true, e.limit);
            std::string tag = "(" + std::to_string(e.k) + ",2," + std::to_string(e.t) + ")";
            if (!r.min_n) {
                c.expect(false, "min_rows " + tag + " found nothing");
                continue;
            }
            c.expect(*r.min_n == e.expected, "min_rows " + tag + " = " + std::to_string(*r.min_n) +
                                                 ", expected " + std::to_string(e.expected));
            // exhaustion certificates must exist for every smaller feasible N
            unsigned long long st = 1;
            for (int i = 0; i < e.t; ++i) st *= 2;
            std::size_t expected_trail = static_cast<std::size_t>(e.expected / st);
            c.expect(r.trail.size() == expected_trail,
                     "trail size mismatch for " + tag);
            for (std::size_t i = 0; i + 1 < r.trail.size(); ++i)
                c.expect(r.trail[i].exhausted,
                         "missing exhaustion certificate at N=" + std::to_string(r.trail[i].n));
            const SearchOutcome& last = r.trail.back();
            c.expect(last.found.has_value(), "last trail entry has no array");
            if (last.found) {
                c.expect(verify_strength(*last.found, e.t).holds, "found array fails re-verification");
                c.expect(multiplicity_census(*last.found).is_simple, "found array not simple");
                register_array(*last.found, e.t, "search minimum " + tag);
            }
        }
    });

    criterion(11, "correlation-immunity bridge", 30.0, [](Checker& c) {
        BooleanFunction even5 = oa_to_support(even_weight_oa(5));
        c.expect(ci_order(even5) == 4, "ci order of the even-weight indicator != 4");

        BooleanFunction nr = oa_to_support(nordstrom_robinson());
        c.expect(ci_order(nr) == 5, "ci order of the Nordstrom-Robinson indicator != 5");

        std::mt19937 rng(77);
        for (int trial = 0; trial < 50; ++trial) {
            std::uniform_int_distribution<std::size_t> pick_k(1, 6);
            std::size_t k = pick_k(rng);
            std::size_t space = std::size_t{1} << k;
            std::uniform_int_distribution<std::size_t> pick_n(1, space);
            std::size_t n = pick_n(rng);
            std::vector<std::size_t> universe(space);
            for (std::size_t i = 0; i < space; ++i) universe[i] = i;
            std::shuffle(universe.begin(), universe.end(), rng);
            universe.resize(n);
            std::sort(universe.begin(), universe.end());
            std::vector<Symbol> cells;
            for (std::size_t x : universe)
                for (std::size_t col = 0; col < k; ++col)
                    cells.push_back(static_cast<Symbol>((x >> (k - 1 - col)) & 1));
            SymbolArray a(k, 2, std::move(cells));

            BooleanFunction f = oa_to_support(a);
            c.expect(support_to_oa(f) == a, "round trip changed a sorted simple array");
            c.expect(oa_to_support(support_to_oa(f)) == f, "round trip changed a function");
        }
    });

    criterion(12, "ell-weight split of the even-weight rows", 1.0, [](Checker& c) {
        auto l = ell_weights(5);
        c.expect(l.has_value() && l->first == 4 && l->second == 2, "ell_weights(5) != (4,2)");
        SymbolArray e = even_weight_oa(5);
        for (std::size_t i = 0; i < e.rows(); ++i) {
            std::size_t w = 0;
            for (Symbol b : e.row(i)) w += b;
            if (w == 0) continue;
            c.expect(w == 2 || w == 4, "nonzero row of weight " + std::to_string(w));
        }
    });

    // runs last: every array registered above must satisfy rho_max <= floor(N/M)
    criterion(5, "theorem-1(i) census law over the whole suite", 60.0, [](Checker& c) {
        std::size_t checked = 0;
        for (const auto& reg : g_registry) {
            for (int u = 1; 2 * u <= reg.verified_strength; ++u) {
                unsigned long long m =
                    rao_bound(static_cast<int>(reg.array.cols()), reg.array.alphabet(), 2 * u);
                auto census = multiplicity_census(reg.array);
                c.expect(census.max_multiplicity <= reg.array.rows() / m,
                         reg.label + ": rho_max " + std::to_string(census.max_multiplicity) +
                             " > floor(N/M) at u=" + std::to_string(u));
                ++checked;
            }
        }
        c.expect(checked > 0, "registry was empty");
        std::fprintf(stderr, "  (census law checked on %zu array/u pairs)\n", checked);
    });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
