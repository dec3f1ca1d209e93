#include "oatk/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "oatk/character.hpp"

namespace oatk {

unsigned long long rao_bound(int k, int s, int t) {
    if (k < 0 || s < 2 || t < 0 || t > k) throw std::invalid_argument("rao_bound: bad parameters");
    if (t % 2 != 0) {
        if (s != 2)
            throw std::invalid_argument(
                "rao_bound: odd strength is only available for s=2 (doubling identity)");
        return 2 * rao_bound(k - 1, 2, t - 1);
    }
    const int u = t / 2;
    BigInt m = 0;
    for (int j = 0; j <= u; ++j)
        m += binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)) *
             pow_int(static_cast<unsigned long>(s - 1), static_cast<unsigned long>(j));
    return to_ull_checked(m, "rao bound");
}

Rational friedman_bierbrauer(int k, int s, int t) {
    if (k < 1 || s < 2 || t < 0) throw std::invalid_argument("friedman_bierbrauer: bad parameters");
    const BigInt sk = pow_int(static_cast<unsigned long>(s), static_cast<unsigned long>(k));
    // s^k (1 - (s-1)k / (s(t+1)))
    Rational inner = Rational(1) - make_rational(BigInt(s - 1) * k, BigInt(s) * (t + 1));
    Rational r = Rational(sk) * inner;
    r.canonicalize();
    return r;
}

KhalyavinResult khalyavin_criterion(int k, int t, unsigned long long n) {
    if (k < 1 || k > 63 || t < 0) throw std::invalid_argument("khalyavin_criterion: bad parameters");
    KhalyavinResult r;
    r.threshold = 1ULL << (k - 1);
    r.applicable = 3 * t >= 2 * k - 2;
    r.simplicity_forced_at_equality = r.applicable && n == r.threshold;
    return r;
}

const char* to_string(Theorem1Case c) {
    switch (c) {
        case Theorem1Case::forced_simple: return "forced_simple";
        case Theorem1Case::multiplicity_at_most_2: return "multiplicity_at_most_2";
        case Theorem1Case::boundary_doubled_case: return "boundary_doubled_case";
        case Theorem1Case::no_conclusion: return "no_conclusion";
    }
    return "?";
}

SimplicityVerdict theorem1_verdict(unsigned long long n, int k, int s, int u) {
    if (u < 1 || 2 * u > k) throw std::invalid_argument("theorem1_verdict: need u >= 1, 2u <= k");
    if (n < 1) throw std::invalid_argument("theorem1_verdict: N must be positive");
    const unsigned long long m = rao_bound(k, s, 2 * u);
    SimplicityVerdict v;
    v.rho_max_bound = n / m;
    if (n == 2 * m && s == 2 && u == 2 && k >= 5) {
        v.kind = Theorem1Case::boundary_doubled_case;
        v.details = "N = 2M: the array is simple, or k = 5 and it is the juxtaposition of two "
                    "identical OA(16,5,2,4)";
    } else if (n < 2 * m) {
        v.kind = Theorem1Case::forced_simple;
        v.details = "N < 2M forces all rows distinct";
    } else if (n < 3 * m) {
        v.kind = Theorem1Case::multiplicity_at_most_2;
        v.details = "N < 3M forces every multiplicity <= 2";
    } else {
        v.kind = Theorem1Case::no_conclusion;
        v.details = "N >= 3M: only the generic bound rho <= floor(N/M) applies";
    }
    return v;
}

namespace {

// is the multiset exactly two copies of some translate of the even-weight code?
bool is_doubled_even_weight(const MultiplicityCensus& census, std::size_t k) {
    if (census.distinct_count != (std::size_t{1} << (k - 1))) return false;
    for (const auto& [row, cnt] : census.counts)
        if (cnt != 2) return false;
    // translating by any member maps a coset of the even-weight code onto the
    // code itself, so check parity after subtracting the first distinct row
    const SymbolRow& base = census.counts.begin()->first;
    for (const auto& [row, cnt] : census.counts) {
        int parity = 0;
        for (std::size_t c = 0; c < k; ++c) parity ^= row[c] ^ base[c];
        if (parity != 0) return false;
    }
    return true;
}

}  // namespace

ArrayAnalysis analyze_array(const SymbolArray& a, int u) {
    if (u < 1 || static_cast<std::size_t>(2 * u) > a.cols())
        throw std::invalid_argument("analyze_array: need u >= 1, 2u <= k");
    auto check = character_sum_check(a, 2 * u);
    if (!check.holds)
        throw VerificationError("analyze_array: array does not have strength " +
                                std::to_string(2 * u));
    ArrayAnalysis out;
    out.verdict = theorem1_verdict(a.rows(), static_cast<int>(a.cols()), a.alphabet(), u);
    out.census = multiplicity_census(a);
    out.rao = rao_bound(static_cast<int>(a.cols()), a.alphabet(), 2 * u);
    out.census_within_bound = out.census.max_multiplicity <= out.verdict.rho_max_bound;
    out.rao_tight = a.rows() == out.rao;
    if (out.verdict.kind == Theorem1Case::boundary_doubled_case && !out.census.is_simple)
        out.doubled_even_weight_confirmed = a.cols() == 5 && is_doubled_even_weight(out.census, 5);
    return out;
}

bool corollary1_applies(int k, int s, int t, unsigned long long f_upper) {
    if (t % 2 != 0) throw std::invalid_argument("corollary1_applies: t must be even");
    return f_upper < 2 * rao_bound(k, s, t);
}

KerdockInterval kerdock_interval_contains(long long k) {
    if (k < 1) throw std::invalid_argument("kerdock_interval_contains: k must be >= 1");
    const BigInt kb = to_bigint(k);
    const BigInt k2 = kb * kb;
    for (int m = 4;; m += 2) {
        const BigInt upper = pow_int(2, static_cast<unsigned long>(m)) - 1;
        const BigInt lower_sq = pow_int(2, static_cast<unsigned long>(2 * m - 1));
        if (k2 < lower_sq) return {false, std::nullopt};  // intervals only move right
        if (kb <= upper) return {true, m};
    }
}

std::optional<std::pair<long long, long long>> ell_weights(long long k) {
    if (k < 1) return std::nullopt;
    // kappa = sqrt(k-1) must be an integer and k+1 +- kappa must be even
    long long kappa = static_cast<long long>(std::sqrt(static_cast<double>(k - 1)));
    while (kappa * kappa > k - 1) --kappa;
    while ((kappa + 1) * (kappa + 1) <= k - 1) ++kappa;
    if (kappa * kappa != k - 1) return std::nullopt;
    if ((k + 1 + kappa) % 2 != 0) return std::nullopt;
    return std::make_pair((k + 1 + kappa) / 2, (k + 1 - kappa) / 2);
}

BoundReport bound_report(int k, int s, int t, bool lift_integrality, bool with_lp) {
    if (k < 1 || s < 2 || t < 1 || t > k) throw std::invalid_argument("bound_report: bad parameters");
    if (with_lp && s != 2)
        throw std::invalid_argument("bound_report: the LP bound supports s = 2 only");
    BoundReport rep;
    rep.k = k;
    rep.s = s;
    rep.t = t;

    BigInt best = pow_int(static_cast<unsigned long>(s), static_cast<unsigned long>(t));
    rep.notes.push_back("lambda >= 1 gives N >= s^t");

    if (t % 2 == 0 || s == 2) {
        rep.rao = rao_bound(k, s, t);
        if (to_bigint(*rep.rao) > best) best = to_bigint(*rep.rao);
        rep.notes.push_back(t % 2 == 0 ? "Rao bound at even strength"
                                       : "Rao bound via the binary doubling identity");
    } else {
        rep.notes.push_back("Rao bound unavailable: odd strength with s != 2");
    }

    rep.friedman_bierbrauer = friedman_bierbrauer(k, s, t);
    if (rep.friedman_bierbrauer > 0) {
        BigInt fb_ceil = rational_ceil(rep.friedman_bierbrauer);
        if (fb_ceil > best) {
            best = fb_ceil;
            rep.notes.push_back("Friedman-Bierbrauer bound is the strongest closed form here");
        }
    }

    if (s == 2 && k <= 63) {
        rep.khalyavin = khalyavin_criterion(k, t, 0);
        rep.khalyavin.simplicity_forced_at_equality = false;  // no concrete N in a pure report
        if (rep.khalyavin.applicable) {
            if (to_bigint(rep.khalyavin.threshold) > best) best = to_bigint(rep.khalyavin.threshold);
            rep.notes.push_back("strength >= (2k-2)/3: N >= 2^{k-1}, equality forces simplicity");
        }
    }

    if (with_lp) {
        rep.lp = lp_bound(k, t);
        BigInt lp_ceil = rational_ceil(rep.lp->optimum);
        if (lp_ceil > best) {
            best = lp_ceil;
            rep.notes.push_back("Delsarte LP is the strongest bound here");
        }
    }

    if (lift_integrality) {
        BigInt st = pow_int(static_cast<unsigned long>(s), static_cast<unsigned long>(t));
        BigInt lifted = round_up_to_multiple(best, st);
        if (lifted != best) {
            rep.integrality_lifted = true;
            rep.notes.push_back("lower bound rounded up to a multiple of s^t (lambda integral)");
            best = lifted;
        }
    }
    rep.best_lower = to_ull_checked(best, "best lower bound");
    return rep;
}

}  // namespace oatk
