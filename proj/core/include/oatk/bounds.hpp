#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oatk/lp.hpp"
#include "oatk/rational.hpp"
#include "oatk/symbol_array.hpp"

namespace oatk {

/// Rao's bound M(k,s,t) = sum_{j<=t/2} C(k,j)(s-1)^j for even t. Odd t is
/// served for s=2 only, through the doubling identity
/// rao_bound(k,2,2u+1) = 2*rao_bound(k-1,2,2u); odd t with s != 2 throws.
unsigned long long rao_bound(int k, int s, int t);

/// s^k (1 - (s-1)k / (s(t+1))), exact; may be <= 0 and is reported as-is.
Rational friedman_bierbrauer(int k, int s, int t);

struct KhalyavinResult {
    bool applicable = false;                   // t >= (2k-2)/3, binary arrays
    bool simplicity_forced_at_equality = false;  // applicable and N == 2^{k-1}
    unsigned long long threshold = 0;            // 2^{k-1}
};

KhalyavinResult khalyavin_criterion(int k, int t, unsigned long long n);

enum class Theorem1Case {
    forced_simple,         // N < 2M
    multiplicity_at_most_2,  // 2M <= N < 3M
    boundary_doubled_case,   // N == 2M, s=2, u=2, k >= 5: simple or twice OA(16,5,2,4)
    no_conclusion,
};

const char* to_string(Theorem1Case c);

struct SimplicityVerdict {
    Theorem1Case kind = Theorem1Case::no_conclusion;
    unsigned long long rho_max_bound = 0;  // floor(N / M)
    std::string details;
};

/// Multiplicity verdict for a (hypothetical) OA(N,k,s,2u); u >= 1, 2u <= k.
SimplicityVerdict theorem1_verdict(unsigned long long n, int k, int s, int u);

struct ArrayAnalysis {
    SimplicityVerdict verdict;
    MultiplicityCensus census;
    unsigned long long rao = 0;            // M(k,s,2u)
    bool census_within_bound = false;      // rho_max <= floor(N/M)
    bool rao_tight = false;                // N == M
    // boundary_doubled_case with a non-simple array only: did it decompose as
    // two copies of a translate of the even-weight array?
    std::optional<bool> doubled_even_weight_confirmed;
};

/// Applies the multiplicity verdict to a concrete array. The array must pass
/// the character-sum check at strength 2u (throws VerificationError if not).
ArrayAnalysis analyze_array(const SymbolArray& a, int u);

/// True iff t is even and F_upper < 2 M(k,s,t), which certifies that the
/// minimum over simple arrays coincides with the unrestricted minimum.
bool corollary1_applies(int k, int s, int t, unsigned long long f_upper);

struct KerdockInterval {
    bool contained = false;
    std::optional<int> m;  // smallest even m >= 4 with ceil(2^(m-1/2)) <= k <= 2^m - 1
};

/// Membership of k in the strength-4 intervals covered by shortened Kerdock
/// codes; the lower comparison is done exactly via k^2 >= 2^(2m-1).
KerdockInterval kerdock_interval_contains(long long k);

/// (l1, l2) = ((k+1) +- sqrt(k-1)) / 2 when both are integers, else nullopt.
std::optional<std::pair<long long, long long>> ell_weights(long long k);

struct BoundReport {
    int k = 0, s = 0, t = 0;
    std::optional<unsigned long long> rao;  // absent for odd t with s != 2
    Rational friedman_bierbrauer;
    KhalyavinResult khalyavin;              // evaluated at N = threshold (equality case)
    std::optional<LPCertificate> lp;        // present when with_lp (s=2 only)
    unsigned long long best_lower = 0;
    bool integrality_lifted = false;        // best_lower rounded up to a multiple of s^t
    std::vector<std::string> notes;
};

/// Aggregates the closed-form lower bounds, optionally sharpened by the
/// Delsarte LP. `lift_integrality` rounds the final value up to the next
/// multiple of s^t (N = lambda s^t forces this); the raw bounds stay visible
/// in the fields either way.
BoundReport bound_report(int k, int s, int t, bool lift_integrality, bool with_lp = false);

}  // namespace oatk
