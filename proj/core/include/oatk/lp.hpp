#pragma once

#include <string>
#include <vector>

#include "oatk/rational.hpp"

namespace oatk {

/// Binary Krawtchouk polynomial K_j(x; n) = sum_i (-1)^i C(x,i) C(n-x, j-i).
/// Exact for n <= 64.
long long krawtchouk(int j, int x, int n);

/// Exact optimum of
///   min sum_i A_i   s.t.  A_0 = 1, A_i >= 0,
///                         sum_i K_j(i) A_i  = 0   for 1 <= j <= t,
///                         sum_i K_j(i) A_i >= 0   for t <  j <= k,
/// with the primal distance distribution and the dual multipliers that
/// certify optimality (zero duality gap, checked in exact arithmetic).
struct LPCertificate {
    int k = 0, t = 0;
    Rational optimum;
    std::vector<Rational> distribution;  // A_0..A_k
    // dual[0] pairs with the A_0 = 1 row (its value IS the optimum);
    // dual[j], j = 1..k, pairs with the K_j moment row and is >= 0 for j > t.
    std::vector<Rational> dual;
    BigInt integer_bound;        // ceil(optimum), lifted to a multiple of 2^t
    bool integer_bound_lifted = false;  // lift moved it past the plain ceiling
};

LPCertificate lp_bound(int k, int t);

struct CertificateCheck {
    bool ok = false;
    std::string violation;  // names the first violated constraint

    explicit operator bool() const { return ok; }
};

/// Replays every primal constraint, dual feasibility, and the zero-gap
/// identity from scratch; independent of the solver.
CertificateCheck verify_certificate(const LPCertificate& cert);

/// {"k","t","optimum":{"num","den"},"A":[...],"dual":[...]} with rationals as
/// {"num","den"} decimal strings.
std::string certificate_to_json(const LPCertificate& cert);

}  // namespace oatk
