#include "oatk/lp.hpp"

#include <sstream>
#include <stdexcept>

namespace oatk {

long long krawtchouk(int j, int x, int n) {
    if (n < 0 || n > 64 || j < 0 || j > n || x < 0 || x > n)
        throw std::invalid_argument("krawtchouk: need 0 <= j,x <= n <= 64");
    BigInt sum = 0;
    for (int i = 0; i <= j; ++i) {
        BigInt term = binomial(static_cast<unsigned long>(x), static_cast<unsigned long>(i)) *
                      binomial(static_cast<unsigned long>(n - x), static_cast<unsigned long>(j - i));
        if (i & 1)
            sum -= term;
        else
            sum += term;
    }
    if (!sum.fits_slong_p()) throw std::overflow_error("krawtchouk value exceeds 64 bits");
    return sum.get_si();
}

namespace {

// Dense-tableau primal simplex with Bland's anti-cycling rule over exact
// rationals. Small dimensions only (tens of variables), which is all the
// Delsarte LP ever needs here.
class Simplex {
public:
    // min c.x  s.t.  A x = b, x >= 0   (b >= 0 required)
    Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), m_(a_.size()), n_(c_.size()) {}

    void solve() {
        phase1();
        phase2();
    }

    Rational objective() const {
        Rational obj = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) obj += c_[basis_[i]] * rhs_[i];
        return obj;
    }

    std::vector<Rational> primal_solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
        return x;
    }

    // y solving B^T y = c_B, recomputed from the original data so it does not
    // inherit any state from the pivoting path
    std::vector<Rational> dual_solution() const {
        std::vector<std::vector<Rational>> sys(m_, std::vector<Rational>(m_ + 1, Rational(0)));
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t i = 0; i < m_; ++i) sys[r][i] = column(basis_[r], i);
            sys[r][m_] = basis_[r] < n_ ? c_[basis_[r]] : Rational(0);
        }
        // Gaussian elimination, exact
        for (std::size_t col = 0, row = 0; col < m_ && row < m_; ++col) {
            std::size_t piv = row;
            while (piv < m_ && sys[piv][col] == 0) ++piv;
            if (piv == m_) continue;
            std::swap(sys[row], sys[piv]);
            Rational inv = sys[row][col];
            for (auto& v : sys[row]) v /= inv;
            for (std::size_t r = 0; r < m_; ++r) {
                if (r == row || sys[r][col] == 0) continue;
                Rational f = sys[r][col];
                for (std::size_t cc = 0; cc <= m_; ++cc) sys[r][cc] -= f * sys[row][cc];
            }
            ++row;
        }
        std::vector<Rational> y(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) y[i] = sys[i][m_];
        return y;
    }

private:
    // entry (row) of an extended column: structural j < n_, artificial j >= n_
    Rational column(std::size_t j, std::size_t row) const {
        if (j < n_) return a_[row][j];
        return j - n_ == row ? Rational(1) : Rational(0);
    }

    void phase1() {
        const std::size_t total = n_ + m_;
        tableau_.assign(m_, std::vector<Rational>(total, Rational(0)));
        rhs_ = b_;
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = a_[i][j];
            tableau_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
        std::vector<Rational> cost(total, Rational(0));
        for (std::size_t j = n_; j < total; ++j) cost[j] = 1;
        run(cost, total);

        Rational infeas = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= n_) infeas += rhs_[i];
        if (infeas != 0) throw std::logic_error("simplex: infeasible system");

        // pivot lingering zero-level artificials out; drop redundant rows
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t enter = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (tableau_[i][j] != 0) {
                    enter = j;
                    break;
                }
            if (enter == n_) {
                tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
            } else {
                pivot(i, enter, tableau_[0].size());
                ++i;
            }
        }
    }

    void phase2() { run(c_, n_); }

    void run(const std::vector<Rational>& cost, std::size_t ncols) {
        for (;;) {
            // reduced costs via y = c_B B^{-1} read off the current tableau
            std::vector<Rational> y(m_, Rational(0));
            for (std::size_t i = 0; i < m_; ++i)
                if (basis_[i] < cost.size()) y[i] = cost[basis_[i]];

            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {  // Bland: first improving index
                Rational red = cost[j];
                for (std::size_t i = 0; i < m_; ++i) red -= y[i] * tableau_[i][j];
                if (red < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols) return;  // optimal

            std::size_t leave = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tableau_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / tableau_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) throw std::logic_error("simplex: unbounded objective");
            pivot(leave, enter, tableau_[0].size());
        }
    }

    void pivot(std::size_t row, std::size_t col, std::size_t ncols) {
        Rational inv = tableau_[row][col];
        for (std::size_t j = 0; j < ncols; ++j) tableau_[row][j] /= inv;
        rhs_[row] /= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tableau_[i][col] == 0) continue;
            Rational f = tableau_[i][col];
            for (std::size_t j = 0; j < ncols; ++j) tableau_[i][j] -= f * tableau_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_, c_;
    std::size_t m_, n_;

    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LPCertificate lp_bound(int k, int t) {
    if (k < 1 || k > 32 || t < 1 || t > k)
        throw std::invalid_argument("lp_bound: need 1 <= t <= k <= 32");

    // standard form: variables A_0..A_k plus one surplus per inequality row
    const std::size_t na = static_cast<std::size_t>(k) + 1;
    const std::size_t ns = static_cast<std::size_t>(k - t);
    const std::size_t nvars = na + ns;
    const std::size_t nrows = static_cast<std::size_t>(k) + 1;

    std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(nvars, Rational(0)));
    std::vector<Rational> b(nrows, Rational(0));
    std::vector<Rational> c(nvars, Rational(0));

    a[0][0] = 1;  // A_0 = 1
    b[0] = 1;
    for (int j = 1; j <= k; ++j) {
        for (int i = 0; i <= k; ++i) a[j][i] = to_rational(krawtchouk(j, i, k));
        if (j > t) a[j][na + (j - t - 1)] = -1;  // >= 0 rows get a surplus
    }
    for (std::size_t i = 0; i < na; ++i) c[i] = 1;

    Simplex simplex(std::move(a), std::move(b), std::move(c));
    simplex.solve();

    LPCertificate cert;
    cert.k = k;
    cert.t = t;
    cert.optimum = simplex.objective();
    auto x = simplex.primal_solution();
    cert.distribution.assign(x.begin(), x.begin() + na);
    auto y = simplex.dual_solution();
    // dual_solution is indexed by the original rows, which may have shrunk if
    // phase 1 dropped redundancies; the Delsarte system is full rank, so the
    // sizes must agree
    if (y.size() != nrows) throw std::logic_error("lp_bound: unexpected redundant rows");
    cert.dual = std::move(y);

    BigInt raw_ceil = rational_ceil(cert.optimum);
    BigInt lifted = round_up_to_multiple(raw_ceil, pow_int(2, static_cast<unsigned long>(t)));
    cert.integer_bound = lifted;
    cert.integer_bound_lifted = lifted != raw_ceil;

    auto check = verify_certificate(cert);
    if (!check.ok) throw std::logic_error("lp_bound: emitted certificate failed replay: " + check.violation);
    return cert;
}

CertificateCheck verify_certificate(const LPCertificate& cert) {
    const int k = cert.k, t = cert.t;
    if (k < 1 || t < 1 || t > k) return {false, "parameter range"};
    if (cert.distribution.size() != static_cast<std::size_t>(k) + 1)
        return {false, "distribution has wrong length"};
    if (cert.dual.size() != static_cast<std::size_t>(k) + 1)
        return {false, "dual has wrong length"};

    const auto& A = cert.distribution;
    if (A[0] != 1) return {false, "A_0 != 1"};
    for (int i = 0; i <= k; ++i)
        if (A[i] < 0) return {false, "A_" + std::to_string(i) + " < 0"};

    for (int j = 1; j <= k; ++j) {
        Rational moment = 0;
        for (int i = 0; i <= k; ++i) moment += to_rational(krawtchouk(j, i, k)) * A[i];
        if (j <= t && moment != 0)
            return {false, "equality sum_i K_" + std::to_string(j) + "(i) A_i = 0 violated"};
        if (j > t && moment < 0)
            return {false, "inequality sum_i K_" + std::to_string(j) + "(i) A_i >= 0 violated"};
    }

    Rational total = 0;
    for (int i = 0; i <= k; ++i) total += A[i];
    if (total != cert.optimum) return {false, "optimum != sum of distribution"};

    // dual feasibility: y_j >= 0 past the equalities, and every variable's
    // reduced cost stays nonnegative
    const auto& y = cert.dual;
    for (int j = t + 1; j <= k; ++j)
        if (y[j] < 0) return {false, "dual multiplier y_" + std::to_string(j) + " < 0"};
    for (int i = 0; i <= k; ++i) {
        Rational lhs = i == 0 ? y[0] : Rational(0);
        for (int j = 1; j <= k; ++j) lhs += y[j] * to_rational(krawtchouk(j, i, k));
        if (lhs > 1)
            return {false, "dual constraint at A_" + std::to_string(i) + " exceeds cost"};
    }

    // zero duality gap: the dual objective is just y_0
    if (y[0] != cert.optimum) return {false, "duality gap is not zero"};
    return {true, ""};
}

namespace {

void append_rational(std::ostream& os, const Rational& q) {
    os << "{\"num\":\"" << q.get_num().get_str() << "\",\"den\":\"" << q.get_den().get_str()
       << "\"}";
}

}  // namespace

std::string certificate_to_json(const LPCertificate& cert) {
    std::ostringstream os;
    os << "{\"k\":" << cert.k << ",\"t\":" << cert.t << ",\"optimum\":";
    append_rational(os, cert.optimum);
    os << ",\"A\":[";
    for (std::size_t i = 0; i < cert.distribution.size(); ++i) {
        if (i) os << ',';
        append_rational(os, cert.distribution[i]);
    }
    os << "],\"dual\":[";
    for (std::size_t i = 0; i < cert.dual.size(); ++i) {
        if (i) os << ',';
        append_rational(os, cert.dual[i]);
    }
    os << "]}";
    return os.str();
}

}  // namespace oatk
