#include "oatk/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "oatk/character.hpp"
#include "oatk/strength.hpp"

namespace oatk {

namespace {

SymbolArray sorted_rows(int s, std::vector<SymbolRow> rows) {
    std::sort(rows.begin(), rows.end());
    return SymbolArray::from_rows(s, rows);
}

void require_strength(const SymbolArray& a, int t, const char* what) {
    if (!verify_strength(a, t).holds)
        throw VerificationError(std::string(what) + ": output failed strength-" +
                                std::to_string(t) + " verification");
}

void require_simple(const SymbolArray& a, const char* what) {
    if (!multiplicity_census(a).is_simple)
        throw VerificationError(std::string(what) + ": output has repeated rows");
}

}  // namespace

SymbolArray sylvester_oa(int h) {
    if (h < 1 || h > 20) throw std::invalid_argument("sylvester_oa: h must be in 1..20");
    const std::size_t n = std::size_t{1} << h;
    const std::size_t k = n - 1;
    std::vector<SymbolRow> rows;
    rows.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        SymbolRow r(k);
        for (std::size_t y = 1; y <= k; ++y)
            r[y - 1] = static_cast<Symbol>(std::popcount(x & y) & 1);
        rows.push_back(std::move(r));
    }
    SymbolArray a = sorted_rows(2, std::move(rows));
    require_strength(a, std::min<int>(2, static_cast<int>(k)), "sylvester_oa");
    require_simple(a, "sylvester_oa");
    return a;
}

SymbolArray even_weight_oa(int k) {
    if (k < 2 || k > 24) throw std::invalid_argument("even_weight_oa: k must be in 2..24");
    std::vector<Symbol> cells;
    cells.reserve((std::size_t{1} << (k - 1)) * k);
    for (std::size_t x = 0; x < (std::size_t{1} << k); ++x) {
        if (std::popcount(x) & 1) continue;
        for (int c = 0; c < k; ++c)
            cells.push_back(static_cast<Symbol>((x >> (k - 1 - c)) & 1));
    }
    SymbolArray a(static_cast<std::size_t>(k), 2, std::move(cells));
    require_strength(a, k - 1, "even_weight_oa");
    return a;
}

SymbolArray double_strength(const SymbolArray& a, int u) {
    if (a.alphabet() != 2) throw std::invalid_argument("double_strength: binary arrays only");
    if (u < 0 || static_cast<std::size_t>(2 * u) > a.cols())
        throw std::invalid_argument("double_strength: u out of range");
    if (!multiplicity_census(a).is_simple)
        throw VerificationError("double_strength: input must be simple");
    if (!verify_strength(a, 2 * u).holds)
        throw VerificationError("double_strength: input failed strength-" +
                                std::to_string(2 * u) + " verification");
    std::vector<SymbolRow> rows;
    rows.reserve(2 * a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        SymbolRow r0{0};
        SymbolRow r1{1};
        for (Symbol c : a.row(i)) {
            r0.push_back(c);
            r1.push_back(static_cast<Symbol>(1 - c));
        }
        rows.push_back(std::move(r0));
        rows.push_back(std::move(r1));
    }
    SymbolArray out = sorted_rows(2, std::move(rows));
    require_strength(out, 2 * u + 1, "double_strength");
    require_simple(out, "double_strength");
    return out;
}

SymbolArray zero_shorten(const SymbolArray& a, std::size_t col, Symbol symbol) {
    if (a.cols() < 2) throw std::invalid_argument("zero_shorten: k must be >= 2");
    if (col < 1 || col > a.cols()) throw std::invalid_argument("zero_shorten: column out of range");
    if (symbol >= a.alphabet()) throw std::invalid_argument("zero_shorten: symbol out of range");
    const std::size_t c0 = col - 1;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.at(i, c0) == symbol) ++hits;
    if (hits * static_cast<std::size_t>(a.alphabet()) != a.rows())
        throw std::invalid_argument("zero_shorten: column is not balanced");

    std::vector<SymbolRow> rows;
    rows.reserve(hits);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.at(i, c0) != symbol) continue;
        SymbolRow r;
        r.reserve(a.cols() - 1);
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (c != c0) r.push_back(a.at(i, c));
        rows.push_back(std::move(r));
    }
    SymbolArray out = sorted_rows(a.alphabet(), std::move(rows));
    const int t_in = max_strength(a);
    if (t_in > 0) require_strength(out, t_in - 1, "zero_shorten");
    return out;
}

SymbolArray dual_code_oa(const LinearCode& c) {
    if (c.dim > c.n) throw std::invalid_argument("dual_code_oa: need dim <= n");
    const auto basis = nullspace_basis(c);  // throws on rank deficiency
    const int dual_dim = c.n - c.dim;
    std::vector<SymbolRow> rows;
    rows.reserve(std::size_t{1} << dual_dim);
    std::uint64_t word = 0;
    const std::uint64_t total = std::uint64_t{1} << dual_dim;
    for (std::uint64_t msg = 0; msg < total; ++msg) {
        if (msg != 0) word ^= basis[std::countr_zero(msg)];  // Gray-code stepping
        SymbolRow r(c.n);
        for (int col = 0; col < c.n; ++col)
            r[col] = (word & c.column_bit(col)) ? 1 : 0;
        rows.push_back(std::move(r));
    }
    SymbolArray out = sorted_rows(2, std::move(rows));
    require_simple(out, "dual_code_oa");
    if (c.n <= 20) {
        const int d = min_distance(c);
        require_strength(out, d - 1, "dual_code_oa");
        if (static_cast<std::size_t>(d) <= out.cols() && verify_strength(out, d).holds)
            throw VerificationError("dual_code_oa: strength exceeds min_distance - 1");
    }
    return out;
}

LinearCode linear_13_3_7_code() {
    LinearCode code;
    code.n = 13;
    code.dim = 3;
    code.generator = {
        0b1111111100000,
        0b1111000011110,
        0b1100110011001,
    };
    return code;
}

SymbolArray nordstrom_robinson() {
    // Octacode: the quaternary cyclic code of length 7 generated by
    // g(x) = 3 + x + 2x^2 + x^3 (the Hensel lift of x^3 + x + 1 to Z4),
    // extended by an overall negative-sum digit. Its Gray image
    // (0->00, 1->01, 2->11, 3->10) is the Nordstrom-Robinson code.
    constexpr std::array<int, 7> g = {3, 1, 2, 1, 0, 0, 0};
    constexpr std::array<std::array<Symbol, 2>, 4> gray = {{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};

    std::vector<SymbolRow> rows;
    rows.reserve(256);
    std::array<int, 4> msg{};
    for (int m0 = 0; m0 < 4; ++m0)
        for (int m1 = 0; m1 < 4; ++m1)
            for (int m2 = 0; m2 < 4; ++m2)
                for (int m3 = 0; m3 < 4; ++m3) {
                    msg = {m0, m1, m2, m3};
                    std::array<int, 8> word{};
                    for (int i = 0; i < 4; ++i) {
                        if (msg[i] == 0) continue;
                        for (int j = 0; j < 7; ++j)
                            word[(i + j) % 7] = (word[(i + j) % 7] + msg[i] * g[j]) % 4;
                    }
                    int sum = 0;
                    for (int j = 0; j < 7; ++j) sum += word[j];
                    word[7] = (4 - sum % 4) % 4;

                    SymbolRow bits;
                    bits.reserve(16);
                    for (int j = 0; j < 8; ++j) {
                        bits.push_back(gray[word[j]][0]);
                        bits.push_back(gray[word[j]][1]);
                    }
                    rows.push_back(std::move(bits));
                }

    SymbolArray out = sorted_rows(2, std::move(rows));
    require_simple(out, "nordstrom_robinson");
    require_strength(out, 5, "nordstrom_robinson");
    if (verify_strength(out, 6).holds)
        throw VerificationError("nordstrom_robinson: strength exceeds 5");

    // pairwise minimum distance must be 6 (the code is nonlinear, so check
    // pairs, not just weights)
    std::vector<std::uint32_t> packed;
    packed.reserve(out.rows());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        std::uint32_t w = 0;
        for (Symbol b : out.row(i)) w = (w << 1) | b;
        packed.push_back(w);
    }
    int mind = 16;
    for (std::size_t i = 0; i < packed.size(); ++i)
        for (std::size_t j = i + 1; j < packed.size(); ++j)
            mind = std::min(mind, std::popcount(packed[i] ^ packed[j]));
    if (mind != 6)
        throw VerificationError("nordstrom_robinson: minimum distance is " +
                                std::to_string(mind) + ", expected 6");
    return out;
}

SymbolArray kerdock(int m) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("kerdock: m must be even and >= 4");
    if (m == 4) return nordstrom_robinson();
    throw std::invalid_argument("kerdock: only m = 4 is implemented");
}

}  // namespace oatk
