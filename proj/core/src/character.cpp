#include "oatk/character.hpp"

#include <algorithm>
#include <stdexcept>

namespace oatk {

namespace {

// quotient of polynomial division num / den over Z, den monic; remainder must
// come out zero for the cyclotomic recursion
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        long long c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("cyclotomic division not exact");
    return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int s) {
    if (s < 1) throw std::invalid_argument("cyclotomic_polynomial: s must be >= 1");
    // Phi_s = (x^s - 1) / prod_{d | s, d < s} Phi_d
    std::vector<long long> num(s + 1, 0);
    num[0] = -1;
    num[s] = 1;
    for (int d = 1; d < s; ++d) {
        if (s % d != 0) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

bool root_of_unity_sum_equals(const std::vector<long long>& counts, long long target, int s) {
    if (static_cast<int>(counts.size()) != s)
        throw std::invalid_argument("root_of_unity_sum_equals: counts.size() != s");
    std::vector<long long> poly(counts);
    poly[0] -= target;
    const std::vector<long long> phi = cyclotomic_polynomial(s);
    const std::size_t deg = phi.size() - 1;
    // reduce modulo the monic phi, then the value is zero iff the remainder is
    for (std::size_t i = poly.size(); i-- > deg;) {
        long long c = poly[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < phi.size(); ++j) poly[i - deg + j] -= c * phi[j];
    }
    for (std::size_t i = 0; i < deg; ++i)
        if (poly[i] != 0) return false;
    return true;
}

std::vector<SymbolRow> tuples_of_weight(std::size_t k, int s, int w) {
    if (w < 0 || static_cast<std::size_t>(w) > k)
        throw std::invalid_argument("tuples_of_weight: w out of range");
    std::vector<SymbolRow> out;
    SymbolRow tuple(k, 0);
    std::vector<std::size_t> support(w);
    // enumerate supports as combinations, nonzero values by odometer; sorting
    // afterwards gives plain lexicographic tuple order
    auto emit_values = [&](auto&& self, int pos) -> void {
        if (pos == w) {
            out.push_back(tuple);
            return;
        }
        for (int v = 1; v < s; ++v) {
            tuple[support[pos]] = static_cast<Symbol>(v);
            self(self, pos + 1);
        }
        tuple[support[pos]] = 0;
    };
    auto choose_support = [&](auto&& self, std::size_t start, int pos) -> void {
        if (pos == w) {
            emit_values(emit_values, 0);
            return;
        }
        for (std::size_t c = start; c + (w - pos) <= k; ++c) {
            support[pos] = c;
            self(self, c + 1, pos + 1);
        }
    };
    if (w == 0) {
        out.push_back(tuple);
    } else {
        choose_support(choose_support, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// counts[r] = #{ rows i : a_i . v == r (mod s) }
std::vector<long long> dot_residue_counts(const SymbolArray& a, const SymbolRow& v) {
    const int s = a.alphabet();
    std::vector<long long> counts(s, 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row(i);
        unsigned long long dot = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) dot += static_cast<unsigned>(row[c]) * v[c];
        ++counts[dot % s];
    }
    return counts;
}

}  // namespace

CharacterSumResult character_sum_check(const SymbolArray& a, int t) {
    if (t < 0 || static_cast<std::size_t>(t) > a.cols())
        throw std::invalid_argument("character_sum_check: t out of range 0..k");
    const int s = a.alphabet();
    for (int w = 1; w <= t; ++w) {
        for (const SymbolRow& v : tuples_of_weight(a.cols(), s, w)) {
            if (!root_of_unity_sum_equals(dot_residue_counts(a, v), 0, s))
                return {false, v};
        }
    }
    return {true, std::nullopt};
}

CharacterMatrix::CharacterMatrix(std::size_t n, int s, int u, std::vector<SymbolRow> column_index,
                                 std::vector<Symbol> exponents)
    : n_(n), s_(s), u_(u), columns_(std::move(column_index)), exponents_(std::move(exponents)) {
    if (exponents_.size() != n_ * columns_.size())
        throw std::invalid_argument("CharacterMatrix: size mismatch");
}

int CharacterMatrix::sign_entry(std::size_t i, std::size_t c) const {
    if (s_ != 2) throw std::logic_error("sign_entry: binary matrices only");
    return exponent(i, c) == 0 ? 1 : -1;
}

CharacterMatrix build_character_matrix(const SymbolArray& a, int u) {
    if (u < 0 || static_cast<std::size_t>(u) > a.cols())
        throw std::invalid_argument("build_character_matrix: u out of range 0..k");
    const int s = a.alphabet();
    std::vector<SymbolRow> columns;
    for (int w = 0; w <= u; ++w) {
        auto block = tuples_of_weight(a.cols(), s, w);
        columns.insert(columns.end(), block.begin(), block.end());
    }
    std::vector<Symbol> exponents(a.rows() * columns.size());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row(i);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const SymbolRow& v = columns[c];
            unsigned long long dot = 0;
            for (std::size_t j = 0; j < a.cols(); ++j)
                dot += static_cast<unsigned>(row[j]) * v[j];
            exponents[i * columns.size() + c] = static_cast<Symbol>(dot % s);
        }
    }
    return CharacterMatrix(a.rows(), s, u, std::move(columns), std::move(exponents));
}

bool gram_is_scaled_identity(const CharacterMatrix& h) {
    const int s = h.alphabet();
    const std::size_t m = h.cols();
    const std::size_t n = h.rows();
    std::vector<long long> counts(s);
    for (std::size_t c1 = 0; c1 < m; ++c1) {
        for (std::size_t c2 = c1; c2 < m; ++c2) {
            std::fill(counts.begin(), counts.end(), 0);
            // (H*H)_{c1,c2} = sum_i conj(zeta^{e1}) zeta^{e2} = sum_i zeta^{e2-e1}
            for (std::size_t i = 0; i < n; ++i) {
                int d = (h.exponent(i, c2) - h.exponent(i, c1) + s) % s;
                ++counts[d];
            }
            long long expect = (c1 == c2) ? static_cast<long long>(n) : 0;
            if (!root_of_unity_sum_equals(counts, expect, s)) return false;
        }
    }
    return true;
}

}  // namespace oatk
