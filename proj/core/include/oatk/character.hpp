#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oatk/symbol_array.hpp"

namespace oatk {

/// Coefficients (constant term first, monic) of the s-th cyclotomic
/// polynomial. An integer combination of s-th roots of unity is zero exactly
/// when the corresponding polynomial reduces to zero modulo this one, which
/// is how every "character sum vanishes" question below is decided -- no
/// floating point anywhere.
std::vector<long long> cyclotomic_polynomial(int s);

/// Decides  sum_r counts[r] * zeta^r == target  exactly, zeta a fixed
/// primitive s-th root of unity, counts.size() == s.
bool root_of_unity_sum_equals(const std::vector<long long>& counts, long long target, int s);

/// All tuples over {0..s-1}^k of Hamming weight exactly w, sorted
/// lexicographically. There are C(k,w)*(s-1)^w of them.
std::vector<SymbolRow> tuples_of_weight(std::size_t k, int s, int w);

struct CharacterSumResult {
    bool holds = false;
    std::optional<SymbolRow> failing_v;  // first failure, weight ascending then lex
};

/// Character-sum verifier: the array has strength t iff
/// sum_i zeta^(a_i . v) = 0 for every v with 1 <= wt(v) <= t.
/// Agrees with verify_strength on every input.
CharacterSumResult character_sum_check(const SymbolArray& a, int t);

/// H = [H_0 H_1 ... H_u], entry (i,v) = zeta^(a_i . v), columns indexed by the
/// tuples of weight <= u in weight-ascending, then lexicographic, order.
/// Entries are stored as exponents of zeta; for s=2 they are just signs.
class CharacterMatrix {
public:
    CharacterMatrix(std::size_t n, int s, int u, std::vector<SymbolRow> column_index,
                    std::vector<Symbol> exponents);

    std::size_t rows() const { return n_; }            // N
    std::size_t cols() const { return columns_.size(); }  // M
    int alphabet() const { return s_; }
    int half_strength() const { return u_; }

    const std::vector<SymbolRow>& column_index() const { return columns_; }
    Symbol exponent(std::size_t i, std::size_t c) const { return exponents_[i * cols() + c]; }
    /// +1 or -1; binary matrices only.
    int sign_entry(std::size_t i, std::size_t c) const;

private:
    std::size_t n_;
    int s_;
    int u_;
    std::vector<SymbolRow> columns_;
    std::vector<Symbol> exponents_;  // row-major N x M
};

CharacterMatrix build_character_matrix(const SymbolArray& a, int u);

/// True iff conj-transpose(H) * H == N * I, decided exactly.
bool gram_is_scaled_identity(const CharacterMatrix& h);

}  // namespace oatk
