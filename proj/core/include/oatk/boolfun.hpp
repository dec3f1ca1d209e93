#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oatk/symbol_array.hpp"

namespace oatk {

/// Truth table of f: {0,1}^k -> {0,1}, indexed by x in lexicographic order
/// (x_1 is the most significant bit of the index).
class BooleanFunction {
public:
    BooleanFunction(int k, std::vector<std::uint8_t> table);

    int vars() const { return k_; }
    std::size_t table_size() const { return table_.size(); }
    bool value(std::size_t x) const { return table_[x] != 0; }
    std::size_t weight() const { return weight_; }
    const std::vector<std::uint8_t>& truth_table() const { return table_; }

    bool operator==(const BooleanFunction&) const = default;

private:
    int k_;
    std::vector<std::uint8_t> table_;
    std::size_t weight_;
};

/// fhat(a) = sum_x f(x) (-1)^(a.x) with f taken 0/1-valued. Exact.
long long fourier_coefficient(const BooleanFunction& f, const SymbolRow& a);

/// All 2^k coefficients by an in-place butterfly; index m holds fhat at the
/// tuple whose bits are the bits of m. Exact in 64-bit for k <= 24.
std::vector<long long> fourier_spectrum(const BooleanFunction& f);

/// Largest t with fhat(a) = 0 for all 1 <= wt(a) <= t; k when every nonzero
/// coefficient vanishes (f constant 1). The constant-0 function is rejected.
int ci_order(const BooleanFunction& f);

/// Rows are the support {x : f(x)=1} in ascending (lexicographic) order.
SymbolArray support_to_oa(const BooleanFunction& f);

/// Inverse bridge; requires a simple binary array.
BooleanFunction oa_to_support(const SymbolArray& a);

/// File format: line "k", then one line with 2^k characters '0'/'1'.
BooleanFunction parse_truth_table(std::string_view text);
std::string serialize_truth_table(const BooleanFunction& f);
BooleanFunction read_truth_table_file(const std::string& path);

}  // namespace oatk
