#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oatk/errors.hpp"

namespace oatk {

using Symbol = std::uint8_t;
using SymbolRow = std::vector<Symbol>;

/// An N x k array over the alphabet {0..s-1}. Semantically the rows form a
/// multiset; representationally their order is preserved, so parse/serialize
/// round-trips are exact. Immutable after construction.
class SymbolArray {
public:
    /// cells is row-major with n*k entries, n derived. Every entry must be < s.
    SymbolArray(std::size_t k, int s, std::vector<Symbol> cells);

    static SymbolArray from_rows(int s, const std::vector<SymbolRow>& rows);

    std::size_t rows() const { return n_; }   // N
    std::size_t cols() const { return k_; }   // k
    int alphabet() const { return s_; }       // s

    std::span<const Symbol> row(std::size_t i) const {
        return {cells_.data() + i * k_, k_};
    }
    Symbol at(std::size_t i, std::size_t j) const { return cells_[i * k_ + j]; }
    SymbolRow row_copy(std::size_t i) const;
    const std::vector<Symbol>& cells() const { return cells_; }

    bool operator==(const SymbolArray&) const = default;

private:
    std::size_t k_;
    int s_;
    std::size_t n_;
    std::vector<Symbol> cells_;
};

/// Text format: first non-comment line "N k s", then N lines of k contiguous
/// digits (s <= 10). Lines starting with '#' are comments. Errors carry line
/// numbers.
SymbolArray parse_oa(std::string_view text);

/// Emits exactly the text format: header, rows in stored order, trailing
/// newline, no comments.
std::string serialize_oa(const SymbolArray& a);

SymbolArray read_oa_file(const std::string& path);
void write_oa_file(const SymbolArray& a, const std::string& path);

/// Removes column j (1-based, k >= 2). Strength t is preserved or better.
SymbolArray delete_column(const SymbolArray& a, std::size_t j);

/// Stacks b below a (same k and s). Multiplicities add.
SymbolArray juxtapose(const SymbolArray& a, const SymbolArray& b);

/// Adds v to every row modulo s. A bijection on tuples, so strength and the
/// multiplicity profile are preserved exactly.
SymbolArray translate(const SymbolArray& a, const SymbolRow& v);

struct MultiplicityCensus {
    std::map<SymbolRow, std::size_t> counts;  // distinct row -> multiplicity
    std::size_t max_multiplicity = 0;         // rho_max
    std::size_t distinct_count = 0;
    bool is_simple = false;                   // rho_max == 1
};

MultiplicityCensus multiplicity_census(const SymbolArray& a);

/// c_w = number of rows of Hamming weight w, w = 0..k. Binary arrays only.
std::vector<std::size_t> weight_enumerator(const SymbolArray& a);

}  // namespace oatk
