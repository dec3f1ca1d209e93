#pragma once

#include "oatk/linear_code.hpp"
#include "oatk/symbol_array.hpp"

namespace oatk {

// Every construction here re-verifies its own output through the counting /
// character machinery before returning, and throws VerificationError instead
// of handing back an unchecked array. Row order is lexicographic throughout.

/// OA(2^h, 2^h - 1, 2, 2): rows indexed by x in {0,1}^h, columns by nonzero y,
/// entry x.y mod 2. Simple; strength exactly 2 for h >= 2 (capped at k for h=1).
SymbolArray sylvester_oa(int h);

/// The 2^{k-1} even-weight vectors of length k; strength exactly k-1.
SymbolArray even_weight_oa(int k);

/// [0|A ; 1|A-complement] for a simple binary A of verified strength 2u:
/// a simple OA on k+1 columns of strength 2u+1, post-verified.
SymbolArray double_strength(const SymbolArray& a, int u);

/// Keeps the rows with `symbol` in column `col` (1-based) and deletes that
/// column. The column must contain every symbol equally often. Strength drops
/// by at most one.
SymbolArray zero_shorten(const SymbolArray& a, std::size_t col = 1, Symbol symbol = 0);

/// All 2^{n-dim} words of the dual code as rows; strength is exactly
/// min_distance(c) - 1, post-verified for n <= 20.
SymbolArray dual_code_oa(const LinearCode& c);

/// The binary [13,3,7] code whose dual is a linear OA(1024,13,2,6).
LinearCode linear_13_3_7_code();

/// The (16,256) Nordstrom-Robinson code as a simple OA(256,16,2,5): Gray image
/// of the extended quaternary cyclic code of length 8 (octacode). Strength
/// exactly 5, minimum distance 6, all post-verified.
SymbolArray nordstrom_robinson();

/// Kerdock code of length 2^m as a simple OA(4^m, 2^m, 2, 5). Only m=4 (the
/// Nordstrom-Robinson code) is built; larger even m are not implemented.
SymbolArray kerdock(int m);

}  // namespace oatk
