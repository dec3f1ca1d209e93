#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oatk/errors.hpp"

namespace oatk {

/// Binary linear code given by a full-rank generator matrix, n <= 64.
/// Row bitmasks put column c at bit (n-1-c) so printed digits read naturally.
struct LinearCode {
    int n = 0;
    int dim = 0;
    std::vector<std::uint64_t> generator;  // dim rows

    std::uint64_t column_bit(int c) const { return std::uint64_t{1} << (n - 1 - c); }
};

/// File format: first non-comment line "dim n", then dim lines of n binary
/// digits. The rows must be linearly independent.
LinearCode parse_generator(std::string_view text);
LinearCode read_generator_file(const std::string& path);
std::string serialize_generator(const LinearCode& c);

int gf2_rank(std::vector<std::uint64_t> rows);

/// Basis of { x : G x^T = 0 }, size n - dim.
std::vector<std::uint64_t> nullspace_basis(const LinearCode& c);

/// Minimum weight of a nonzero codeword (== minimum distance); enumerates all
/// 2^dim codewords, so dim should stay desk-scale.
int min_distance(const LinearCode& c);

}  // namespace oatk
