#include "oatk/linear_code.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oatk {

LinearCode parse_generator(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    int dim = -1, n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hdr(line);
        if (!(hdr >> dim >> n)) throw ParseError("malformed header, expected \"dim n\"", lineno);
        break;
    }
    if (dim < 1 || n < 1 || n > 64 || dim > n)
        throw ParseError("need 1 <= dim <= n <= 64", lineno == 0 ? 1 : lineno);

    LinearCode code;
    code.n = n;
    code.dim = dim;
    while (static_cast<int>(code.generator.size()) < dim && std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<int>(line.size()) != n)
            throw ParseError("generator row must have n digits", lineno);
        std::uint64_t row = 0;
        for (char c : line) {
            if (c != '0' && c != '1') throw ParseError("generator entries must be 0/1", lineno);
            row = (row << 1) | static_cast<std::uint64_t>(c - '0');
        }
        code.generator.push_back(row);
    }
    if (static_cast<int>(code.generator.size()) != dim)
        throw ParseError("expected " + std::to_string(dim) + " generator rows", lineno);
    if (gf2_rank(code.generator) != dim)
        throw ParseError("generator rows are linearly dependent", lineno);
    return code;
}

LinearCode read_generator_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_generator(ss.str());
}

std::string serialize_generator(const LinearCode& c) {
    std::string out = std::to_string(c.dim) + " " + std::to_string(c.n) + "\n";
    for (std::uint64_t row : c.generator) {
        for (int col = 0; col < c.n; ++col)
            out += (row & c.column_bit(col)) ? '1' : '0';
        out += '\n';
    }
    return out;
}

int gf2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t pivot = rows[i];
        if (pivot == 0) continue;
        std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(pivot));
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & high) rows[j] ^= pivot;
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> nullspace_basis(const LinearCode& c) {
    // row-reduce G, record pivot columns, then read one basis vector per free
    // column in the standard way
    std::vector<std::uint64_t> rows = c.generator;
    std::vector<int> pivot_col(rows.size(), -1);
    int r = 0;
    for (int col = 0; col < c.n && r < static_cast<int>(rows.size()); ++col) {
        const std::uint64_t bit = c.column_bit(col);
        int found = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i] & bit) {
                found = i;
                break;
            }
        if (found < 0) continue;
        std::swap(rows[r], rows[found]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        pivot_col[r] = col;
        ++r;
    }
    if (r != c.dim) throw VerificationError("nullspace_basis: generator is rank deficient");

    std::vector<bool> is_pivot(c.n, false);
    for (int i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;

    std::vector<std::uint64_t> basis;
    for (int free = 0; free < c.n; ++free) {
        if (is_pivot[free]) continue;
        std::uint64_t v = c.column_bit(free);
        for (int i = 0; i < r; ++i)
            if (rows[i] & c.column_bit(free)) v |= c.column_bit(pivot_col[i]);
        basis.push_back(v);
    }
    return basis;
}

int min_distance(const LinearCode& c) {
    if (c.dim > 28) throw std::invalid_argument("min_distance: dim too large to enumerate");
    int best = c.n + 1;
    const std::uint64_t total = std::uint64_t{1} << c.dim;
    std::uint64_t word = 0;
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        // Gray-code stepping: one basis row toggles per iteration
        int flip = std::countr_zero(msg);
        word ^= c.generator[flip];
        int w = std::popcount(word);
        if (w > 0 && w < best) best = w;
    }
    return best;
}

}  // namespace oatk
