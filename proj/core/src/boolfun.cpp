#include "oatk/boolfun.hpp"

#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oatk {

BooleanFunction::BooleanFunction(int k, std::vector<std::uint8_t> table)
    : k_(k), table_(std::move(table)) {
    if (k_ < 1 || k_ > 24) throw std::invalid_argument("BooleanFunction: k must be in 1..24");
    if (table_.size() != (std::size_t{1} << k_))
        throw std::invalid_argument("BooleanFunction: table length != 2^k");
    for (auto& b : table_) {
        if (b > 1) throw std::invalid_argument("BooleanFunction: table entries must be 0/1");
    }
    weight_ = std::accumulate(table_.begin(), table_.end(), std::size_t{0});
}

long long fourier_coefficient(const BooleanFunction& f, const SymbolRow& a) {
    if (a.size() != static_cast<std::size_t>(f.vars()))
        throw std::invalid_argument("fourier_coefficient: |a| != k");
    const int k = f.vars();
    std::size_t mask = 0;
    for (int c = 0; c < k; ++c) {
        if (a[c] > 1) throw std::invalid_argument("fourier_coefficient: a must be a bit tuple");
        if (a[c]) mask |= std::size_t{1} << (k - 1 - c);
    }
    long long sum = 0;
    for (std::size_t x = 0; x < f.table_size(); ++x) {
        if (!f.value(x)) continue;
        sum += (std::popcount(x & mask) & 1) ? -1 : 1;
    }
    return sum;
}

std::vector<long long> fourier_spectrum(const BooleanFunction& f) {
    std::vector<long long> spec(f.truth_table().begin(), f.truth_table().end());
    for (std::size_t half = 1; half < spec.size(); half <<= 1) {
        for (std::size_t block = 0; block < spec.size(); block += half << 1) {
            for (std::size_t i = block; i < block + half; ++i) {
                long long lo = spec[i], hi = spec[i + half];
                spec[i] = lo + hi;
                spec[i + half] = lo - hi;
            }
        }
    }
    return spec;
}

int ci_order(const BooleanFunction& f) {
    if (f.weight() == 0) throw std::invalid_argument("ci_order: constant-0 function has no order");
    const auto spec = fourier_spectrum(f);
    int min_weight_nonzero = f.vars() + 1;
    for (std::size_t m = 1; m < spec.size(); ++m) {
        if (spec[m] != 0) {
            int w = std::popcount(m);
            if (w < min_weight_nonzero) min_weight_nonzero = w;
        }
    }
    return min_weight_nonzero - 1;  // k when the whole nonzero spectrum vanishes
}

SymbolArray support_to_oa(const BooleanFunction& f) {
    if (f.weight() == 0) throw std::invalid_argument("support_to_oa: empty support");
    const int k = f.vars();
    std::vector<Symbol> cells;
    cells.reserve(f.weight() * k);
    for (std::size_t x = 0; x < f.table_size(); ++x) {
        if (!f.value(x)) continue;
        for (int c = 0; c < k; ++c)
            cells.push_back(static_cast<Symbol>((x >> (k - 1 - c)) & 1));
    }
    return SymbolArray(static_cast<std::size_t>(k), 2, std::move(cells));
}

BooleanFunction oa_to_support(const SymbolArray& a) {
    if (a.alphabet() != 2) throw std::invalid_argument("oa_to_support: binary arrays only");
    if (a.cols() > 24) throw std::invalid_argument("oa_to_support: k must be <= 24");
    const int k = static_cast<int>(a.cols());
    std::vector<std::uint8_t> table(std::size_t{1} << k, 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row(i);
        std::size_t x = 0;
        for (int c = 0; c < k; ++c) x = (x << 1) | row[c];
        if (table[x]) throw std::invalid_argument("oa_to_support: array is not simple (repeated row)");
        table[x] = 1;
    }
    return BooleanFunction(k, std::move(table));
}

BooleanFunction parse_truth_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    int k = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hdr(line);
        if (!(hdr >> k)) throw ParseError("expected variable count k", lineno);
        break;
    }
    if (k < 1 || k > 24) throw ParseError("k out of range 1..24", lineno == 0 ? 1 : lineno);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != (std::size_t{1} << k))
            throw ParseError("truth table must have exactly 2^k characters", lineno);
        std::vector<std::uint8_t> table(line.size());
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] != '0' && line[i] != '1')
                throw ParseError("truth table characters must be 0/1", lineno);
            table[i] = static_cast<std::uint8_t>(line[i] - '0');
        }
        return BooleanFunction(k, std::move(table));
    }
    throw ParseError("missing truth table line", lineno == 0 ? 1 : lineno);
}

std::string serialize_truth_table(const BooleanFunction& f) {
    std::string out = std::to_string(f.vars());
    out += '\n';
    for (std::uint8_t b : f.truth_table()) out += static_cast<char>('0' + b);
    out += '\n';
    return out;
}

BooleanFunction read_truth_table_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_truth_table(ss.str());
}

}  // namespace oatk
