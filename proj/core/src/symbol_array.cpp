#include "oatk/symbol_array.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace oatk {

SymbolArray::SymbolArray(std::size_t k, int s, std::vector<Symbol> cells)
    : k_(k), s_(s), n_(k == 0 ? 0 : cells.size() / k), cells_(std::move(cells)) {
    if (k_ < 1) throw std::invalid_argument("SymbolArray: k must be >= 1");
    if (s_ < 2) throw std::invalid_argument("SymbolArray: s must be >= 2");
    if (cells_.size() % k_ != 0)
        throw std::invalid_argument("SymbolArray: cell count not a multiple of k");
    if (n_ < 1) throw std::invalid_argument("SymbolArray: N must be >= 1");
    for (Symbol c : cells_)
        if (c >= s_) throw std::invalid_argument("SymbolArray: symbol out of range");
}

SymbolArray SymbolArray::from_rows(int s, const std::vector<SymbolRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("SymbolArray: no rows");
    std::size_t k = rows.front().size();
    std::vector<Symbol> cells;
    cells.reserve(rows.size() * k);
    for (const auto& r : rows) {
        if (r.size() != k) throw std::invalid_argument("SymbolArray: ragged rows");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return SymbolArray(k, s, std::move(cells));
}

SymbolRow SymbolArray::row_copy(std::size_t i) const {
    auto r = row(i);
    return SymbolRow(r.begin(), r.end());
}

SymbolArray parse_oa(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;

    long long n = -1, k = -1, s = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hdr(line);
        if (!(hdr >> n >> k >> s))
            throw ParseError("malformed header, expected \"N k s\"", lineno);
        std::string rest;
        if (hdr >> rest) throw ParseError("trailing tokens after header", lineno);
        break;
    }
    if (n < 0) throw ParseError("missing header", lineno == 0 ? 1 : lineno);
    if (n < 1 || k < 1) throw ParseError("N and k must be positive", lineno);
    if (s < 2 || s > 10) throw ParseError("s must be in 2..10 for the text format", lineno);

    std::vector<Symbol> cells;
    cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    long long rows_read = 0;
    while (rows_read < n && std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        // tolerate trailing CR from CRLF files
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<long long>(line.size()) != k)
            throw ParseError("row has " + std::to_string(line.size()) + " symbols, expected k=" +
                                 std::to_string(k),
                             lineno);
        for (char c : line) {
            if (c < '0' || c > '9') throw ParseError("non-digit symbol in row", lineno);
            int v = c - '0';
            if (v >= s)
                throw ParseError("symbol " + std::to_string(v) + " >= s=" + std::to_string(s),
                                 lineno);
            cells.push_back(static_cast<Symbol>(v));
        }
        ++rows_read;
    }
    if (rows_read != n)
        throw ParseError("expected N=" + std::to_string(n) + " rows, found " +
                             std::to_string(rows_read),
                         lineno);
    return SymbolArray(static_cast<std::size_t>(k), static_cast<int>(s), std::move(cells));
}

std::string serialize_oa(const SymbolArray& a) {
    std::string out;
    out.reserve(a.rows() * (a.cols() + 1) + 32);
    out += std::to_string(a.rows());
    out += ' ';
    out += std::to_string(a.cols());
    out += ' ';
    out += std::to_string(a.alphabet());
    out += '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (Symbol c : a.row(i)) out += static_cast<char>('0' + c);
        out += '\n';
    }
    return out;
}

SymbolArray read_oa_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_oa(ss.str());
}

void write_oa_file(const SymbolArray& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << serialize_oa(a);
}

SymbolArray delete_column(const SymbolArray& a, std::size_t j) {
    if (a.cols() < 2) throw std::invalid_argument("delete_column: k must be >= 2");
    if (j < 1 || j > a.cols()) throw std::invalid_argument("delete_column: column out of range");
    std::size_t drop = j - 1;
    std::vector<Symbol> cells;
    cells.reserve(a.rows() * (a.cols() - 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto r = a.row(i);
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (c != drop) cells.push_back(r[c]);
    }
    return SymbolArray(a.cols() - 1, a.alphabet(), std::move(cells));
}

SymbolArray juxtapose(const SymbolArray& a, const SymbolArray& b) {
    if (a.cols() != b.cols() || a.alphabet() != b.alphabet())
        throw std::invalid_argument("juxtapose: dimension or alphabet mismatch");
    std::vector<Symbol> cells = a.cells();
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return SymbolArray(a.cols(), a.alphabet(), std::move(cells));
}

SymbolArray translate(const SymbolArray& a, const SymbolRow& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("translate: vector length != k");
    for (Symbol c : v)
        if (c >= a.alphabet()) throw std::invalid_argument("translate: symbol out of range");
    std::vector<Symbol> cells(a.cells());
    int s = a.alphabet();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            Symbol& x = cells[i * a.cols() + c];
            x = static_cast<Symbol>((x + v[c]) % s);
        }
    return SymbolArray(a.cols(), s, std::move(cells));
}

MultiplicityCensus multiplicity_census(const SymbolArray& a) {
    MultiplicityCensus census;
    for (std::size_t i = 0; i < a.rows(); ++i) ++census.counts[a.row_copy(i)];
    census.distinct_count = census.counts.size();
    for (const auto& [row, cnt] : census.counts)
        census.max_multiplicity = std::max(census.max_multiplicity, cnt);
    census.is_simple = census.max_multiplicity == 1;
    return census;
}

std::vector<std::size_t> weight_enumerator(const SymbolArray& a) {
    if (a.alphabet() != 2)
        throw std::invalid_argument("weight_enumerator: binary arrays only");
    std::vector<std::size_t> coeff(a.cols() + 1, 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::size_t w = 0;
        for (Symbol c : a.row(i)) w += c;
        ++coeff[w];
    }
    return coeff;
}

}  // namespace oatk
