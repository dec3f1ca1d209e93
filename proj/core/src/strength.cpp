#include "oatk/strength.hpp"

#include <stdexcept>

namespace oatk {

namespace {

// s^t if it fits in size_t and is <= limit_hint guard, else 0 (meaning "too big
// to divide N anyway" -- callers only need s^t up to N).
std::size_t pow_or_zero(int s, int t, std::size_t limit) {
    std::size_t p = 1;
    for (int i = 0; i < t; ++i) {
        if (p > limit / static_cast<std::size_t>(s)) return 0;
        p *= static_cast<std::size_t>(s);
    }
    return p;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t k) {
    std::size_t t = idx.size();
    for (std::size_t i = t; i-- > 0;) {
        if (idx[i] < k - (t - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

StrengthReport verify_strength(const SymbolArray& a, int t) {
    if (t < 0 || static_cast<std::size_t>(t) > a.cols())
        throw std::invalid_argument("verify_strength: t out of range 0..k");

    StrengthReport rep;
    rep.requested_t = t;
    const std::size_t n = a.rows();
    const int s = a.alphabet();

    if (t == 0) {
        rep.holds = true;
        rep.lambda = Rational(static_cast<unsigned long>(n));
        return rep;
    }

    const std::size_t cells = pow_or_zero(s, t, n);
    rep.lambda = make_rational(BigInt(static_cast<unsigned long>(n)), pow_int(s, t));
    const bool divisible = cells != 0 && n % cells == 0;
    if (!divisible) {
        // lambda non-integral: every tuple count mismatches, so the first
        // tuple of the first subset is already a replayable witness
        std::vector<std::size_t> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = static_cast<std::size_t>(i);
        std::size_t observed = 0;
        for (std::size_t i = 0; i < n; ++i) {
            auto row = a.row(i);
            bool zero = true;
            for (std::size_t c : idx) zero = zero && row[c] == 0;
            if (zero) ++observed;
        }
        rep.holds = false;
        rep.witness = StrengthWitness{idx, SymbolRow(t, 0), observed, rep.lambda};
        return rep;
    }
    const std::size_t lambda = n / cells;

    std::vector<std::size_t> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = static_cast<std::size_t>(i);
    std::vector<std::size_t> counts(cells);

    do {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            auto row = a.row(i);
            std::size_t cell = 0;
            for (std::size_t c : idx) cell = cell * s + row[c];
            ++counts[cell];
        }
        for (std::size_t cell = 0; cell < cells; ++cell) {
            if (counts[cell] != lambda) {
                StrengthWitness w;
                w.columns = idx;
                w.tuple.resize(t);
                std::size_t v = cell;
                for (int p = t - 1; p >= 0; --p) {
                    w.tuple[p] = static_cast<Symbol>(v % s);
                    v /= s;
                }
                w.observed = counts[cell];
                w.expected = rep.lambda;
                rep.holds = false;
                rep.witness = std::move(w);
                return rep;
            }
        }
    } while (next_combination(idx, a.cols()));

    rep.holds = true;
    return rep;
}

int max_strength(const SymbolArray& a) {
    int t = 0;
    while (static_cast<std::size_t>(t) < a.cols() && verify_strength(a, t + 1).holds) ++t;
    return t;
}

}  // namespace oatk
