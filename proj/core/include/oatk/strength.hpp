#pragma once

#include <optional>
#include <vector>

#include "oatk/rational.hpp"
#include "oatk/symbol_array.hpp"

namespace oatk {

/// A failed count, replayable: over `columns` the tuple occurs `observed`
/// times instead of `expected` = lambda (non-integral lambda fails on every
/// tuple, so the first one serves). Columns are 0-based and ascending.
struct StrengthWitness {
    std::vector<std::size_t> columns;
    SymbolRow tuple;
    std::size_t observed = 0;
    Rational expected;
};

struct StrengthReport {
    int requested_t = 0;
    bool holds = false;
    Rational lambda;                          // N / s^t, exact
    std::optional<StrengthWitness> witness;   // present iff !holds (and t >= 1)
    std::optional<int> max_strength;          // filled only by callers that compute it
};

/// Counting verifier: holds iff every t-column projection contains every
/// t-tuple exactly N/s^t times. Column subsets are scanned in lexicographic
/// order and tuples in ascending value, so the witness is the first failure.
StrengthReport verify_strength(const SymbolArray& a, int t);

/// Largest t in 0..k for which verify_strength holds. Strength is monotone,
/// so an ascending scan stops at the first failure.
int max_strength(const SymbolArray& a);

}  // namespace oatk
