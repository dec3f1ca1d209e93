#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oatk/symbol_array.hpp"

namespace oatk {

struct SearchLimits {
    unsigned long long node_budget = 1'000'000'000ULL;  // row placements tried
    unsigned workers = 0;                               // 0 = hardware concurrency
    // invoked roughly once per progress_interval nodes with the running total;
    // must be thread-safe, since workers call it directly
    unsigned long long progress_interval = 0;  // 0 disables reporting
    std::function<void(unsigned long long)> progress;
};

struct SearchOutcome {
    std::optional<SymbolArray> found;  // verified OA(N,k,s,t), simple if requested
    bool exhausted = false;            // no such array exists
    unsigned long long nodes_visited = 0;
    std::vector<std::string> symmetry_assumptions;
    std::optional<std::string> infeasibility_reason;  // set when exhausted without search

    // convenience for the N this outcome talks about
    unsigned long long n = 0;
};

/// Backtracking existence search with translate + row-order symmetry
/// breaking. Either finds a verified array (the lexicographically least one
/// the broken space contains) or certifies exhaustion. Deterministic for any
/// worker count. Throws BudgetExceeded when the node budget runs out.
SearchOutcome exists_oa(unsigned long long n, int k, int s, int t, bool simple_only,
                        const SearchLimits& limits = {});

struct MinRowsResult {
    std::optional<unsigned long long> min_n;  // nullopt: nothing found up to the limit
    std::vector<SearchOutcome> trail;         // one outcome per N tried, ascending
    unsigned long long nodes_total = 0;
};

/// Smallest N <= n_limit (stepping over multiples of s^t) admitting an OA;
/// exhaustion certificates for all smaller N are retained in the trail.
MinRowsResult min_rows(int k, int s, int t, bool simple_only, unsigned long long n_limit,
                       const SearchLimits& limits = {});

}  // namespace oatk
