#include "oatk/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "oatk/strength.hpp"

namespace oatk {

namespace {

// one tracked column subset: counters over its s^j cells, each capped at lambda_j
struct CounterGroup {
    std::vector<std::size_t> cols;
    std::size_t cells = 0;
    std::size_t lambda = 0;
};

struct Instance {
    std::size_t n = 0;
    int k = 0, s = 0, t = 0;
    bool simple_only = false;
    std::size_t n_candidates = 0;          // s^k
    std::vector<CounterGroup> groups;      // subsets of size 1..t, lexicographic
    std::vector<std::uint32_t> cell_of;    // candidate-major: cell_of[r*G + g]
    std::size_t g_count = 0;
    // cells whose last hitting candidate is r; once the search frontier moves
    // past r, any of them still below lambda kills the branch
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> expiring;

    unsigned long long budget = 0;
    std::atomic<unsigned long long> nodes{0};
    std::atomic<bool> stop{false};

    unsigned long long progress_interval = 0;
    const std::function<void(unsigned long long)>* progress = nullptr;
    std::atomic<unsigned long long> last_progress{0};

    void report_progress() {
        if (progress_interval == 0 || !progress) return;
        unsigned long long now = nodes.load(std::memory_order_relaxed);
        unsigned long long last = last_progress.load(std::memory_order_relaxed);
        if (now - last >= progress_interval &&
            last_progress.compare_exchange_strong(last, now)) {
            (*progress)(now);
        }
    }
};

constexpr unsigned long long kNodeFlush = 4096;

// depth-first extension over candidates >= from; rows are candidate indices.
// Returns true when a full array was found (rows then holds it).
class Walker {
public:
    Walker(Instance& inst, std::vector<std::size_t> prefix_rows,
           std::vector<std::vector<std::uint32_t>> counts)
        : inst_(inst), rows_(std::move(prefix_rows)), counts_(std::move(counts)) {
        if (inst_.progress_interval > 0 && inst_.progress_interval < flush_threshold_)
            flush_threshold_ = inst_.progress_interval;
    }

    bool run() {
        std::size_t from = rows_.empty() ? 0 : rows_.back() + (inst_.simple_only ? 1 : 0);
        bool found = dfs(from);
        flush_nodes();
        return found;
    }

    const std::vector<std::size_t>& rows() const { return rows_; }
    unsigned long long local_nodes() const { return total_local_; }
    bool aborted() const { return aborted_; }

    bool try_place(std::size_t r) {
        count_node();
        const std::uint32_t* cell = inst_.cell_of.data() + r * inst_.g_count;
        for (std::size_t g = 0; g < inst_.g_count; ++g)
            if (counts_[g][cell[g]] + 1 > inst_.groups[g].lambda) return false;
        for (std::size_t g = 0; g < inst_.g_count; ++g) ++counts_[g][cell[g]];
        rows_.push_back(r);
        return true;
    }

    void unplace() {
        std::size_t r = rows_.back();
        rows_.pop_back();
        const std::uint32_t* cell = inst_.cell_of.data() + r * inst_.g_count;
        for (std::size_t g = 0; g < inst_.g_count; ++g) --counts_[g][cell[g]];
    }

    std::vector<std::vector<std::uint32_t>> counts_snapshot() const { return counts_; }

    // every cell whose last hitter is r must already be at lambda, otherwise
    // no candidate beyond r can complete the array from this state
    bool expired_cells_full(std::size_t r) const {
        for (auto [g, cell] : inst_.expiring[r])
            if (counts_[g][cell] < inst_.groups[g].lambda) return false;
        return true;
    }

    void flush_nodes() {
        inst_.nodes.fetch_add(local_batch_, std::memory_order_relaxed);
        local_batch_ = 0;
    }

private:
    void count_node() {
        ++local_batch_;
        ++total_local_;
        if (local_batch_ >= flush_threshold_) {
            flush_nodes();
            if (inst_.nodes.load(std::memory_order_relaxed) > inst_.budget)
                inst_.stop.store(true, std::memory_order_relaxed);
            inst_.report_progress();
        }
    }

    bool dfs(std::size_t from) {
        if (rows_.size() == inst_.n) return true;
        if (inst_.stop.load(std::memory_order_relaxed)) {
            aborted_ = true;
            return false;
        }
        // strictly-increasing order skips candidate from-1 forever at entry
        if (inst_.simple_only && from > 0 && !expired_cells_full(from - 1)) return false;
        for (std::size_t r = from; r < inst_.n_candidates; ++r) {
            if (try_place(r)) {
                if (dfs(inst_.simple_only ? r + 1 : r)) return true;
                unplace();
                if (aborted_) return false;
            }
            if (!expired_cells_full(r)) return false;  // moving past r strands a cell
        }
        return false;
    }

    Instance& inst_;
    std::vector<std::size_t> rows_;
    std::vector<std::vector<std::uint32_t>> counts_;
    unsigned long long local_batch_ = 0;
    unsigned long long total_local_ = 0;
    unsigned long long flush_threshold_ = kNodeFlush;
    bool aborted_ = false;
};

SymbolRow candidate_row(std::size_t r, int k, int s) {
    SymbolRow row(k);
    for (int c = k - 1; c >= 0; --c) {
        row[c] = static_cast<Symbol>(r % s);
        r /= s;
    }
    return row;
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

void build_groups(Instance& inst) {
    for (int j = 1; j <= inst.t; ++j) {
        std::size_t cells = 1;
        for (int i = 0; i < j; ++i) cells *= inst.s;
        std::size_t lambda = inst.n / cells;  // exact by the divisibility precheck
        std::vector<std::size_t> idx(j);
        for (int i = 0; i < j; ++i) idx[i] = static_cast<std::size_t>(i);
        do {
            inst.groups.push_back({idx, cells, lambda});
        } while (next_combination(idx, inst.k));
    }
    inst.g_count = inst.groups.size();

    inst.cell_of.resize(inst.n_candidates * inst.g_count);
    for (std::size_t r = 0; r < inst.n_candidates; ++r) {
        SymbolRow row = candidate_row(r, inst.k, inst.s);
        for (std::size_t g = 0; g < inst.g_count; ++g) {
            std::size_t cell = 0;
            for (std::size_t c : inst.groups[g].cols) cell = cell * inst.s + row[c];
            inst.cell_of[r * inst.g_count + g] = static_cast<std::uint32_t>(cell);
        }
    }

    inst.expiring.assign(inst.n_candidates, {});
    for (std::size_t g = 0; g < inst.g_count; ++g) {
        std::vector<std::size_t> last(inst.groups[g].cells, inst.n_candidates);
        for (std::size_t r = 0; r < inst.n_candidates; ++r)
            last[inst.cell_of[r * inst.g_count + g]] = r;
        for (std::size_t cell = 0; cell < last.size(); ++cell)
            if (last[cell] != inst.n_candidates)
                inst.expiring[last[cell]].emplace_back(static_cast<std::uint32_t>(g),
                                                       static_cast<std::uint32_t>(cell));
    }
}

std::vector<std::vector<std::uint32_t>> empty_counts(const Instance& inst) {
    std::vector<std::vector<std::uint32_t>> counts(inst.g_count);
    for (std::size_t g = 0; g < inst.g_count; ++g)
        counts[g].assign(inst.groups[g].cells, 0);
    return counts;
}

SymbolArray rows_to_array(const std::vector<std::size_t>& rows, int k, int s) {
    std::vector<SymbolRow> out;
    out.reserve(rows.size());
    for (std::size_t r : rows) out.push_back(candidate_row(r, k, s));
    return SymbolArray::from_rows(s, out);
}

}  // namespace

SearchOutcome exists_oa(unsigned long long n, int k, int s, int t, bool simple_only,
                        const SearchLimits& limits) {
    if (k < 1 || s < 2 || t < 0 || t > k)
        throw std::invalid_argument("exists_oa: bad parameters (need 1<=k, 2<=s, 0<=t<=k)");
    if (n < 1 || n > (1ULL << 20))
        throw std::invalid_argument("exists_oa: N out of the desk-scale range 1..2^20");

    SearchOutcome outcome;
    outcome.n = n;
    outcome.symmetry_assumptions.push_back(
        "first row fixed to the all-zero row (translation invariance)");
    outcome.symmetry_assumptions.push_back(
        simple_only ? "rows strictly increasing in lexicographic order (distinct multiset rows)"
                    : "rows nondecreasing in lexicographic order (multiset row semantics)");

    // lambda must be integral
    unsigned long long st = 1;
    bool divisible = true;
    for (int i = 0; i < t; ++i) {
        if (st > n) {
            divisible = false;
            break;
        }
        st *= static_cast<unsigned long long>(s);
    }
    if (!divisible || n % st != 0) {
        outcome.exhausted = true;
        outcome.infeasibility_reason = "lambda = N / s^t is not a positive integer";
        return outcome;
    }

    double log_cand = k * std::log2(static_cast<double>(s));
    if (log_cand > 22)
        throw std::invalid_argument("exists_oa: s^k candidate space too large for exhaustion");
    std::size_t n_candidates = 1;
    for (int i = 0; i < k; ++i) n_candidates *= static_cast<std::size_t>(s);
    if (simple_only && n > n_candidates) {
        outcome.exhausted = true;
        outcome.infeasibility_reason = "more rows requested than distinct tuples exist";
        return outcome;
    }

    Instance inst;
    inst.n = static_cast<std::size_t>(n);
    inst.k = k;
    inst.s = s;
    inst.t = t;
    inst.simple_only = simple_only;
    inst.n_candidates = n_candidates;
    inst.budget = limits.node_budget;
    inst.progress_interval = limits.progress_interval;
    if (limits.progress) inst.progress = &limits.progress;
    build_groups(inst);

    unsigned workers = limits.workers ? limits.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;

    std::optional<std::vector<std::size_t>> found_rows;

    // place the forced all-zero first row
    Walker seed(inst, {}, empty_counts(inst));
    bool seed_found = false;
    if (seed.try_place(0)) {
        if (inst.n == 1) {
            seed_found = true;
            found_rows = seed.rows();
        }
    } else {
        // zero row impossible only when some lambda is zero, i.e. n < s^j -- the
        // divisibility check already rejected that
        throw std::logic_error("exists_oa: zero row rejected unexpectedly");
    }
    seed.flush_nodes();

    if (!seed_found && inst.n >= 2) {
        // fan out over the choices for rows 2 and 3; prefix order is the
        // deterministic merge order, and every task runs to its own
        // completion, so node counts do not depend on the worker count
        struct Task {
            std::vector<std::size_t> rows;
            std::vector<std::vector<std::uint32_t>> counts;
        };
        const bool fanout = inst.n >= 3 && n_candidates <= 4096;

        if (!fanout) {
            Walker w(inst, seed.rows(), seed.counts_snapshot());
            if (w.run()) found_rows = w.rows();
            if (w.aborted() || inst.nodes.load() > inst.budget)
                throw BudgetExceeded(inst.nodes.load(), inst.budget);
        } else {
            std::vector<Task> tasks;
            Walker prefix(inst, seed.rows(), seed.counts_snapshot());
            std::size_t start1 = simple_only ? 1 : 0;
            bool viable = !simple_only || prefix.expired_cells_full(0);
            for (std::size_t r1 = start1; viable && r1 < n_candidates; ++r1) {
                if (prefix.try_place(r1)) {
                    std::size_t start2 = simple_only ? r1 + 1 : r1;
                    bool inner = !simple_only || prefix.expired_cells_full(r1);
                    for (std::size_t r2 = start2; inner && r2 < n_candidates; ++r2) {
                        if (prefix.try_place(r2)) {
                            tasks.push_back({prefix.rows(), prefix.counts_snapshot()});
                            prefix.unplace();
                        }
                        inner = prefix.expired_cells_full(r2);
                    }
                    prefix.unplace();
                }
                viable = prefix.expired_cells_full(r1);
            }
            prefix.flush_nodes();

            std::vector<std::optional<std::vector<std::size_t>>> results(tasks.size());
            std::vector<char> aborted(tasks.size(), 0);
            std::atomic<std::size_t> next{0};
            auto work = [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    Walker w(inst, std::move(tasks[i].rows), std::move(tasks[i].counts));
                    if (w.run()) results[i] = w.rows();
                    aborted[i] = w.aborted() ? 1 : 0;
                }
            };
            std::vector<std::thread> pool;
            for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
            work();
            for (auto& th : pool) th.join();

            bool any_aborted = false;
            for (char a : aborted) any_aborted = any_aborted || a != 0;
            if (any_aborted || inst.nodes.load() > inst.budget)
                throw BudgetExceeded(inst.nodes.load(), inst.budget);
            for (std::size_t i = 0; i < results.size(); ++i) {
                if (results[i]) {
                    found_rows = results[i];
                    break;
                }
            }
        }
    }

    outcome.nodes_visited = inst.nodes.load();
    if (found_rows) {
        SymbolArray a = rows_to_array(*found_rows, k, s);
        // soundness: never trust the search bookkeeping
        if (!verify_strength(a, t).holds)
            throw std::logic_error("exists_oa: found array failed re-verification");
        if (simple_only && !multiplicity_census(a).is_simple)
            throw std::logic_error("exists_oa: found array is not simple");
        outcome.found = std::move(a);
    } else {
        outcome.exhausted = true;
    }
    return outcome;
}

MinRowsResult min_rows(int k, int s, int t, bool simple_only, unsigned long long n_limit,
                       const SearchLimits& limits) {
    if (t < 0 || t > k) throw std::invalid_argument("min_rows: t out of range");
    MinRowsResult result;
    unsigned long long st = 1;
    for (int i = 0; i < t; ++i) {
        st *= static_cast<unsigned long long>(s);
        if (st > n_limit) return result;  // nothing feasible below the limit
    }
    for (unsigned long long n = st; n <= n_limit; n += st) {
        SearchOutcome out = exists_oa(n, k, s, t, simple_only, limits);
        result.nodes_total += out.nodes_visited;
        bool found = out.found.has_value();
        result.trail.push_back(std::move(out));
        if (found) {
            result.min_n = n;
            break;
        }
    }
    return result;
}

}  // namespace oatk
