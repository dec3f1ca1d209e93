// oa -- command-line front door for the orthogonal-array toolkit.
//
// Subcommands: verify, analyze, bound, construct, search, table.
// Exit codes: 0 success, 1 property-verification failure, 2 usage/parse
// error, 3 inconclusive (search budget).

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oatk/boolfun.hpp"
#include "oatk/bounds.hpp"
#include "oatk/character.hpp"
#include "oatk/constructions.hpp"
#include "oatk/lp.hpp"
#include "oatk/search.hpp"
#include "oatk/strength.hpp"
#include "oatk/symbol_array.hpp"

using nlohmann::json;

namespace {

// every numeric claim a command reports is tied to the module that certified it
struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::pair<std::string, std::string>> provenance;

    void claim(const std::string& what, const std::string& source) {
        provenance.emplace_back(what, source);
    }

    json to_json() const {
        json p = json::array();
        for (const auto& [what, source] : provenance)
            p.push_back({{"claim", what}, {"source", source}});
        return {{"command", command}, {"inputs", inputs}, {"results", results}, {"provenance", p}};
    }
};

json rational_json(const oatk::Rational& q) {
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

oatk::SymbolArray read_array(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return oatk::parse_oa(ss.str());
    }
    return oatk::read_oa_file(path);
}

std::string row_string(std::span<const oatk::Symbol> row) {
    std::string s;
    s.reserve(row.size());
    for (oatk::Symbol c : row) s += static_cast<char>('0' + c);
    return s;
}

json array_json(const oatk::SymbolArray& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(row_string(a.row(i)));
    return {{"N", a.rows()}, {"k", a.cols()}, {"s", a.alphabet()}, {"rows", rows}};
}

void emit(const Report& rep, bool as_json, std::ostream& os, const std::string& text) {
    if (as_json)
        os << rep.to_json().dump(2) << "\n";
    else
        os << text;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const std::string& file, int t, bool with_max, bool as_json) {
    oatk::SymbolArray a = read_array(file);
    oatk::StrengthReport rep = oatk::verify_strength(a, t);
    if (with_max) rep.max_strength = oatk::max_strength(a);

    Report out;
    out.command = "verify";
    out.inputs = {{"file", file}, {"t", t}};
    out.results["N"] = a.rows();
    out.results["k"] = a.cols();
    out.results["s"] = a.alphabet();
    out.results["t"] = t;
    out.results["holds"] = rep.holds;
    out.results["lambda"] = rational_json(rep.lambda);
    if (rep.max_strength) out.results["max_strength"] = *rep.max_strength;
    if (rep.witness) {
        const auto& w = *rep.witness;
        out.results["witness"] = {{"columns", w.columns},
                                  {"tuple", row_string(w.tuple)},
                                  {"observed", w.observed},
                                  {"expected", rational_json(w.expected)}};
    }
    out.claim("strength-" + std::to_string(t) + (rep.holds ? " holds" : " fails"),
              "verified-file");

    std::ostringstream text;
    text << "OA candidate: N=" << a.rows() << " k=" << a.cols() << " s=" << a.alphabet() << "\n";
    text << "strength " << t << ": " << (rep.holds ? "HOLDS" : "FAILS")
         << " (lambda = " << oatk::to_string(rep.lambda) << ")\n";
    if (rep.witness) {
        const auto& w = *rep.witness;
        text << "witness: columns {";
        for (std::size_t i = 0; i < w.columns.size(); ++i)
            text << (i ? "," : "") << w.columns[i] + 1;
        text << "} tuple " << row_string(w.tuple) << " observed " << w.observed << " expected "
             << oatk::to_string(w.expected) << "\n";
    }
    if (rep.max_strength) text << "max strength: " << *rep.max_strength << "\n";
    emit(out, as_json, std::cout, text.str());
    return rep.holds ? 0 : 1;
}

// --------------------------------------------------------------- analyze ---

int cmd_analyze(const std::string& file, int u, bool as_json) {
    oatk::SymbolArray a = read_array(file);
    oatk::ArrayAnalysis an = oatk::analyze_array(a, u);  // throws if strength 2u fails

    Report out;
    out.command = "analyze";
    out.inputs = {{"file", file}, {"u", u}};
    out.results["N"] = a.rows();
    out.results["k"] = a.cols();
    out.results["s"] = a.alphabet();
    out.results["strength_verified"] = 2 * u;
    out.results["rao"] = an.rao;
    out.results["simple"] = an.census.is_simple;
    out.results["rho_max"] = an.census.max_multiplicity;
    out.results["distinct_rows"] = an.census.distinct_count;
    out.results["verdict"] = oatk::to_string(an.verdict.kind);
    out.results["rho_max_bound"] = an.verdict.rho_max_bound;
    out.results["census_within_bound"] = an.census_within_bound;
    out.results["rao_tight"] = an.rao_tight;
    if (an.doubled_even_weight_confirmed)
        out.results["doubled_even_weight_confirmed"] = *an.doubled_even_weight_confirmed;
    out.claim("strength " + std::to_string(2 * u) + " holds", "verified-file");
    out.claim("multiplicity census", "verified-file");
    out.claim("M(k,s,2u) = " + std::to_string(an.rao), "bound");
    out.claim("verdict " + std::string(oatk::to_string(an.verdict.kind)), "bound");

    std::ostringstream text;
    text << "OA(" << a.rows() << "," << a.cols() << "," << a.alphabet() << "," << 2 * u
         << ") verified\n";
    text << (an.census.is_simple ? "simple" : "not simple") << ": rho_max = "
         << an.census.max_multiplicity << ", distinct rows = " << an.census.distinct_count << "\n";
    text << "Rao bound M = " << an.rao << ", rho_max bound floor(N/M) = "
         << an.verdict.rho_max_bound << (an.census_within_bound ? " (respected)"
                                                                 : " (VIOLATED)") << "\n";
    text << "verdict: " << oatk::to_string(an.verdict.kind) << " -- " << an.verdict.details
         << "\n";
    if (an.rao_tight) text << "Rao-tight: N = M\n";
    if (an.doubled_even_weight_confirmed)
        text << "doubled even-weight decomposition: "
             << (*an.doubled_even_weight_confirmed ? "confirmed" : "NOT confirmed") << "\n";
    emit(out, as_json, std::cout, text.str());
    if (!an.census_within_bound) return 1;
    if (an.doubled_even_weight_confirmed && !*an.doubled_even_weight_confirmed) return 1;
    return 0;
}

// ----------------------------------------------------------------- bound ---

int cmd_bound(int k, int s, int t, bool with_lp, bool lift, bool as_json) {
    oatk::BoundReport rep = oatk::bound_report(k, s, t, lift, with_lp);
    const auto& cert = rep.lp;
    oatk::BigInt best = oatk::to_bigint(rep.best_lower);

    std::string verdict;
    if (t % 2 == 0 && rep.rao)
        verdict = "any OA(N," + std::to_string(k) + "," + std::to_string(s) + "," +
                  std::to_string(t) + ") with N < " + std::to_string(2 * *rep.rao) +
                  " = 2M is simple";
    else if (s == 2)
        verdict = "odd strength: apply the doubling reduction and the verdict at strength t-1";
    else
        verdict = "no simplicity verdict available";
    if (rep.khalyavin.applicable)
        verdict += "; N = 2^(k-1) = " + std::to_string(rep.khalyavin.threshold) +
                   " forces simplicity";

    Report out;
    out.command = "bound";
    out.inputs = {{"k", k}, {"s", s}, {"t", t}, {"lp", with_lp}, {"lift", lift}};
    out.results["k"] = k;
    out.results["s"] = s;
    out.results["t"] = t;
    if (rep.rao) out.results["rao"] = *rep.rao;
    out.results["fb_num"] = rep.friedman_bierbrauer.get_num().get_str();
    out.results["fb_den"] = rep.friedman_bierbrauer.get_den().get_str();
    out.results["khalyavin"] = {{"applicable", rep.khalyavin.applicable},
                                {"threshold", rep.khalyavin.threshold}};
    if (cert) out.results["lp"] = rational_json(cert->optimum);
    out.results["verdict"] = verdict;
    out.results["best_lower"] = best.get_str();
    out.results["notes"] = rep.notes;
    if (rep.rao) out.claim("rao " + std::to_string(*rep.rao), "bound");
    out.claim("friedman-bierbrauer " + oatk::to_string(rep.friedman_bierbrauer), "bound");
    if (rep.khalyavin.applicable)
        out.claim("khalyavin threshold " + std::to_string(rep.khalyavin.threshold), "bound");
    if (cert) out.claim("lp optimum " + oatk::to_string(cert->optimum), "lp");
    out.claim("best_lower " + best.get_str(), cert ? "lp" : "bound");

    std::ostringstream text;
    text << "bounds for OA(N," << k << "," << s << "," << t << "):\n";
    if (rep.rao) text << "  rao      M = " << *rep.rao << "\n";
    text << "  friedman-bierbrauer = " << oatk::to_string(rep.friedman_bierbrauer) << "\n";
    if (rep.khalyavin.applicable)
        text << "  khalyavin: applicable, N >= " << rep.khalyavin.threshold
             << ", equality forces simplicity\n";
    if (cert) text << "  lp optimum = " << oatk::to_string(cert->optimum) << "\n";
    text << "  best lower bound: N >= " << best.get_str() << (rep.integrality_lifted && lift
                                                                  ? " (lifted to multiple of s^t)"
                                                                  : "")
         << "\n";
    text << "  verdict: " << verdict << "\n";
    emit(out, as_json, std::cout, text.str());
    return 0;
}

// ------------------------------------------------------------------- lp ----

int cmd_lp(int k, int t, bool as_json) {
    oatk::LPCertificate cert = oatk::lp_bound(k, t);
    auto check = oatk::verify_certificate(cert);
    if (as_json) {
        std::cout << oatk::certificate_to_json(cert) << "\n";
    } else {
        std::cout << "lp_bound(" << k << "," << t << ") = " << oatk::to_string(cert.optimum)
                  << "\n";
        std::cout << "integer bound (multiple of 2^t): " << cert.integer_bound.get_str() << "\n";
        std::cout << "certificate replay: " << (check.ok ? "ok" : check.violation) << "\n";
    }
    return check.ok ? 0 : 1;
}

// -------------------------------------------------------------- construct --

void write_array(const oatk::SymbolArray& a, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        std::cout << oatk::serialize_oa(a);
    else
        oatk::write_oa_file(a, out_path);
}

// ----------------------------------------------------------------- search --

int cmd_search(int k, int s, int t, unsigned long long n, unsigned long long max_n, bool simple,
               unsigned long long budget, unsigned workers, bool as_json,
               const std::string& out_path) {
    oatk::SearchLimits limits;
    limits.node_budget = budget;
    limits.workers = workers;
    limits.progress_interval = 50'000'000ULL;
    limits.progress = [](unsigned long long nodes) {
        std::cerr << "oa search: " << nodes << " nodes visited\n";
    };

    Report out;
    out.command = "search";
    out.inputs = {{"k", k}, {"s", s},       {"t", t},         {"simple", simple},
                  {"n", n}, {"max_n", max_n}, {"budget", budget}};

    std::ostringstream text;
    int rc = 0;
    if (n > 0) {
        oatk::SearchOutcome o = oatk::exists_oa(n, k, s, t, simple, limits);
        out.results["outcome"] = o.found ? "found" : "exhausted";
        out.results["nodes_visited"] = o.nodes_visited;
        out.results["symmetry_assumptions"] = o.symmetry_assumptions;
        if (o.infeasibility_reason) out.results["infeasibility_reason"] = *o.infeasibility_reason;
        if (o.found) {
            out.results["array"] = array_json(*o.found);
            out.claim("OA(" + std::to_string(n) + "," + std::to_string(k) + "," +
                          std::to_string(s) + "," + std::to_string(t) + ") exists",
                      "search");
        } else {
            out.claim("no OA(" + std::to_string(n) + "," + std::to_string(k) + "," +
                          std::to_string(s) + "," + std::to_string(t) +
                          (simple ? ") with distinct rows" : ")"),
                      "search");
        }
        text << (o.found ? "found" : "exhausted") << " (nodes: " << o.nodes_visited << ")\n";
        for (const auto& a : o.symmetry_assumptions) text << "assuming: " << a << "\n";
        if (o.infeasibility_reason) text << "reason: " << *o.infeasibility_reason << "\n";
        if (o.found && !as_json) {
            if (out_path.empty())
                text << oatk::serialize_oa(*o.found);
            else
                write_array(*o.found, out_path);
        }
    } else {
        oatk::MinRowsResult r = oatk::min_rows(k, s, t, simple, max_n, limits);
        out.results["nodes_visited"] = r.nodes_total;
        json trail = json::array();
        for (const auto& o : r.trail)
            trail.push_back({{"N", o.n},
                             {"outcome", o.found ? "found" : "exhausted"},
                             {"nodes", o.nodes_visited}});
        out.results["trail"] = trail;
        if (r.min_n) {
            out.results["min_rows"] = *r.min_n;
            out.results["array"] = array_json(*r.trail.back().found);
            out.claim("min rows " + std::to_string(*r.min_n) + " for (k,s,t)=(" +
                          std::to_string(k) + "," + std::to_string(s) + "," + std::to_string(t) +
                          (simple ? ") over simple arrays" : ")"),
                      "search");
            text << "minimum rows: " << *r.min_n << " (nodes: " << r.nodes_total << ")\n";
            for (const auto& o : r.trail)
                text << "  N=" << o.n << ": " << (o.found ? "found" : "exhausted") << "\n";
            if (!as_json) {
                if (out_path.empty())
                    text << oatk::serialize_oa(*r.trail.back().found);
                else
                    write_array(*r.trail.back().found, out_path);
            }
        } else {
            out.results["min_rows"] = nullptr;
            out.claim("no array up to N=" + std::to_string(max_n), "search");
            text << "no array found up to N=" << max_n << "\n";
            for (const auto& o : r.trail)
                text << "  N=" << o.n << ": exhausted\n";
        }
    }
    emit(out, as_json, std::cout, text.str());
    return rc;
}

// ------------------------------------------------------------------ table --

struct UpperEntry {
    oatk::SymbolArray array;
    int verified_strength;  // holds at this t (and below, by monotonicity)
    std::string how;
};

class TableBuilder {
public:
    explicit TableBuilder(bool with_lp) : with_lp_(with_lp) {}

    // best certified construction for F*(k,2,t), if any
    std::optional<UpperEntry> upper(int k, int t) {
        auto key = std::make_pair(k, t);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        auto result = compute_upper(k, t);
        memo_[key] = result;
        return result;
    }

    struct LowerInfo {
        unsigned long long value;
        std::vector<std::pair<std::string, std::string>> sources;  // claim, module
    };

    LowerInfo lower(int k, int t) {
        LowerInfo info;
        oatk::BoundReport rep = oatk::bound_report(k, 2, t, false);
        oatk::BigInt best(1);
        best = oatk::pow_int(2, static_cast<unsigned long>(t));
        info.sources.emplace_back("lambda >= 1", "bound");
        if (rep.rao && oatk::to_bigint(*rep.rao) > best) {
            best = oatk::to_bigint(*rep.rao);
            info.sources.emplace_back("rao " + std::to_string(*rep.rao), "bound");
        }
        if (rep.friedman_bierbrauer > 0) {
            oatk::BigInt fb = oatk::rational_ceil(rep.friedman_bierbrauer);
            if (fb > best) {
                best = fb;
                info.sources.emplace_back("friedman-bierbrauer " + fb.get_str(), "bound");
            }
        }
        if (rep.khalyavin.applicable && oatk::to_bigint(rep.khalyavin.threshold) > best) {
            best = oatk::to_bigint(rep.khalyavin.threshold);
            info.sources.emplace_back("khalyavin " + std::to_string(rep.khalyavin.threshold),
                                      "bound");
        }
        if (with_lp_) {
            oatk::LPCertificate cert = oatk::lp_bound(k, t);
            oatk::BigInt lp = oatk::rational_ceil(cert.optimum);
            if (lp > best) {
                best = lp;
                info.sources.emplace_back("lp " + lp.get_str(), "lp");
            }
        }
        oatk::BigInt lifted =
            oatk::round_up_to_multiple(best, oatk::pow_int(2, static_cast<unsigned long>(t)));
        if (lifted != best) {
            best = lifted;
            info.sources.emplace_back("integrality lift to multiple of 2^t", "bound");
        }
        info.value = oatk::to_ull_checked(best, "table lower bound");
        return info;
    }

private:
    // deletes trailing columns down to k and re-checks what the cell needs
    std::optional<UpperEntry> deleted_to(oatk::SymbolArray a, int k, int t,
                                         const std::string& how) {
        while (static_cast<int>(a.cols()) > k) a = oatk::delete_column(a, a.cols());
        if (!oatk::multiplicity_census(a).is_simple) return std::nullopt;
        if (!oatk::verify_strength(a, t).holds) return std::nullopt;
        return UpperEntry{std::move(a), t, how};
    }

    std::optional<UpperEntry> compute_upper(int k, int t) {
        if (t > k) return std::nullopt;
        std::optional<UpperEntry> best;
        auto consider = [&](std::optional<UpperEntry> cand) {
            if (!cand) return;
            if (!best || cand->array.rows() < best->array.rows()) best = std::move(cand);
        };

        if (t == 1) {
            // the two constant rows form a strength-1 array on any k
            std::vector<oatk::SymbolRow> rows{oatk::SymbolRow(k, 0), oatk::SymbolRow(k, 1)};
            oatk::SymbolArray a = oatk::SymbolArray::from_rows(2, rows);
            if (oatk::verify_strength(a, 1).holds)
                consider(UpperEntry{std::move(a), 1, "constant-pair"});
        }
        if (t == 2) {
            int h = 1;
            while ((1 << h) - 1 < k) ++h;
            consider(deleted_to(oatk::sylvester_oa(h), k, 2, "sylvester+delete"));
        }
        if (t == 4 && k >= 4 && k <= 15)
            consider(deleted_to(oatk::zero_shorten(oatk::nordstrom_robinson()), k, 4,
                                "kerdock-shorten+delete"));
        if (t == 5 && k >= 5 && k <= 16)
            consider(deleted_to(oatk::nordstrom_robinson(), k, 5, "kerdock+delete"));
        if (t == 6 && k >= 6 && k <= 13)
            consider(deleted_to(oatk::dual_code_oa(oatk::linear_13_3_7_code()), k, 6,
                                "dual-code+delete"));
        if (t % 2 == 1 && t >= 3 && k >= 2) {
            // doubling: a simple strength-(t-1) array on k-1 columns doubles to
            // a simple strength-t array on k columns
            auto base = upper(k - 1, t - 1);
            if (base && base->verified_strength >= t - 1) {
                try {
                    oatk::SymbolArray doubled =
                        oatk::double_strength(base->array, (t - 1) / 2);
                    consider(UpperEntry{std::move(doubled), t, "doubling(" + base->how + ")"});
                } catch (const oatk::VerificationError&) {
                }
            }
        }
        if (t <= k - 1 && k >= 2 && k <= 20) {
            oatk::SymbolArray e = oatk::even_weight_oa(k);  // strength exactly k-1
            consider(UpperEntry{std::move(e), t, "even-weight"});
        }
        if (t == k && k <= 16) {
            // full factorial
            std::vector<oatk::Symbol> cells;
            cells.reserve((std::size_t{1} << k) * k);
            for (std::size_t x = 0; x < (std::size_t{1} << k); ++x)
                for (int c = 0; c < k; ++c)
                    cells.push_back(static_cast<oatk::Symbol>((x >> (k - 1 - c)) & 1));
            oatk::SymbolArray a(static_cast<std::size_t>(k), 2, std::move(cells));
            if (oatk::verify_strength(a, std::min(t, k)).holds)
                consider(UpperEntry{std::move(a), k, "full-factorial"});
        }
        return best;
    }

    bool with_lp_;
    std::map<std::pair<int, int>, std::optional<UpperEntry>> memo_;
};

int cmd_table(int max_k, int max_t, bool with_lp, bool as_json) {
    if (max_k < 1 || max_k > 16 || max_t < 1)
        throw std::invalid_argument("table: need 1 <= max-k <= 16, max-t >= 1");
    TableBuilder builder(with_lp);

    Report out;
    out.command = "table";
    out.inputs = {{"max_k", max_k}, {"max_t", max_t}, {"lp", with_lp}};
    json cells = json::array();

    std::ostringstream text;
    text << "certified intervals for F*(k,2,t); a single value means resolved\n";
    text << "k\\t";
    for (int t = 1; t <= max_t; ++t) text << "\t" << t;
    text << "\n";

    for (int k = 1; k <= max_k; ++k) {
        text << k;
        for (int t = 1; t <= std::min(k, max_t); ++t) {
            auto low = builder.lower(k, t);
            auto up = builder.upper(k, t);
            unsigned long long upper_n = up ? up->array.rows() : 0;
            bool resolved = up && low.value == upper_n;

            json cell = {{"k", k},
                         {"t", t},
                         {"lower", low.value},
                         {"resolved", resolved}};
            json srcs = json::array();
            for (const auto& [claim, module] : low.sources)
                srcs.push_back({{"claim", claim}, {"source", module}});
            cell["lower_sources"] = srcs;
            if (up) {
                cell["upper"] = upper_n;
                cell["upper_source"] = {{"claim", up->how}, {"source", "construction"}};
            }
            cells.push_back(cell);

            std::string cell_claim = "F*(" + std::to_string(k) + ",2," + std::to_string(t) + ")";
            out.claim(cell_claim + " >= " + std::to_string(low.value),
                      low.sources.empty() ? "bound" : low.sources.back().second);
            if (up) out.claim(cell_claim + " <= " + std::to_string(upper_n), "construction");

            text << "\t";
            if (resolved)
                text << upper_n;
            else if (up)
                text << "[" << low.value << "," << upper_n << "]";
            else
                text << "[" << low.value << ",?]";
        }
        text << "\n";
    }
    out.results["cells"] = cells;
    emit(out, as_json, std::cout, text.str());
    return 0;
}

// ---------------------------------------------------------------- weights --

int cmd_weights(const std::string& file, bool as_json) {
    oatk::SymbolArray a = read_array(file);
    auto coeffs = oatk::weight_enumerator(a);
    Report out;
    out.command = "weights";
    out.inputs = {{"file", file}};
    out.results["N"] = a.rows();
    out.results["k"] = a.cols();
    out.results["coefficients"] = coeffs;
    out.claim("weight enumerator", "verified-file");
    std::ostringstream text;
    for (std::size_t w = 0; w < coeffs.size(); ++w)
        text << w << " " << coeffs[w] << "\n";
    emit(out, as_json, std::cout, text.str());
    return 0;
}

// --------------------------------------------------------------- ci / bf ---

int cmd_ci(const std::string& file, bool from_oa, bool as_json) {
    oatk::BooleanFunction f =
        from_oa ? oatk::oa_to_support(read_array(file)) : oatk::read_truth_table_file(file);
    int order = oatk::ci_order(f);
    Report out;
    out.command = "ci";
    out.inputs = {{"file", file}, {"from_oa", from_oa}};
    out.results["k"] = f.vars();
    out.results["weight"] = f.weight();
    out.results["ci_order"] = order;
    out.claim("ci order " + std::to_string(order), "verified-file");
    std::ostringstream text;
    text << "k = " << f.vars() << ", weight = " << f.weight() << ", ci order = " << order << "\n";
    emit(out, as_json, std::cout, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal array toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // verify
    std::string v_file;
    int v_t = 0;
    bool v_max = false;
    auto* verify = app.add_subcommand("verify", "verify strength t by counting");
    verify->add_option("file", v_file, "OA text file, or - for stdin")->required();
    verify->add_option("--t", v_t, "strength to verify")->required();
    verify->add_flag("--max-strength", v_max, "also compute the maximum strength");

    // analyze
    std::string a_file;
    int a_u = 1;
    auto* analyze = app.add_subcommand("analyze", "multiplicity verdict at strength 2u");
    analyze->add_option("file", a_file, "OA text file, or - for stdin")->required();
    analyze->add_option("--u", a_u, "half strength u (array must have strength 2u)")->required();

    // bound
    int b_k = 0, b_s = 2, b_t = 0;
    bool b_lp = false, b_lift = false;
    auto* bound = app.add_subcommand("bound", "closed-form (and LP) lower bounds");
    bound->add_option("--k", b_k)->required();
    bound->add_option("--s", b_s);
    bound->add_option("--t", b_t)->required();
    bound->add_flag("--lp", b_lp, "also solve the Delsarte LP (s=2)");
    bound->add_flag("--lift", b_lift, "round the bound up to a multiple of s^t");

    // lp
    int l_k = 0, l_t = 0;
    auto* lp = app.add_subcommand("lp", "Delsarte LP certificate (s=2)");
    lp->add_option("--k", l_k)->required();
    lp->add_option("--t", l_t)->required();

    // construct
    auto* construct = app.add_subcommand("construct", "explicit constructions");
    construct->require_subcommand(1);
    std::string c_out;
    construct->add_option("-o,--out", c_out, "output file (default stdout)");

    int c_h = 0;
    auto* c_sylv = construct->add_subcommand("sylvester", "OA(2^h, 2^h-1, 2, 2)");
    c_sylv->set_help_flag("--help", "print help");  // frees up --h
    c_sylv->add_option("--h", c_h)->required();

    int c_k = 0;
    auto* c_even = construct->add_subcommand("even-weight", "even-weight code OA(2^(k-1),k,2,k-1)");
    c_even->add_option("--k", c_k)->required();

    std::string c_in;
    int c_u = -1;
    auto* c_double = construct->add_subcommand("double", "strength 2u -> 2u+1 doubling");
    c_double->add_option("--in", c_in, "input OA file, or - for stdin")->required();
    c_double->add_option("--u", c_u, "half strength (default: floor(max_strength/2))");

    std::string c_sin;
    std::size_t c_col = 1;
    int c_sym = 0;
    auto* c_shorten = construct->add_subcommand("shorten", "keep rows with a symbol, drop column");
    c_shorten->add_option("--in", c_sin, "input OA file, or - for stdin")->required();
    c_shorten->add_option("--col", c_col, "1-based column (default 1)");
    c_shorten->add_option("--symbol", c_sym, "symbol to keep (default 0)");

    std::string c_gen;
    auto* c_dual = construct->add_subcommand("dual", "all words of the dual of a linear code");
    c_dual->add_option("--gen", c_gen, "generator matrix file (\"dim n\" header)")->required();

    construct->add_subcommand("nordstrom-robinson", "the (16,256) code as OA(256,16,2,5)");

    int c_m = 4;
    auto* c_kerdock = construct->add_subcommand("kerdock", "Kerdock code of length 2^m");
    c_kerdock->add_option("--m", c_m)->required();

    // search
    int s_k = 0, s_s = 2, s_t = 0;
    unsigned long long s_n = 0, s_max_n = 0, s_budget = 1'000'000'000ULL;
    unsigned s_workers = 0;
    bool s_simple = false;
    std::string s_out;
    auto* search = app.add_subcommand("search", "exhaustive existence/minimality search");
    search->add_option("--k", s_k)->required();
    search->add_option("--s", s_s);
    search->add_option("--t", s_t)->required();
    auto* opt_n = search->add_option("--n", s_n, "row count to decide");
    auto* opt_max = search->add_option("--max-n", s_max_n, "search minimum rows up to this N");
    opt_n->excludes(opt_max);
    search->add_flag("--simple", s_simple, "require distinct rows");
    search->add_option("--budget", s_budget, "node budget (default 1e9)");
    search->add_option("--workers", s_workers, "worker threads (default: hardware)");
    search->add_option("-o,--out", s_out, "write a found array here instead of stdout");

    // table
    int t_max_k = 0, t_max_t = 13;
    bool t_lp = false;
    auto* table = app.add_subcommand("table", "certified F*(k,2,t) intervals");
    table->add_option("--max-k", t_max_k)->required();
    table->add_option("--max-t", t_max_t);
    table->add_flag("--lp", t_lp, "sharpen lower bounds with the Delsarte LP");

    // ci
    std::string ci_file;
    bool ci_from_oa = false;
    auto* ci = app.add_subcommand("ci", "correlation-immunity order of a Boolean function");
    ci->add_option("file", ci_file, "truth-table file (or OA file with --from-oa)")->required();
    ci->add_flag("--from-oa", ci_from_oa, "treat input as a simple binary OA support");

    // weights
    std::string w_file;
    auto* weights = app.add_subcommand("weights", "weight enumerator of a binary array");
    weights->add_option("file", w_file, "OA text file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) return cmd_verify(v_file, v_t, v_max, as_json);
        if (*analyze) return cmd_analyze(a_file, a_u, as_json);
        if (*bound) return cmd_bound(b_k, b_s, b_t, b_lp, b_lift, as_json);
        if (*lp) return cmd_lp(l_k, l_t, as_json);
        if (*construct) {
            oatk::SymbolArray a = [&]() -> oatk::SymbolArray {
                if (*c_sylv) return oatk::sylvester_oa(c_h);
                if (*c_even) return oatk::even_weight_oa(c_k);
                if (*c_double) {
                    oatk::SymbolArray in = read_array(c_in);
                    int u = c_u >= 0 ? c_u : oatk::max_strength(in) / 2;
                    return oatk::double_strength(in, u);
                }
                if (*c_shorten)
                    return oatk::zero_shorten(read_array(c_sin), c_col,
                                              static_cast<oatk::Symbol>(c_sym));
                if (*c_dual) return oatk::dual_code_oa(oatk::read_generator_file(c_gen));
                if (*c_kerdock) return oatk::kerdock(c_m);
                return oatk::nordstrom_robinson();
            }();
            write_array(a, c_out);
            return 0;
        }
        if (*search)
            return cmd_search(s_k, s_s, s_t, s_n, s_max_n, s_simple, s_budget, s_workers, as_json,
                              s_out);
        if (*table) return cmd_table(t_max_k, t_max_t, t_lp, as_json);
        if (*ci) return cmd_ci(ci_file, ci_from_oa, as_json);
        if (*weights) return cmd_weights(w_file, as_json);
    } catch (const oatk::BudgetExceeded& e) {
        std::cerr << "oa: " << e.what() << "\n";
        return 3;
    } catch (const oatk::ParseError& e) {
        std::cerr << "oa: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "oa: " << e.what() << "\n";
        return 2;
    } catch (const oatk::VerificationError& e) {
        std::cerr << "oa: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "oa: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
