#ifndef TKC_SCAN_HPP
#define TKC_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "solver.hpp"

namespace tkc {

/// Runs work(i) for i in [0, count) on up to `jobs` threads and calls
/// emit(i, result) on the calling thread in increasing i as soon as each
/// prefix is complete. The first exception thrown by work is rethrown after
/// the pool drains.
template <typename Work, typename Emit>
void ordered_parallel_map(std::size_t count, unsigned jobs, Work&& work, Emit&& emit)
{
    using Result = decltype(work(std::size_t{0}));
    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable ready;

    auto worker = [&]() {
        for (std::size_t i = next++; i < count; i = next++) {
            std::optional<Result> r;
            std::exception_ptr err;
            try {
                r.emplace(work(i));
            } catch (...) {
                err = std::current_exception();
            }
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(r);
                errors[i] = err;
            }
            ready.notify_all();
        }
    };

    // jobs <= 1 runs inline; otherwise `jobs` workers and this thread emits.
    std::vector<std::thread> pool;
    for (unsigned t = 0; jobs > 1 && t < jobs; ++t)
        pool.emplace_back(worker);

    std::exception_ptr first_error;
    if (pool.empty())
        worker();
    for (std::size_t i = 0; i < count; ++i) {
        std::optional<Result> r;
        {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return slots[i].has_value() || errors[i]; });
            r = std::move(slots[i]);
            slots[i].reset();
            if (errors[i] && !first_error)
                first_error = errors[i];
        }
        if (first_error) {
            next = count;
            break;
        }
        emit(i, std::move(*r));
    }
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

/// Which statement a scan checks against the exact value.
enum class ScanCheck {
    conjecture,   // ungated degree formula for TC_2 (conjectured, non-fatal)
    mixed_degree, // max{Δ, ⌊δ/2⌋(Δ−4)+δ} for TC_2
    gated_degree, // degree formula for TC_2 under Δ >= 4⌊δ/2⌋−2
    double_gated, // DC formula under Δ >= 4⌈δ/2⌉−3
};

/// Descriptive names; short numbered aliases are accepted too.
inline ScanCheck parse_scan_check(std::string_view s)
{
    if (s == "conjecture")
        return ScanCheck::conjecture;
    if (s == "mixed-degree" || s == "thm35")
        return ScanCheck::mixed_degree;
    if (s == "gated-degree" || s == "thm38")
        return ScanCheck::gated_degree;
    if (s == "double-gated" || s == "thm41")
        return ScanCheck::double_gated;
    throw parameter_error("unknown scan check '" + std::string(s) + "'");
}

inline const char* to_string(ScanCheck c)
{
    switch (c) {
    case ScanCheck::conjecture: return "conjecture";
    case ScanCheck::mixed_degree: return "mixed-degree";
    case ScanCheck::gated_degree: return "gated-degree";
    case ScanCheck::double_gated: return "double-gated";
    }
    return "?";
}

/// A violated conjecture is a finding; a violated theorem fails the run.
inline bool is_proven(ScanCheck c) { return c != ScanCheck::conjecture; }

enum class Verdict { Satisfies, Violates, Skipped };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Satisfies: return "Satisfies";
    case Verdict::Violates: return "Violates";
    case Verdict::Skipped: return "Skipped";
    }
    return "?";
}

struct ScanRecord {
    std::string graph6;
    std::size_t n = 0;
    std::size_t delta = 0;
    std::size_t Delta = 0;
    bound_value value_lower = 0; // equal bounds mean an exact value
    bound_value value_upper = 0;
    bool has_value = false;
    bound_value bound = 0;
    bool has_bound = false;
    Verdict verdict = Verdict::Skipped;
    std::string reason;

    bool exact() const { return has_value && value_lower == value_upper; }
};

struct ScanOptions {
    ScanCheck check = ScanCheck::conjecture;
    std::size_t guard = search_guard_default;
    bool force = false;
};

inline CoalitionMode scan_mode(ScanCheck c)
{
    return c == ScanCheck::double_gated ? CoalitionMode::double_domination() : CoalitionMode::open_total(2);
}

/// Exact value for theorem checks: no bound caps, no sandwich shortcut.
inline SolveResult solve_uncapped(const Graph& g, const CoalitionMode& mode, std::size_t guard = search_guard_default,
                                  bool force = false)
{
    return solve_exact(g, mode, SolveOptions{guard, force, false, false});
}

inline ScanRecord scan_graph(const Graph& g, const ScanOptions& opt)
{
    ScanRecord rec;
    rec.graph6 = write_graph6(g);
    rec.n = g.order();
    auto skip = [&](std::string why) {
        rec.verdict = Verdict::Skipped;
        rec.reason = std::move(why);
        return rec;
    };
    if (g.order() == 0)
        return skip("empty");
    const DegreeStats ds = degree_stats(g);
    rec.delta = ds.min_degree;
    rec.Delta = ds.max_degree;
    if (!is_connected(g))
        return skip("disconnected");

    const CoalitionMode mode = scan_mode(opt.check);
    if (!mode.admissible(g))
        return skip("min degree below " + std::to_string(mode.required_min_degree()));

    const auto delta = static_cast<bound_value>(ds.min_degree);
    const auto Delta = static_cast<bound_value>(ds.max_degree);
    std::string checked_name;
    switch (opt.check) {
    case ScanCheck::conjecture:
        rec.bound = degree_formula_tc2(delta, Delta);
        checked_name = bound_names::conjectured_upper;
        break;
    case ScanCheck::mixed_degree:
        rec.bound = mixed_degree_tc2(delta, Delta);
        checked_name = bound_names::mixed_degree_upper;
        break;
    case ScanCheck::gated_degree:
        if (!degree_formula_tc2_gate(delta, Delta))
            return skip("gate Delta >= 4*floor(delta/2)-2 fails");
        rec.bound = degree_formula_tc2(delta, Delta);
        checked_name = bound_names::gated_degree_upper;
        break;
    case ScanCheck::double_gated:
        if (!degree_formula_dc_gate(delta, Delta))
            return skip("gate Delta >= 4*ceil(delta/2)-3 fails");
        rec.bound = degree_formula_dc(delta, Delta);
        checked_name = bound_names::double_gated_upper;
        break;
    }
    rec.has_bound = true;

    if (g.order() > opt.guard && !opt.force) {
        // Interval from the other proven bounds only.
        auto report = bound_report(g, mode);
        std::erase_if(report, [&](const BoundEntry& e) { return e.name == checked_name; });
        const Certificate c = certify(std::nullopt, report);
        rec.value_lower = c.lower;
        rec.value_upper = c.upper;
        rec.has_value = true;
        return skip("guard: n > " + std::to_string(opt.guard));
    }

    const SolveResult exact = solve_uncapped(g, mode, opt.guard, opt.force);
    rec.value_lower = rec.value_upper = static_cast<bound_value>(exact.value);
    rec.has_value = true;
    rec.verdict = rec.value_lower > rec.bound ? Verdict::Violates : Verdict::Satisfies;
    return rec;
}

inline ScanRecord scan_line(std::string_view line, const ScanOptions& opt)
{
    try {
        return scan_graph(parse_graph6(line), opt);
    } catch (const parse_error& e) {
        ScanRecord rec;
        rec.graph6 = std::string(line);
        rec.verdict = Verdict::Skipped;
        rec.reason = std::string("parse: ") + e.what();
        return rec;
    }
}

struct ScanSummary {
    std::size_t total = 0;
    std::size_t satisfies = 0;
    std::size_t violates = 0;
    std::size_t skipped = 0;
    bool fatal = false; // a proven statement was violated

    void add(const ScanRecord& r, ScanCheck check)
    {
        ++total;
        switch (r.verdict) {
        case Verdict::Satisfies: ++satisfies; break;
        case Verdict::Violates:
            ++violates;
            fatal = fatal || is_proven(check);
            break;
        case Verdict::Skipped: ++skipped; break;
        }
    }
};

/// Scans lines in order, emitting each record through emit(record).
template <typename Emit>
ScanSummary scan_lines(const std::vector<std::string>& lines, const ScanOptions& opt, unsigned jobs, Emit&& emit)
{
    ScanSummary summary;
    ordered_parallel_map(
        lines.size(), jobs, [&](std::size_t i) { return scan_line(lines[i], opt); },
        [&](std::size_t, ScanRecord r) {
            summary.add(r, opt.check);
            emit(r);
        });
    return summary;
}

struct CatalogRecord {
    std::string graph6;
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t delta = 0;
    std::size_t Delta = 0;
    std::optional<std::size_t> tc2;
    std::string skipped; // reason, empty when classified
};

/// TC_2 of a connected graph with 2 <= δ and Δ <= 3. Anything outside
/// {2, 3} is impossible for such graphs and aborts with certification_failure.
inline CatalogRecord catalog_graph(const Graph& g, std::size_t guard = search_guard_default, bool force = false)
{
    CatalogRecord rec;
    rec.graph6 = write_graph6(g);
    rec.n = g.order();
    rec.edges = g.size();
    if (g.order() == 0) {
        rec.skipped = "empty";
        return rec;
    }
    const DegreeStats ds = degree_stats(g);
    rec.delta = ds.min_degree;
    rec.Delta = ds.max_degree;
    if (!is_connected(g))
        rec.skipped = "disconnected";
    else if (ds.min_degree < 2)
        rec.skipped = "min degree below 2";
    else if (ds.max_degree > 3)
        rec.skipped = "max degree above 3";
    else if (g.order() > guard && !force)
        rec.skipped = "guard: n > " + std::to_string(guard);
    if (!rec.skipped.empty())
        return rec;

    const std::size_t v = solve_uncapped(g, CoalitionMode::open_total(2), guard, force).value;
    if (v != 2 && v != 3)
        throw certification_failure("subcubic graph " + rec.graph6 + " has TC_2 = " + std::to_string(v)
                                    + ", outside {2,3}");
    rec.tc2 = v;
    return rec;
}

inline CatalogRecord catalog_line(std::string_view line, std::size_t guard = search_guard_default, bool force = false)
{
    try {
        return catalog_graph(parse_graph6(line), guard, force);
    } catch (const parse_error& e) {
        CatalogRecord rec;
        rec.graph6 = std::string(line);
        rec.skipped = std::string("parse: ") + e.what();
        return rec;
    }
}

} // namespace tkc

#endif
