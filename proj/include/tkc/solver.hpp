#ifndef TKC_SOLVER_HPP
#define TKC_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "coalition.hpp"
#include "constructions.hpp"
#include "detail/small_graph.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "set_partitions.hpp"

namespace tkc {

inline constexpr std::size_t search_guard_default = 20;
inline constexpr std::size_t oracle_guard_default = 12;

struct SolveOptions {
    std::size_t guard = search_guard_default;
    bool force = false;
    /// Cap the search with certified upper bounds. When false the search
    /// starts at c = n, which is what theorem checks need.
    bool use_bounds = true;
    /// Skip the search when the constructive witness meets the upper bound.
    bool allow_sandwich = true;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_dominating_block = 0;
    std::uint64_t pruned_too_few_vertices = 0;
    std::uint64_t pruned_partner_unreachable = 0;
    double millis = 0;

    std::uint64_t prunes() const
    {
        return pruned_dominating_block + pruned_too_few_vertices + pruned_partner_unreachable;
    }
};

enum class CertifiedBy { Search, BoundSandwich };

inline const char* to_string(CertifiedBy c) { return c == CertifiedBy::Search ? "Search" : "BoundSandwich"; }

struct SolveResult {
    std::size_t value = 0;
    Partition witness;
    SolveStats stats;
    CertifiedBy certified_by = CertifiedBy::Search;
};

namespace detail {

// Depth-first assignment of vertices to c blocks.
//
// Vertices are taken in descending-degree order; a vertex may join an open
// block or open the next one (restricted growth), so each partition up to
// block renaming is visited once. Prunes: a block that already dominates
// (domination is monotone and a dominating block has no partner); fewer
// unassigned vertices than unopened blocks; a block with no possible
// partner even if every unassigned vertex joined the pair.
class FeasibilitySearch {
public:
    FeasibilitySearch(const SmallGraph& sg, std::vector<vertex> order, std::size_t c, SolveStats& stats)
        : sg_(sg), order_(std::move(order)), c_(c), block_(c, 0), stats_(stats)
    {
    }

    bool run()
    {
        unassigned_ = sg_.all;
        return assign(0, 0);
    }

    const std::vector<mask>& blocks() const noexcept { return block_; }

private:
    bool assign(std::size_t pos, std::size_t opened)
    {
        ++stats_.nodes;
        if (pos == sg_.n)
            return opened == c_ && all_partnered();
        const mask bit = mask{1} << order_[pos];
        unassigned_ &= ~bit;
        const std::size_t limit = std::min(opened + 1, c_);
        const std::size_t left = sg_.n - pos - 1;
        for (std::size_t b = 0; b < limit; ++b) {
            block_[b] |= bit;
            const std::size_t now_open = std::max(opened, b + 1);
            if (sg_.dominates(block_[b]))
                ++stats_.pruned_dominating_block;
            else if (left < c_ - now_open)
                ++stats_.pruned_too_few_vertices;
            else if (!partners_reachable(now_open))
                ++stats_.pruned_partner_unreachable;
            else if (assign(pos + 1, now_open))
                return true;
            block_[b] &= ~bit;
        }
        unassigned_ |= bit;
        return false;
    }

    bool partners_reachable(std::size_t opened) const
    {
        for (std::size_t i = 0; i < opened; ++i) {
            const mask grown = block_[i] | unassigned_;
            bool ok = opened < c_ && sg_.dominates(grown);
            for (std::size_t j = 0; j < opened && !ok; ++j)
                ok = j != i && sg_.dominates(grown | block_[j]);
            if (!ok)
                return false;
        }
        return true;
    }

    bool all_partnered() const
    {
        for (std::size_t i = 0; i < c_; ++i) {
            bool ok = false;
            for (std::size_t j = 0; j < c_ && !ok; ++j)
                ok = j != i && sg_.dominates(block_[i] | block_[j]);
            if (!ok)
                return false;
        }
        return true;
    }

    const SmallGraph& sg_;
    std::vector<vertex> order_;
    std::size_t c_;
    std::vector<mask> block_;
    mask unassigned_ = 0;
    SolveStats& stats_;
};

inline std::vector<vertex> branch_order(const Graph& g)
{
    std::vector<vertex> order(g.order());
    std::iota(order.begin(), order.end(), vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

inline void check_solvable(const Graph& g, const CoalitionMode& mode, std::size_t guard, bool force, const char* who)
{
    mode.require_admissible(g);
    require_connected(g);
    SearchGuard{guard, force}.check(g, who);
}

inline std::optional<Partition> feasible_unchecked(const Graph& g, const CoalitionMode& mode, std::size_t c,
                                                   SolveStats& stats)
{
    const SmallGraph sg(g, mode.closed(), mode.k);
    FeasibilitySearch search(sg, branch_order(g), c, stats);
    if (!search.run())
        return std::nullopt;
    Partition p;
    for (mask b : search.blocks())
        p.blocks.push_back(from_mask(g.order(), b));
    return p;
}

} // namespace detail

/// A coalition partition with exactly c blocks, or nullopt if none exists.
/// Deterministic: the first certificate in the fixed branch order.
inline std::optional<Partition> feasible_c(const Graph& g, const CoalitionMode& mode, std::size_t c,
                                           const SolveOptions& opt = {}, SolveStats* stats = nullptr)
{
    detail::check_solvable(g, mode, opt.guard, opt.force, "feasible_c");
    if (c < 2 || c > g.order())
        throw parameter_error("feasible_c: block count " + std::to_string(c) + " outside [2, n]");
    SolveStats local;
    return detail::feasible_unchecked(g, mode, c, stats ? *stats : local);
}

/// Exact TC_k(g) (open mode) or DC(g) (closed mode, k = 2) with a witness.
///
/// Tries block counts downward from the certified upper bound without
/// assuming that feasibility is monotone in the count; the first hit is the
/// maximum. In open mode the minimum-degree construction supplies a
/// verified lower witness, and the search stops once it is reached.
inline SolveResult solve_exact(const Graph& g, const CoalitionMode& mode, const SolveOptions& opt = {})
{
    const auto start = std::chrono::steady_clock::now();
    detail::check_solvable(g, mode, opt.guard, opt.force, "solve_exact");

    SolveResult result;
    auto finish = [&](CertifiedBy by) {
        result.certified_by = by;
        result.value = result.witness.size();
        result.stats.millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
    };

    std::optional<Partition> lower_witness;
    if (!mode.closed())
        lower_witness = min_degree_partition(g, mode.k);

    std::size_t upper = g.order();
    if (opt.use_bounds && (!mode.closed() || mode.k == 2)) {
        const auto report = bound_report(g, mode);
        const Certificate cert =
            certify(lower_witness ? std::optional<std::size_t>(lower_witness->size()) : std::nullopt, report);
        upper = static_cast<std::size_t>(std::min<bound_value>(cert.upper, static_cast<bound_value>(g.order())));
        if (opt.allow_sandwich && lower_witness && lower_witness->size() == upper) {
            result.witness = std::move(*lower_witness);
            return finish(CertifiedBy::BoundSandwich);
        }
    }

    const std::size_t floor_c = lower_witness ? lower_witness->size() + 1 : 2;
    for (std::size_t c = upper; c >= floor_c && c >= 2; --c) {
        if (auto p = detail::feasible_unchecked(g, mode, c, result.stats)) {
            result.witness = std::move(*p);
            return finish(CertifiedBy::Search);
        }
    }
    if (!lower_witness)
        throw certification_failure("solve_exact: no coalition partition exists under " + mode.name());
    result.witness = std::move(*lower_witness);
    return finish(CertifiedBy::Search);
}

/// Maximum coalition-partition cardinality by checking every set partition
/// of V(g) with verify_partition. Independent of the branch-and-bound path.
inline std::size_t brute_force_oracle(const Graph& g, const CoalitionMode& mode, std::size_t guard = oracle_guard_default,
                                      bool force = false)
{
    mode.require_admissible(g);
    require_connected(g);
    SearchGuard{guard, force}.check(g, "brute_force_oracle");
    const std::size_t n = g.order();
    std::size_t best = 0;
    for_each_set_partition(n, [&](std::span<const std::size_t> rgs, std::size_t blocks) {
        if (blocks <= best || blocks < 2)
            return;
        Partition p;
        p.blocks.assign(blocks, VertexSet(n));
        for (vertex v = 0; v < n; ++v)
            p.blocks[rgs[v]].insert(v);
        if (verify_partition(g, p, mode).valid)
            best = blocks;
    });
    if (best == 0)
        throw certification_failure("brute_force_oracle: no coalition partition exists under " + mode.name());
    return best;
}

} // namespace tkc

#endif
