#ifndef TKC_DOMINATION_HPP
#define TKC_DOMINATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "detail/small_graph.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace tkc {

/// Neighborhood semantics of domination.
///
/// open_total(k): every vertex has at least k neighbors in S (total
/// k-domination; needs δ >= k). closed_tuple(k): every closed neighborhood
/// N[v] meets S in at least k vertices (k-tuple domination; needs
/// δ >= k-1). closed_tuple(2) is double domination.
struct CoalitionMode {
    enum class Neighborhood { open, closed };

    Neighborhood neighborhood = Neighborhood::open;
    int k = 2;

    static CoalitionMode open_total(int k) { return make(Neighborhood::open, k); }
    static CoalitionMode closed_tuple(int k) { return make(Neighborhood::closed, k); }
    static CoalitionMode double_domination() { return closed_tuple(2); }

    bool closed() const noexcept { return neighborhood == Neighborhood::closed; }

    std::size_t required_min_degree() const noexcept
    {
        return static_cast<std::size_t>(closed() ? k - 1 : k);
    }

    bool admissible(const Graph& g) const { return g.order() > 0 && min_degree(g) >= required_min_degree(); }

    void require_admissible(const Graph& g) const
    {
        if (g.order() == 0)
            throw inadmissible_mode("mode " + name() + " on the empty graph");
        const std::size_t delta = min_degree(g);
        if (delta < required_min_degree())
            throw inadmissible_mode("mode " + name() + " needs minimum degree "
                                    + std::to_string(required_min_degree()) + ", graph has "
                                    + std::to_string(delta));
    }

    /// "OpenTotal" or "ClosedTuple".
    std::string semantics() const { return closed() ? "ClosedTuple" : "OpenTotal"; }
    std::string name() const { return semantics() + "(" + std::to_string(k) + ")"; }

    friend bool operator==(const CoalitionMode&, const CoalitionMode&) = default;

private:
    static CoalitionMode make(Neighborhood nb, int k)
    {
        if (k < 1)
            throw parameter_error("domination parameter k must be positive");
        return CoalitionMode{nb, k};
    }
};

namespace detail {

/// Domination test without the admissibility check.
inline bool dominates(const Graph& g, const VertexSet& s, const CoalitionMode& mode)
{
    const auto k = static_cast<std::size_t>(mode.k);
    for (vertex v = 0; v < g.order(); ++v) {
        std::size_t hits = g.neighbors(v).intersection_size(s);
        if (mode.closed() && s.contains(v))
            ++hits;
        if (hits < k)
            return false;
    }
    return true;
}

inline void require_subset(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw parameter_error("vertex set universe " + std::to_string(s.universe())
                              + " does not match graph order " + std::to_string(g.order()));
}

} // namespace detail

/// Throws inadmissible_mode rather than answering false when δ(g) is too small.
inline bool is_dominating(const Graph& g, const VertexSet& s, const CoalitionMode& mode)
{
    detail::require_subset(g, s);
    mode.require_admissible(g);
    return detail::dominates(g, s, mode);
}

/// Greedy reduction to a minimal dominating subset. Candidates are tried in
/// descending index order and removed whenever the remainder still
/// dominates, until a full pass removes nothing.
inline VertexSet shrink_to_minimal(const Graph& g, VertexSet s, const CoalitionMode& mode)
{
    if (!is_dominating(g, s, mode))
        throw precondition_failed("shrink_to_minimal: input set is not dominating under " + mode.name());
    bool changed = true;
    while (changed) {
        changed = false;
        auto members = s.members();
        for (auto it = members.rbegin(); it != members.rend(); ++it) {
            s.erase(*it);
            if (detail::dominates(g, s, mode))
                changed = true;
            else
                s.insert(*it);
        }
    }
    return s;
}

struct DomaticPartition {
    std::vector<VertexSet> blocks;

    std::size_t size() const noexcept { return blocks.size(); }
};

struct SearchGuard {
    std::size_t max_order;
    bool force = false;

    void check(const Graph& g, const char* what) const
    {
        if (g.order() > max_order && !force)
            throw guard_exceeded(std::string(what) + ": n=" + std::to_string(g.order())
                                 + " exceeds guard " + std::to_string(max_order) + " (use force)");
    }
};

inline constexpr std::size_t domatic_guard_default = 16;

/// Size of a smallest dominating set (exhaustive over subsets by size).
inline std::size_t min_dominating_size(const Graph& g, const CoalitionMode& mode,
                                       SearchGuard guard = {domatic_guard_default})
{
    mode.require_admissible(g);
    guard.check(g, "min_dominating_size");
    const detail::SmallGraph sg(g, mode.closed(), mode.k);
    for (std::size_t size = 1; size <= sg.n; ++size) {
        // Gosper's hack over all size-subsets.
        detail::mask s = size == 64 ? ~detail::mask{0} : (detail::mask{1} << size) - 1;
        while (true) {
            if (sg.dominates(s))
                return size;
            const detail::mask c = s & (~s + 1);
            const detail::mask r = s + c;
            if (r == 0 || (r & ~sg.all) != 0)
                break;
            s = (((r ^ s) >> 2) / c) | r;
            if ((s & ~sg.all) != 0)
                break;
        }
    }
    return sg.n;
}

namespace detail {

class DomaticSearch {
public:
    DomaticSearch(const SmallGraph& sg, std::size_t blocks) : sg_(sg), c_(blocks), block_(blocks, 0) {}

    bool run()
    {
        unassigned_ = sg_.all;
        return assign(0, 0);
    }

    const std::vector<mask>& blocks() const noexcept { return block_; }

private:
    bool assign(std::size_t v, std::size_t opened)
    {
        if (v == sg_.n) {
            if (opened != c_)
                return false;
            for (mask b : block_)
                if (!sg_.dominates(b))
                    return false;
            return true;
        }
        const mask bit = mask{1} << v;
        unassigned_ &= ~bit;
        const std::size_t limit = std::min(opened + 1, c_);
        for (std::size_t b = 0; b < limit; ++b) {
            block_[b] |= bit;
            const std::size_t now_open = std::max(opened, b + 1);
            if (feasible(now_open) && assign(v + 1, now_open))
                return true;
            block_[b] &= ~bit;
        }
        unassigned_ |= bit;
        return false;
    }

    bool feasible(std::size_t opened) const
    {
        if (static_cast<std::size_t>(popcount(unassigned_)) < c_ - opened)
            return false;
        for (std::size_t b = 0; b < opened; ++b)
            if (!sg_.dominates(block_[b] | unassigned_))
                return false;
        return opened == c_ || sg_.dominates(unassigned_);
    }

    const SmallGraph& sg_;
    std::size_t c_;
    std::vector<mask> block_;
    mask unassigned_ = 0;
};

} // namespace detail

/// Partition of V into the maximum number of dominating blocks.
///
/// Tries cardinalities downward from floor(n / smallest dominating set).
/// The returned blocks are the first certificate in restricted-growth order
/// (vertex 0 in block 0, each vertex opens at most the next new block).
inline DomaticPartition max_domatic_partition(const Graph& g, const CoalitionMode& mode,
                                              SearchGuard guard = {domatic_guard_default})
{
    mode.require_admissible(g);
    require_connected(g);
    guard.check(g, "max_domatic_partition");
    const detail::SmallGraph sg(g, mode.closed(), mode.k);
    const std::size_t smallest = min_dominating_size(g, mode, {guard.max_order, true});
    for (std::size_t c = g.order() / smallest; c >= 1; --c) {
        detail::DomaticSearch search(sg, c);
        if (search.run()) {
            DomaticPartition out;
            for (detail::mask b : search.blocks())
                out.blocks.push_back(detail::from_mask(g.order(), b));
            return out;
        }
    }
    // Unreachable: V itself dominates when the mode is admissible.
    return DomaticPartition{{g.vertices()}};
}

} // namespace tkc

#endif
