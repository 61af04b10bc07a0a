#ifndef TKC_DETAIL_SMALL_GRAPH_HPP
#define TKC_DETAIL_SMALL_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "../error.hpp"
#include "../graph.hpp"
#include "../vertex_set.hpp"

namespace tkc::detail {

using mask = std::uint64_t;

inline constexpr std::size_t small_graph_limit = 64;

inline int popcount(mask m) noexcept { return std::popcount(m); }

/// Single-word view of a graph of order <= 64, with the counting
/// neighborhoods of a domination mode already folded in.
struct SmallGraph {
    std::size_t n = 0;
    std::vector<mask> rows; // N(v) or N[v]
    int k = 0;
    mask all = 0;

    SmallGraph(const Graph& g, bool closed, int k_) : n(g.order()), rows(g.order()), k(k_)
    {
        if (n > small_graph_limit)
            throw guard_exceeded("exhaustive search supports at most 64 vertices");
        all = n == 64 ? ~mask{0} : ((mask{1} << n) - 1);
        for (vertex v = 0; v < n; ++v) {
            mask m = g.neighbors(v).words().empty() ? 0 : g.neighbors(v).words()[0];
            if (closed)
                m |= mask{1} << v;
            rows[v] = m;
        }
    }

    bool dominates(mask s) const noexcept
    {
        for (std::size_t v = 0; v < n; ++v)
            if (popcount(rows[v] & s) < k)
                return false;
        return true;
    }
};

inline mask to_mask(const VertexSet& s) { return s.words().empty() ? 0 : s.words()[0]; }

inline VertexSet from_mask(std::size_t n, mask m)
{
    VertexSet s(n);
    while (m) {
        s.insert(static_cast<vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return s;
}

} // namespace tkc::detail

#endif
