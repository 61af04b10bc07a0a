#ifndef TKC_COALITION_HPP
#define TKC_COALITION_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "domination.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace tkc {

/// Ordered list of vertex blocks. Validity (disjoint, nonempty, covering)
/// is checked by verify_partition, not enforced by the type.
struct Partition {
    std::vector<VertexSet> blocks;

    std::size_t size() const noexcept { return blocks.size(); }

    static Partition from_lists(std::size_t n, const std::vector<std::vector<vertex>>& lists)
    {
        Partition p;
        for (const auto& l : lists)
            p.blocks.emplace_back(n, std::span<const vertex>(l));
        return p;
    }

    std::vector<std::vector<vertex>> to_lists() const
    {
        std::vector<std::vector<vertex>> out;
        for (const auto& b : blocks)
            out.push_back(b.members());
        return out;
    }

    /// Same blocks sorted by least element; empty blocks last.
    Partition canonical() const
    {
        Partition p = *this;
        std::stable_sort(p.blocks.begin(), p.blocks.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
        return p;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// A and B are disjoint, neither dominates, and A ∪ B dominates.
inline bool is_coalition(const Graph& g, const VertexSet& a, const VertexSet& b, const CoalitionMode& mode)
{
    detail::require_subset(g, a);
    detail::require_subset(g, b);
    if (a.empty() || b.empty())
        throw precondition_failed("is_coalition: empty operand");
    if (!a.disjoint(b))
        throw precondition_failed("is_coalition: operands overlap");
    mode.require_admissible(g);
    return !detail::dominates(g, a, mode) && !detail::dominates(g, b, mode)
        && detail::dominates(g, a | b, mode);
}

struct Violation {
    enum class Kind { Overlap, NotCovering, EmptyBlock, BlockIsDominating, NoPartner };

    Kind kind;
    std::vector<std::size_t> blocks;
    std::vector<vertex> vertices; // uncovered vertices for NotCovering

    friend bool operator==(const Violation&, const Violation&) = default;
};

inline const char* to_string(Violation::Kind k)
{
    switch (k) {
    case Violation::Kind::Overlap: return "Overlap";
    case Violation::Kind::NotCovering: return "NotCovering";
    case Violation::Kind::EmptyBlock: return "EmptyBlock";
    case Violation::Kind::BlockIsDominating: return "BlockIsDominating";
    case Violation::Kind::NoPartner: return "NoPartner";
    }
    return "?";
}

struct VerificationReport {
    bool valid = false;
    std::vector<Violation> violations;
    std::vector<std::vector<bool>> partner; // symmetric, false on the diagonal

    std::size_t partner_count(std::size_t block) const
    {
        return static_cast<std::size_t>(std::count(partner.at(block).begin(), partner.at(block).end(), true));
    }

    std::vector<std::size_t> partners_of(std::size_t block) const
    {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < partner.at(block).size(); ++j)
            if (partner[block][j])
                out.push_back(j);
        return out;
    }
};

/// Checks that p is a coalition partition of g under mode, reporting every
/// violation in block-index order.
inline VerificationReport verify_partition(const Graph& g, const Partition& p, const CoalitionMode& mode)
{
    mode.require_admissible(g);
    require_connected(g);
    for (const auto& b : p.blocks)
        detail::require_subset(g, b);

    const std::size_t m = p.size();
    VerificationReport r;
    r.partner.assign(m, std::vector<bool>(m, false));

    std::vector<bool> dominating(m, false);
    VertexSet covered(g.order());
    for (std::size_t i = 0; i < m; ++i) {
        if (p.blocks[i].empty())
            r.violations.push_back({Violation::Kind::EmptyBlock, {i}, {}});
        covered |= p.blocks[i];
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!p.blocks[i].disjoint(p.blocks[j]))
                r.violations.push_back({Violation::Kind::Overlap, {i, j}, {}});
    if (covered.size() != g.order())
        r.violations.push_back({Violation::Kind::NotCovering, {}, covered.complement().members()});

    for (std::size_t i = 0; i < m; ++i) {
        dominating[i] = !p.blocks[i].empty() && detail::dominates(g, p.blocks[i], mode);
        if (dominating[i])
            r.violations.push_back({Violation::Kind::BlockIsDominating, {i}, {}});
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& a = p.blocks[i];
            const auto& b = p.blocks[j];
            if (a.empty() || b.empty() || dominating[i] || dominating[j] || !a.disjoint(b))
                continue;
            if (detail::dominates(g, a | b, mode))
                r.partner[i][j] = r.partner[j][i] = true;
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!p.blocks[i].empty() && r.partner_count(i) == 0)
            r.violations.push_back({Violation::Kind::NoPartner, {i}, {}});

    r.valid = r.violations.empty();
    return r;
}

inline constexpr std::size_t vertex_cover_guard_default = 40;

namespace detail {

class VertexCoverSearch {
public:
    explicit VertexCoverSearch(const Graph& h) : h_(h), best_(h.order()) {}

    std::size_t run()
    {
        VertexSet removed(h_.order());
        branch(removed, 0);
        return best_;
    }

private:
    // Size of a greedy maximal matching among edges not touching `removed`.
    std::size_t matching_bound(const VertexSet& removed) const
    {
        VertexSet used = removed;
        std::size_t size = 0;
        for (vertex u = 0; u < h_.order(); ++u) {
            if (used.contains(u))
                continue;
            VertexSet free = h_.neighbors(u) - used;
            if (!free.empty()) {
                used.insert(u);
                used.insert(free.first());
                ++size;
            }
        }
        return size;
    }

    void branch(VertexSet& removed, std::size_t taken)
    {
        if (taken + matching_bound(removed) >= best_)
            return;
        vertex u = h_.order();
        vertex v = h_.order();
        for (vertex x = 0; x < h_.order() && u == h_.order(); ++x) {
            if (removed.contains(x))
                continue;
            VertexSet live = h_.neighbors(x) - removed;
            if (!live.empty()) {
                u = x;
                v = live.first();
            }
        }
        if (u == h_.order()) {
            best_ = taken;
            return;
        }
        for (vertex pick : {u, v}) {
            removed.insert(pick);
            branch(removed, taken + 1);
            removed.erase(pick);
        }
    }

    const Graph& h_;
    std::size_t best_;
};

} // namespace detail

/// Exact minimum vertex cover by branching on an uncovered edge (one
/// endpoint or the other), pruned with a maximal-matching lower bound.
inline std::size_t vertex_cover_number(const Graph& h, SearchGuard guard = {vertex_cover_guard_default})
{
    guard.check(h, "vertex_cover_number");
    return detail::VertexCoverSearch(h).run();
}

/// Graph on block indices with an edge for every coalition pair.
struct CoalitionGraph {
    Graph base;
    std::size_t max_degree = 0;
    std::size_t vertex_cover_number = 0;

    /// Gallai: α = |blocks| − β.
    std::size_t independence_number() const { return base.order() - vertex_cover_number; }
};

inline CoalitionGraph coalition_graph(const Graph& g, const Partition& p, const CoalitionMode& mode,
                                      SearchGuard guard = {vertex_cover_guard_default})
{
    const VerificationReport r = verify_partition(g, p, mode);
    if (!r.valid)
        throw precondition_failed("coalition_graph: partition is not a coalition partition under " + mode.name());
    GraphBuilder b(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (r.partner[i][j])
                b.add_edge(i, j);
    CoalitionGraph cg;
    cg.base = std::move(b).build();
    cg.max_degree = cg.base.order() ? max_degree(cg.base) : 0;
    cg.vertex_cover_number = vertex_cover_number(cg.base, guard);
    return cg;
}

/// Structural facts every coalition partition must satisfy.
///
/// Partner counts are at most Δ(G) − k + 1 (open mode). For open k = 2 the
/// coalition graph additionally has maximum degree at most Δ(G) − 1 and
/// vertex cover number at most δ(G) − 1.
struct PartitionInvariants {
    bool partner_bound_checked = false;
    std::size_t max_partner_count = 0;
    std::size_t partner_bound = 0;

    bool coalition_graph_checked = false;
    std::size_t coalition_max_degree = 0;
    std::size_t coalition_cover = 0;
    std::size_t degree_bound = 0;
    std::size_t cover_bound = 0;

    bool partner_bound_holds() const { return !partner_bound_checked || max_partner_count <= partner_bound; }
    bool degree_bound_holds() const { return !coalition_graph_checked || coalition_max_degree <= degree_bound; }
    bool cover_bound_holds() const { return !coalition_graph_checked || coalition_cover <= cover_bound; }
    bool hold() const { return partner_bound_holds() && degree_bound_holds() && cover_bound_holds(); }
};

inline PartitionInvariants check_partition_invariants(const Graph& g, const Partition& p, const CoalitionMode& mode,
                                                      SearchGuard guard = {vertex_cover_guard_default})
{
    const VerificationReport r = verify_partition(g, p, mode);
    if (!r.valid)
        throw precondition_failed("check_partition_invariants: partition does not verify");
    const DegreeStats ds = degree_stats(g);
    PartitionInvariants inv;
    if (!mode.closed()) {
        inv.partner_bound_checked = true;
        inv.partner_bound = ds.max_degree + 1 - static_cast<std::size_t>(mode.k);
        for (std::size_t i = 0; i < p.size(); ++i)
            inv.max_partner_count = std::max(inv.max_partner_count, r.partner_count(i));
    }
    if (!mode.closed() && mode.k == 2) {
        const CoalitionGraph cg = coalition_graph(g, p, mode, guard);
        inv.coalition_graph_checked = true;
        inv.coalition_max_degree = cg.max_degree;
        inv.coalition_cover = cg.vertex_cover_number;
        inv.degree_bound = ds.max_degree - 1;
        inv.cover_bound = ds.min_degree - 1;
    }
    return inv;
}

} // namespace tkc

#endif
