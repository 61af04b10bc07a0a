#ifndef TKC_CONSTRUCTIONS_HPP
#define TKC_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coalition.hpp"
#include "domination.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace tkc {

/// A graph with a coalition partition that verified at construction time.
struct CertifiedInstance {
    Graph graph;
    Partition partition;
    CoalitionMode mode;
    std::size_t claimed_value = 0;
    std::string provenance;
};

/// Verifies the witness and its size; throws certification_failure otherwise.
inline CertifiedInstance make_certified(Graph g, Partition p, CoalitionMode mode, std::size_t claimed,
                                        std::string provenance)
{
    const VerificationReport r = verify_partition(g, p, mode);
    if (!r.valid)
        throw certification_failure(provenance + ": witness partition does not verify under " + mode.name());
    if (p.size() != claimed)
        throw certification_failure(provenance + ": witness has " + std::to_string(p.size())
                                    + " blocks, claimed " + std::to_string(claimed));
    return CertifiedInstance{std::move(g), std::move(p), mode, claimed, std::move(provenance)};
}

namespace detail {

/// Alternating split of the sorted members: even positions, odd positions.
inline std::pair<VertexSet, VertexSet> alternating_split(const VertexSet& s)
{
    if (s.size() < 2)
        throw precondition_failed("a minimal dominating block with fewer than two vertices cannot be split");
    VertexSet a(s.universe());
    VertexSet b(s.universe());
    std::size_t i = 0;
    s.for_each([&](vertex v) { (i++ % 2 == 0 ? a : b).insert(v); });
    return {std::move(a), std::move(b)};
}

inline void require_verified(const Graph& g, const Partition& p, const CoalitionMode& mode, const char* who)
{
    if (!verify_partition(g, p, mode).valid)
        throw certification_failure(std::string(who) + ": produced partition does not verify");
}

} // namespace detail

/// Coalition partition with at least twice as many blocks as a maximum
/// domatic partition.
///
/// All but the last domatic block are shrunk to minimal dominating sets
/// (their leftovers move to the last block) and split in two. If the last
/// block is itself minimal it is split the same way. Otherwise it is shrunk
/// to a minimal set M with residue R: when R is a partner of one half of M
/// the result keeps both halves and R; failing that, R is merged into the
/// first half.
inline Partition partition_from_domatic(const Graph& g, const CoalitionMode& mode,
                                        SearchGuard guard = {domatic_guard_default})
{
    const DomaticPartition domatic = max_domatic_partition(g, mode, guard);
    Partition out;
    VertexSet last = domatic.blocks.back();
    for (std::size_t i = 0; i + 1 < domatic.size(); ++i) {
        VertexSet minimal = shrink_to_minimal(g, domatic.blocks[i], mode);
        last |= domatic.blocks[i] - minimal;
        auto [a, b] = detail::alternating_split(minimal);
        out.blocks.push_back(std::move(a));
        out.blocks.push_back(std::move(b));
    }

    VertexSet minimal = shrink_to_minimal(g, last, mode);
    if (minimal == last) {
        auto [a, b] = detail::alternating_split(minimal);
        out.blocks.push_back(std::move(a));
        out.blocks.push_back(std::move(b));
    } else {
        VertexSet residue = last - minimal;
        auto [a, b] = detail::alternating_split(minimal);
        if (is_coalition(g, residue, a, mode) || is_coalition(g, residue, b, mode)) {
            out.blocks.push_back(std::move(a));
            out.blocks.push_back(std::move(b));
            out.blocks.push_back(std::move(residue));
        } else {
            out.blocks.push_back(a | residue);
            out.blocks.push_back(std::move(b));
        }
    }
    detail::require_verified(g, out, mode, "partition_from_domatic");
    return out;
}

/// Singletons on the first δ−k+1 neighbors (ascending) of the
/// lowest-numbered minimum-degree vertex, followed by the complement block.
/// Always δ−k+2 blocks.
inline Partition min_degree_partition(const Graph& g, int k)
{
    const CoalitionMode mode = CoalitionMode::open_total(k);
    mode.require_admissible(g);
    require_connected(g);
    const DegreeStats ds = degree_stats(g);
    const auto pivot = static_cast<vertex>(
        std::find(ds.sequence.begin(), ds.sequence.end(), ds.min_degree) - ds.sequence.begin());
    const std::size_t singles = ds.min_degree - static_cast<std::size_t>(k) + 1;

    Partition out;
    VertexSet rest = g.vertices();
    const auto nbrs = g.neighbors(pivot).members();
    for (std::size_t i = 0; i < singles; ++i) {
        out.blocks.emplace_back(g.order(), std::initializer_list<vertex>{nbrs[i]});
        rest.erase(nbrs[i]);
    }
    out.blocks.push_back(std::move(rest));
    detail::require_verified(g, out, mode, "min_degree_partition");
    return out;
}

/// Number of vertices adjacent to every other vertex.
inline std::size_t universal_clique_count(const Graph& g)
{
    if (g.order() == 0)
        throw precondition_failed("universal_clique_count of the empty graph");
    std::size_t c = 0;
    for (vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) + 1 == g.order())
            ++c;
    return c;
}

namespace detail {

// Shared skeleton of both extremal families: `groups` stars K_{1,leaves}
// (centers y_i, leaves x_{i,j}) linked by the alternating chain
// x_{i,1}x_{i+1,1} (odd i) / x_{i,2}x_{i+1,2} (even i), with a gadget block
// of `gadget` vertices per leaf and per center.
//
// Numbering: all x_{i,j} (i-major), all y_i, leaf gadgets B_{i,j}, center
// gadgets B_i.
struct StarChainLayout {
    std::size_t groups;
    std::size_t leaves;
    std::size_t gadget;

    std::size_t order() const { return groups * leaves + groups + (groups * leaves + groups) * gadget; }
    vertex x(std::size_t i, std::size_t j) const { return i * leaves + j; }
    vertex y(std::size_t i) const { return groups * leaves + i; }
    vertex leaf_gadget(std::size_t i, std::size_t j) const
    {
        return groups * leaves + groups + (i * leaves + j) * gadget;
    }
    vertex center_gadget(std::size_t i) const
    {
        return groups * leaves + groups + groups * leaves * gadget + i * gadget;
    }

    void add_skeleton(GraphBuilder& b) const
    {
        for (std::size_t i = 0; i < groups; ++i)
            for (std::size_t j = 0; j < leaves; ++j)
                b.add_edge(y(i), x(i, j));
        for (std::size_t i = 1; i < groups; ++i) {
            const std::size_t j = (i % 2 == 1) ? 0 : 1;
            b.add_edge(x(i - 1, j), x(i, j));
        }
    }

    /// Blocks V_1..V_groups followed by the singletons {x_{i,j}}.
    Partition assemble(std::vector<VertexSet> owner_blocks) const
    {
        Partition p;
        p.blocks = std::move(owner_blocks);
        for (std::size_t i = 0; i < groups; ++i)
            for (std::size_t j = 0; j < leaves; ++j)
                p.blocks.emplace_back(order(), std::initializer_list<vertex>{x(i, j)});
        return p;
    }
};

// Block index of position q within a group of size d whose leftover slot
// (the last one) belongs to `owner`; slot `owner` takes the default of the
// last slot instead.
inline std::size_t swapped_slot(std::size_t q, std::size_t d, std::size_t owner)
{
    if (q == d - 1)
        return owner;
    if (q == owner)
        return d - 1;
    return q;
}

} // namespace detail

/// G(d, ℓ): witness of size d(ℓ+1) for open total 2-coalition.
///
/// Each gadget is K_{d,d,d} with parts P1, P2, P3; the attached vertex sees
/// S = P1 ∪ (P2 minus its last vertex). The j-th vertex of every part goes
/// to V_j, except that the last vertex of P2 goes to the gadget owner's
/// block V_i and the i-th vertex of P2 takes its place in V_d.
inline CertifiedInstance build_extremal_tc(std::size_t d, std::size_t l)
{
    if (d < 2)
        throw parameter_error("G(d,l) requires d >= 2");
    if (l < 2 * d - 1)
        throw parameter_error("G(d,l) requires l >= 2d-1");

    const detail::StarChainLayout lay{d, l, 3 * d};
    GraphBuilder b(lay.order());
    lay.add_skeleton(b);

    std::vector<VertexSet> owner(d, VertexSet(lay.order()));
    auto gadget = [&](vertex base, vertex attach, std::size_t own) {
        std::vector<std::vector<vertex>> parts(3);
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = 0; q < d; ++q)
                parts[p].push_back(base + p * d + q);
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t r = p + 1; r < 3; ++r)
                b.add_biclique(parts[p], parts[r]);
        for (std::size_t q = 0; q < d; ++q)
            b.add_edge(attach, parts[0][q]);
        for (std::size_t q = 0; q + 1 < d; ++q)
            b.add_edge(attach, parts[1][q]);
        for (std::size_t q = 0; q < d; ++q) {
            owner[q].insert(parts[0][q]);
            owner[detail::swapped_slot(q, d, own)].insert(parts[1][q]);
            owner[q].insert(parts[2][q]);
        }
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < l; ++j)
            gadget(lay.leaf_gadget(i, j), lay.x(i, j), i);
        gadget(lay.center_gadget(i), lay.y(i), i);
        owner[i].insert(lay.y(i));
    }

    return make_certified(std::move(b).build(), lay.assemble(std::move(owner)), CoalitionMode::open_total(2),
                          d * (l + 1), "G(" + std::to_string(d) + "," + std::to_string(l) + ")");
}

/// H(r, t): witness of size r(t+1) for double coalition.
///
/// Leaf gadgets are K_{2r} fully joined to x_{i,j}; center gadgets are K_{2r}
/// with y_i joined to all but the last two vertices. Gadget vertices are
/// dealt to V_1..V_r in consecutive pairs; in a center gadget the last pair
/// (the two vertices y_i misses) goes to V_i and pair i takes its place.
inline CertifiedInstance build_extremal_dc(std::size_t r, std::size_t t)
{
    if (r < 2)
        throw parameter_error("H(r,t) requires r >= 2");
    if (t < 4)
        throw parameter_error("H(r,t) requires t >= 4");
    if (t < 2 * r - 1)
        throw parameter_error("H(r,t) requires t >= 2r-1");

    const detail::StarChainLayout lay{r, t, 2 * r};
    GraphBuilder b(lay.order());
    lay.add_skeleton(b);

    std::vector<VertexSet> owner(r, VertexSet(lay.order()));
    auto clique = [&](vertex base) {
        std::vector<vertex> vs(2 * r);
        for (std::size_t q = 0; q < 2 * r; ++q)
            vs[q] = base + q;
        b.add_clique(vs);
        return vs;
    };
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
            auto vs = clique(lay.leaf_gadget(i, j));
            for (std::size_t q = 0; q < 2 * r; ++q) {
                b.add_edge(lay.x(i, j), vs[q]);
                owner[q / 2].insert(vs[q]);
            }
        }
        auto vs = clique(lay.center_gadget(i));
        for (std::size_t q = 0; q + 2 < 2 * r; ++q)
            b.add_edge(lay.y(i), vs[q]);
        for (std::size_t q = 0; q < 2 * r; ++q)
            owner[detail::swapped_slot(q / 2, r, i)].insert(vs[q]);
        owner[i].insert(lay.y(i));
    }

    return make_certified(std::move(b).build(), lay.assemble(std::move(owner)), CoalitionMode::double_domination(),
                          r * (t + 1), "H(" + std::to_string(r) + "," + std::to_string(t) + ")");
}

} // namespace tkc

#endif
