#ifndef TKC_GRAPH_HPP
#define TKC_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace tkc {

/// In-memory ceiling: 1024 words of adjacency bits per row.
inline constexpr std::size_t max_graph_order = 1024 * VertexSet::word_bits;

using edge = std::pair<vertex, vertex>;

class GraphBuilder;

/// Simple undirected graph stored as one open-neighborhood bit row per vertex.
///
/// Immutable once built; construct through from_edges() or GraphBuilder.
/// Connectivity is not an invariant of the type.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adj_.size(); }

    /// N(v).
    const VertexSet& neighbors(vertex v) const { return adj_.at(v); }

    /// N[v] = N(v) ∪ {v}.
    VertexSet closed_neighbors(vertex v) const
    {
        VertexSet s = adj_.at(v);
        s.insert(v);
        return s;
    }

    std::size_t degree(vertex v) const { return adj_.at(v).size(); }

    bool adjacent(vertex u, vertex v) const { return u < order() && adj_[u].contains(v); }

    std::size_t size() const noexcept
    {
        std::size_t twice = 0;
        for (const auto& row : adj_)
            twice += row.size();
        return twice / 2;
    }

    /// Edges (u, v) with u < v, ordered by v then u.
    std::vector<edge> edges() const
    {
        std::vector<edge> out;
        for (vertex v = 0; v < order(); ++v)
            for (vertex u = 0; u < v; ++u)
                if (adj_[u].contains(v))
                    out.emplace_back(u, v);
        return out;
    }

    VertexSet vertices() const { return VertexSet::full(order()); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    explicit Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

    std::vector<VertexSet> adj_;
};

/// Mutable adjacency used by generators and parsers.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n)
    {
        if (n > max_graph_order)
            throw parameter_error("graph order " + std::to_string(n) + " exceeds in-memory ceiling "
                                  + std::to_string(max_graph_order));
        adj_.assign(n, VertexSet(n));
    }

    std::size_t order() const noexcept { return adj_.size(); }

    GraphBuilder& add_edge(vertex u, vertex v)
    {
        if (u >= order() || v >= order())
            throw parameter_error("edge (" + std::to_string(u) + "," + std::to_string(v)
                                  + ") has an endpoint outside 0.." + std::to_string(order()) + "-1");
        if (u == v)
            throw parameter_error("loop at vertex " + std::to_string(u));
        adj_[u].insert(v);
        adj_[v].insert(u);
        return *this;
    }

    /// Every vertex of a adjacent to every vertex of b.
    GraphBuilder& add_biclique(std::span<const vertex> a, std::span<const vertex> b)
    {
        for (vertex u : a)
            for (vertex v : b)
                add_edge(u, v);
        return *this;
    }

    GraphBuilder& add_clique(std::span<const vertex> vs)
    {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                add_edge(vs[i], vs[j]);
        return *this;
    }

    Graph build() && { return Graph(std::move(adj_)); }
    Graph build() const& { return Graph(adj_); }

private:
    std::vector<VertexSet> adj_;
};

/// Graph on n vertices with exactly the given edges; duplicates collapse.
inline Graph from_edges(std::size_t n, std::span<const edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph from_edges(std::size_t n, std::initializer_list<edge> edges)
{
    return from_edges(n, std::span<const edge>(edges.begin(), edges.size()));
}

struct DegreeStats {
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::vector<std::size_t> sequence;
};

inline DegreeStats degree_stats(const Graph& g)
{
    if (g.order() == 0)
        throw precondition_failed("degree statistics of the empty graph");
    DegreeStats s;
    s.sequence.reserve(g.order());
    for (vertex v = 0; v < g.order(); ++v)
        s.sequence.push_back(g.degree(v));
    auto [lo, hi] = std::minmax_element(s.sequence.begin(), s.sequence.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
    return s;
}

inline std::size_t min_degree(const Graph& g) { return degree_stats(g).min_degree; }
inline std::size_t max_degree(const Graph& g) { return degree_stats(g).max_degree; }

inline bool is_regular(const Graph& g, std::size_t r)
{
    for (vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != r)
            return false;
    return g.order() > 0;
}

/// Breadth-first sweep from vertex 0.
inline bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        throw precondition_failed("connectivity of the empty graph");
    VertexSet seen(g.order());
    VertexSet frontier(g.order(), {0});
    seen.insert(0);
    while (!frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&](vertex v) { next |= g.neighbors(v); });
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen.size() == g.order();
}

inline void require_connected(const Graph& g)
{
    if (!is_connected(g))
        throw disconnected_graph("graph is not connected");
}

/// Disjoint union; vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    const std::size_t off = a.order();
    GraphBuilder out(off + b.order());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(u + off, v + off);
    return std::move(out).build();
}

/// Join a ∨ b: disjoint union plus every edge between the two blocks.
/// Left block keeps labels 0..|a|-1.
inline Graph join(const Graph& a, const Graph& b)
{
    const std::size_t off = a.order();
    GraphBuilder out(off + b.order());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(u + off, v + off);
    for (vertex u = 0; u < off; ++u)
        for (vertex v = 0; v < b.order(); ++v)
            out.add_edge(u, v + off);
    return std::move(out).build();
}

} // namespace tkc

#endif
