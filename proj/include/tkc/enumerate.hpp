#ifndef TKC_ENUMERATE_HPP
#define TKC_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace tkc {

/// Largest order the edge-mask enumerator accepts (2^21 masks at n = 7).
inline constexpr std::size_t enumerate_max_order = 7;

/// Graph whose upper-triangle bits, in graph6 column order, are `mask`.
inline Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask)
{
    GraphBuilder b(n);
    std::size_t bit = 0;
    for (vertex v = 1; v < n; ++v)
        for (vertex u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1u)
                b.add_edge(u, v);
    return std::move(b).build();
}

/// Calls fn(graph) for each of the 2^{n(n-1)/2} labeled graphs on n vertices.
template <typename Fn>
void for_each_labeled_graph(std::size_t n, Fn&& fn)
{
    if (n > enumerate_max_order)
        throw guard_exceeded("labeled enumeration supports n <= " + std::to_string(enumerate_max_order));
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m)
        fn(graph_from_edge_mask(n, m));
}

/// Connected labeled graphs with min_n <= n <= max_n and δ >= min_degree.
inline std::vector<Graph> connected_universe(std::size_t max_n, std::size_t min_degree, std::size_t min_n = 1)
{
    std::vector<Graph> out;
    for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (is_connected(g) && tkc::min_degree(g) >= min_degree)
                out.push_back(g);
        });
    return out;
}

inline constexpr std::size_t canonical_max_order = 10;

/// Isomorphism-invariant graph6: the least record over all relabelings that
/// list vertices by ascending degree. Brute force over permutations within
/// degree classes, so only for small graphs.
inline std::string canonical_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > canonical_max_order)
        throw guard_exceeded("canonical_graph6 supports n <= " + std::to_string(canonical_max_order));
    std::map<std::size_t, std::vector<vertex>> by_degree;
    for (vertex v = 0; v < n; ++v)
        by_degree[g.degree(v)].push_back(v);
    std::vector<std::vector<vertex>> classes;
    for (auto& [deg, vs] : by_degree)
        classes.push_back(vs);

    std::string best;
    std::vector<vertex> label_of(n); // new position -> old vertex
    auto emit = [&]() {
        GraphBuilder b(n);
        for (vertex i = 0; i < n; ++i)
            for (vertex j = i + 1; j < n; ++j)
                if (g.adjacent(label_of[i], label_of[j]))
                    b.add_edge(i, j);
        std::string rec = write_graph6(std::move(b).build());
        if (best.empty() || rec < best)
            best = std::move(rec);
    };
    auto recurse = [&](auto&& self, std::size_t cls, std::size_t offset) -> void {
        if (cls == classes.size()) {
            emit();
            return;
        }
        auto& vs = classes[cls];
        std::sort(vs.begin(), vs.end());
        do {
            std::copy(vs.begin(), vs.end(), label_of.begin() + static_cast<std::ptrdiff_t>(offset));
            self(self, cls + 1, offset + vs.size());
        } while (std::next_permutation(vs.begin(), vs.end()));
    };
    recurse(recurse, 0, 0);
    return best;
}

/// One representative per isomorphism class of the graphs accepted by
/// keep(g), over all labeled graphs with min_n <= n <= max_n, in order of
/// first appearance.
template <typename Keep>
std::vector<Graph> unique_graphs(std::size_t max_n, Keep&& keep, std::size_t min_n = 1)
{
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (keep(g) && seen.insert(canonical_graph6(g)).second)
                out.push_back(g);
        });
    return out;
}

/// Connected graphs up to isomorphism with δ >= min_degree.
inline std::vector<Graph> unique_connected_graphs(std::size_t max_n, std::size_t min_degree, std::size_t min_n = 1)
{
    return unique_graphs(
        max_n, [&](const Graph& g) { return is_connected(g) && tkc::min_degree(g) >= min_degree; }, min_n);
}

} // namespace tkc

#endif
